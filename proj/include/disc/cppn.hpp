#pragma once

#include <string>
#include <vector>

#include "disc/grid.hpp"
#include "disc/rng.hpp"

namespace disc::cppn {

enum class Activation { gauss, sigm };

struct NodeGene {
  int id = 0;
  Activation act = Activation::gauss;
  bool operator==(const NodeGene&) const = default;
};

struct ConnGene {
  int src = 0;
  int dst = 0;
  double weight = 0.0;
  bool enabled = true;
  bool operator==(const ConnGene&) const = default;
};

/// Recurrent pattern-producing network genome.
///
/// Inputs are fixed and not stored as nodes: 0 = bias (1), 1 = x, 2 = y,
/// 3 = distance to grid center. Node 4 is the single output; hidden nodes
/// get ids from 5 upward. Recurrent and self connections are allowed.
struct Genome {
  static constexpr int num_inputs = 4;
  static constexpr int output_id = 4;

  std::vector<NodeGene> nodes;  // output node plus hidden nodes
  std::vector<ConnGene> conns;
  int next_node_id = 5;

  bool operator==(const Genome&) const = default;
};

/// Init/mutation meta-parameters.
struct MutationConfig {
  int initial_hidden = 4;
  double initial_connection_prob = 0.6;
  double weight_init_mean = 0.0;
  double weight_init_stddev = 0.4;
  double weight_min = -3.0;
  double weight_max = 3.0;
  double node_add_prob = 0.02;
  double node_delete_prob = 0.02;
  double conn_add_prob = 0.05;
  double conn_delete_prob = 0.01;
  double activation_mutate_rate = 0.1;
  double weight_mutate_rate = 0.05;
  double weight_replace_rate = 0.06;
  double weight_mutate_power = 1.0;
  double enable_toggle_rate = 0.02;
};

// gauss(x) = 2 exp(-(2.5 x)^2) - 1; sigm(x) = 2 / (1 + exp(-5x)) - 1.
double activation_gauss(double x);
double activation_sigm(double x);
double apply_activation(Activation a, double x);

Genome sample_genome(const MutationConfig& cfg, Rng& rng);
Genome mutate_genome(const Genome& g, const MutationConfig& cfg, Rng& rng);

// Evaluates the network per cell with `passes` synchronous propagation steps
// (node states start at 0) and maps the output p to activity 1 - |p|.
// Cell coordinates are mapped to x, y in [-2, 2]; d = sqrt(x^2 + y^2).
Pattern render_pattern(const Genome& g, int grid_size, int passes = 2);

// True when every connection endpoint refers to an input, the output, or an
// existing hidden node, and node ids are unique.
bool valid_genome(const Genome& g);

// Text serialization; round-trips weights exactly.
std::string serialize(const Genome& g);
Genome deserialize(const std::string& text);

}  // namespace disc::cppn
