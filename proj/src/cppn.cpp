#include "disc/cppn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace disc::cppn {

double activation_gauss(double x) {
  const double z = 2.5 * x;
  return 2.0 * std::exp(-z * z) - 1.0;
}

double activation_sigm(double x) { return 2.0 / (1.0 + std::exp(-5.0 * x)) - 1.0; }

double apply_activation(Activation a, double x) {
  return a == Activation::gauss ? activation_gauss(x) : activation_sigm(x);
}

namespace {

double clip(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

double init_weight(const MutationConfig& cfg, Rng& rng) {
  return clip(rng.normal(cfg.weight_init_mean, cfg.weight_init_stddev), cfg.weight_min,
              cfg.weight_max);
}

Activation random_activation(Rng& rng) {
  return rng.bernoulli(0.5) ? Activation::gauss : Activation::sigm;
}

// Connection sources are inputs and all nodes; destinations are all nodes
// (never inputs). Enumerated in a fixed order so sampling is reproducible.
std::vector<std::pair<int, int>> potential_pairs(const Genome& g) {
  std::vector<int> sources, dests;
  for (int i = 0; i < Genome::num_inputs; ++i) sources.push_back(i);
  for (const auto& n : g.nodes) {
    sources.push_back(n.id);
    dests.push_back(n.id);
  }
  std::sort(sources.begin(), sources.end());
  std::sort(dests.begin(), dests.end());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(sources.size() * dests.size());
  for (int s : sources)
    for (int d : dests) pairs.emplace_back(s, d);
  return pairs;
}

}  // namespace

Genome sample_genome(const MutationConfig& cfg, Rng& rng) {
  Genome g;
  g.nodes.push_back({Genome::output_id, random_activation(rng)});
  for (int i = 0; i < cfg.initial_hidden; ++i)
    g.nodes.push_back({g.next_node_id++, random_activation(rng)});

  for (const auto& [src, dst] : potential_pairs(g)) {
    if (!rng.bernoulli(cfg.initial_connection_prob)) continue;
    g.conns.push_back({src, dst, init_weight(cfg, rng), true});
  }
  return g;
}

Genome mutate_genome(const Genome& input, const MutationConfig& cfg, Rng& rng) {
  Genome g = input;

  // structural mutations first, then per-gene attribute mutations
  if (rng.bernoulli(cfg.node_add_prob) && !g.conns.empty()) {
    std::vector<std::size_t> enabled;
    for (std::size_t i = 0; i < g.conns.size(); ++i)
      if (g.conns[i].enabled) enabled.push_back(i);
    if (!enabled.empty()) {
      const std::size_t pick = enabled[rng.uniform_index(enabled.size())];
      ConnGene& split = g.conns[pick];
      split.enabled = false;
      const int new_id = g.next_node_id++;
      g.nodes.push_back({new_id, random_activation(rng)});
      g.conns.push_back({split.src, new_id, 1.0, true});
      g.conns.push_back({new_id, split.dst, split.weight, true});
    }
  }

  if (rng.bernoulli(cfg.node_delete_prob)) {
    std::vector<std::size_t> hidden;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (g.nodes[i].id != Genome::output_id) hidden.push_back(i);
    if (!hidden.empty()) {
      const int victim = g.nodes[hidden[rng.uniform_index(hidden.size())]].id;
      std::erase_if(g.nodes, [victim](const NodeGene& n) { return n.id == victim; });
      std::erase_if(g.conns,
                    [victim](const ConnGene& c) { return c.src == victim || c.dst == victim; });
    }
  }

  if (rng.bernoulli(cfg.conn_add_prob)) {
    std::set<std::pair<int, int>> existing;
    for (const auto& c : g.conns) existing.insert({c.src, c.dst});
    std::vector<std::pair<int, int>> candidates;
    for (const auto& p : potential_pairs(g))
      if (!existing.contains(p)) candidates.push_back(p);
    if (!candidates.empty()) {
      const auto [src, dst] = candidates[rng.uniform_index(candidates.size())];
      g.conns.push_back({src, dst, init_weight(cfg, rng), true});
    }
  }

  if (rng.bernoulli(cfg.conn_delete_prob) && !g.conns.empty()) {
    g.conns.erase(g.conns.begin() +
                  static_cast<std::ptrdiff_t>(rng.uniform_index(g.conns.size())));
  }

  for (auto& node : g.nodes)
    if (rng.bernoulli(cfg.activation_mutate_rate)) node.act = random_activation(rng);

  for (auto& conn : g.conns) {
    // single draw decides perturb vs replace, neat-style
    const double r = rng.uniform();
    if (r < cfg.weight_mutate_rate) {
      conn.weight =
          clip(conn.weight + rng.normal(0.0, cfg.weight_mutate_power), cfg.weight_min,
               cfg.weight_max);
    } else if (r < cfg.weight_mutate_rate + cfg.weight_replace_rate) {
      conn.weight = init_weight(cfg, rng);
    }
    if (rng.bernoulli(cfg.enable_toggle_rate)) conn.enabled = !conn.enabled;
  }

  return g;
}

Pattern render_pattern(const Genome& g, int grid_size, int passes) {
  const int n = grid_size;
  Pattern out(n);

  // dense node indexing for the evaluation loop
  std::unordered_map<int, int> slot;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) slot[g.nodes[i].id] = static_cast<int>(i);

  struct Edge {
    int dst_slot;
    int src_slot;  // -1..-4 encode inputs 0..3
    double weight;
  };
  std::vector<Edge> edges;
  for (const auto& c : g.conns) {
    if (!c.enabled) continue;
    auto it = slot.find(c.dst);
    if (it == slot.end()) continue;
    int src_slot;
    if (c.src < Genome::num_inputs) {
      src_slot = -1 - c.src;
    } else {
      auto sit = slot.find(c.src);
      if (sit == slot.end()) continue;
      src_slot = sit->second;
    }
    edges.push_back({it->second, src_slot, c.weight});
  }

  const int output_slot = slot.at(Genome::output_id);
  const int count = static_cast<int>(g.nodes.size());
  std::vector<double> state(count), sums(count), next(count);

  const double denom = n > 1 ? n - 1.0 : 1.0;
  for (int row = 0; row < n; ++row) {
    const double y = -2.0 + 4.0 * row / denom;
    for (int col = 0; col < n; ++col) {
      const double x = -2.0 + 4.0 * col / denom;
      const double inputs[4] = {1.0, x, y, std::sqrt(x * x + y * y)};

      std::fill(state.begin(), state.end(), 0.0);
      for (int pass = 0; pass < passes; ++pass) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (const Edge& e : edges) {
          const double v = e.src_slot < 0 ? inputs[-1 - e.src_slot] : state[e.src_slot];
          sums[e.dst_slot] += e.weight * v;
        }
        for (int i = 0; i < count; ++i) next[i] = apply_activation(g.nodes[i].act, sums[i]);
        state.swap(next);
      }

      const double p = clip(state[output_slot], -1.0, 1.0);
      out.at(row, col) = static_cast<float>(1.0 - std::abs(p));
    }
  }
  return out;
}

bool valid_genome(const Genome& g) {
  std::set<int> ids;
  bool has_output = false;
  for (const auto& n : g.nodes) {
    if (n.id < Genome::num_inputs) return false;
    if (!ids.insert(n.id).second) return false;
    if (n.id == Genome::output_id) has_output = true;
  }
  if (!has_output) return false;
  for (const auto& c : g.conns) {
    if (c.src >= Genome::num_inputs && !ids.contains(c.src)) return false;
    if (c.dst < Genome::num_inputs || !ids.contains(c.dst)) return false;
  }
  return true;
}

std::string serialize(const Genome& g) {
  std::ostringstream os;
  os << "cppn 1\n";
  os << "next " << g.next_node_id << "\n";
  os << "nodes " << g.nodes.size() << "\n";
  for (const auto& n : g.nodes)
    os << "node " << n.id << " " << (n.act == Activation::gauss ? "gauss" : "sigm") << "\n";
  os << "conns " << g.conns.size() << "\n";
  char buf[64];
  for (const auto& c : g.conns) {
    std::snprintf(buf, sizeof(buf), "%.17g", c.weight);
    os << "conn " << c.src << " " << c.dst << " " << buf << " " << (c.enabled ? 1 : 0) << "\n";
  }
  os << "end\n";
  return os.str();
}

Genome deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  int version = 0;
  if (!(is >> tok >> version) || tok != "cppn" || version != 1)
    throw std::runtime_error("cppn::deserialize: bad header");

  Genome g;
  std::size_t n_nodes = 0, n_conns = 0;
  if (!(is >> tok >> g.next_node_id) || tok != "next")
    throw std::runtime_error("cppn::deserialize: missing next id");
  if (!(is >> tok >> n_nodes) || tok != "nodes")
    throw std::runtime_error("cppn::deserialize: missing node count");
  for (std::size_t i = 0; i < n_nodes; ++i) {
    NodeGene n;
    std::string act;
    if (!(is >> tok >> n.id >> act) || tok != "node")
      throw std::runtime_error("cppn::deserialize: bad node record");
    if (act == "gauss")
      n.act = Activation::gauss;
    else if (act == "sigm")
      n.act = Activation::sigm;
    else
      throw std::runtime_error("cppn::deserialize: unknown activation " + act);
    g.nodes.push_back(n);
  }
  if (!(is >> tok >> n_conns) || tok != "conns")
    throw std::runtime_error("cppn::deserialize: missing connection count");
  for (std::size_t i = 0; i < n_conns; ++i) {
    ConnGene c;
    int enabled = 0;
    if (!(is >> tok >> c.src >> c.dst >> c.weight >> enabled) || tok != "conn")
      throw std::runtime_error("cppn::deserialize: bad connection record");
    c.enabled = enabled != 0;
    g.conns.push_back(c);
  }
  if (!(is >> tok) || tok != "end") throw std::runtime_error("cppn::deserialize: missing end");
  if (!valid_genome(g)) throw std::runtime_error("cppn::deserialize: invalid genome");
  return g;
}

}  // namespace disc::cppn
