#pragma once

#include <array>
#include <complex>
#include <vector>

#include "disc/grid.hpp"

namespace disc::lenia {

/// Settings controlling the update dynamics.
struct DynamicsParams {
  int kernel_radius = 13;                    // R, cells
  int time_resolution = 10;                  // T, update is scaled by 1/T
  double growth_center = 0.15;               // mu
  double growth_width = 0.015;               // sigma
  std::array<double, 3> beta = {1, 1, 1};    // kernel shell ring peaks
};

/// Sequence of grid states A^{t=1..M}; steps[0] is the initial state.
struct Rollout {
  std::vector<Pattern> steps;
  int length() const { return static_cast<int>(steps.size()); }
  const Pattern& final_pattern() const { return steps.back(); }
};

// G(u; mu, sigma) = 2*exp(-(u-mu)^2 / (2 sigma^2)) - 1, in [-1, 1].
double growth_mapping(double u, double mu, double sigma);

// Ring profile K_C(r) = exp(alpha - alpha / (4 r (1-r))) with alpha = 4,
// zero outside (0, 1).
double kernel_core(double r);

// Shell K_S(r) = beta[floor(3r)] * K_C(3r mod 1) for r in [0, 1), zero beyond.
double kernel_shell(double r, const std::array<double, 3>& beta);

// Normalized kernel as an L*L image wrapped at the origin (entry (dy mod L,
// dx mod L) holds the weight for offset (dy, dx)). Entries sum to 1 unless the
// shell is identically zero, in which case the all-zero kernel is returned.
// Throws std::invalid_argument for R < 1 or R >= L/2.
std::vector<double> kernel_image(const DynamicsParams& params, int grid_size);

/// Precomputed convolution operator for one (params, grid size) pair.
///
/// Uses the spectral backend (FFT) for power-of-two grids of size >= 64 and
/// direct summation otherwise; both agree within 1e-6 per cell.
class Convolution {
 public:
  Convolution(const DynamicsParams& params, int grid_size, bool force_direct = false);

  std::vector<double> operator()(const Pattern& state) const;

  bool spectral() const { return spectral_; }
  const std::vector<double>& kernel() const { return kernel_; }

 private:
  int grid_size_;
  int radius_;
  bool spectral_;
  std::vector<double> kernel_;
  std::vector<std::complex<double>> kernel_spectrum_;
};

// One update: A' = clip(A + (1/T) * G(K*A; mu, sigma), 0, 1).
Pattern step(const Pattern& state, const DynamicsParams& params, const Convolution& conv);

// Convenience single-step with a freshly built kernel.
Pattern step(const Pattern& state, const DynamicsParams& params);

// Simulates M-1 updates; result has length M with steps[0] == initial.
Rollout rollout(const Pattern& initial, const DynamicsParams& params, int num_steps);

}  // namespace disc::lenia
