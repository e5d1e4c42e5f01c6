#include "disc/lenia.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "disc/fft.hpp"
#include "disc/parallel.hpp"

namespace disc::lenia {

double growth_mapping(double u, double mu, double sigma) {
  if (sigma <= 0.0) throw std::invalid_argument("growth_mapping: sigma must be positive");
  const double d = u - mu;
  return 2.0 * std::exp(-(d * d) / (2.0 * sigma * sigma)) - 1.0;
}

double kernel_core(double r) {
  if (r <= 0.0 || r >= 1.0) return 0.0;
  constexpr double alpha = 4.0;
  return std::exp(alpha - alpha / (4.0 * r * (1.0 - r)));
}

double kernel_shell(double r, const std::array<double, 3>& beta) {
  constexpr int rings = 3;
  if (r < 0.0 || r >= 1.0) return 0.0;
  const double scaled = r * rings;
  const int ring = static_cast<int>(scaled);  // floor for r >= 0
  return beta[ring] * kernel_core(scaled - ring);
}

std::vector<double> kernel_image(const DynamicsParams& params, int grid_size) {
  const int radius = params.kernel_radius;
  const int n = grid_size;
  if (radius < 1) throw std::invalid_argument("kernel_image: R must be >= 1");
  if (2 * radius >= n)
    throw std::invalid_argument("kernel_image: kernel radius must be below half the grid size");

  std::vector<double> img(static_cast<std::size_t>(n) * n, 0.0);
  double sum = 0.0;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      const double dist = std::sqrt(static_cast<double>(dy) * dy + static_cast<double>(dx) * dx);
      const double v = kernel_shell(dist / radius, params.beta);
      if (v <= 0.0) continue;
      const int y = (dy + n) % n;
      const int x = (dx + n) % n;
      img[static_cast<std::size_t>(y) * n + x] = v;
      sum += v;
    }
  }
  if (sum > 0.0) {
    for (auto& v : img) v /= sum;
  }
  // sum == 0 happens only for an identically zero shell (all beta zero);
  // the zero kernel is kept and convolves everything to zero.
  return img;
}

Convolution::Convolution(const DynamicsParams& params, int grid_size, bool force_direct)
    : grid_size_(grid_size),
      radius_(params.kernel_radius),
      spectral_(!force_direct && is_pow2(grid_size) && grid_size >= 64),
      kernel_(kernel_image(params, grid_size)) {
  if (spectral_) {
    kernel_spectrum_.assign(kernel_.begin(), kernel_.end());
    fft2d(kernel_spectrum_, grid_size_, false);
  }
}

std::vector<double> Convolution::operator()(const Pattern& state) const {
  const int n = grid_size_;
  if (state.size != n) throw std::invalid_argument("convolution: grid size mismatch");
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);

  if (spectral_) {
    std::vector<std::complex<double>> buf(state.cells.begin(), state.cells.end());
    fft2d(buf, n, false);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= kernel_spectrum_[i];
    fft2d(buf, n, true);
    const double scale = 1.0 / (static_cast<double>(n) * n);
    for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real() * scale;
    return out;
  }

  // direct circular convolution, O(L^2 R^2)
  struct Tap {
    int dy, dx;
    double w;
  };
  std::vector<Tap> taps;
  for (int dy = -radius_; dy <= radius_; ++dy)
    for (int dx = -radius_; dx <= radius_; ++dx) {
      const double w = kernel_[static_cast<std::size_t>((dy + n) % n) * n + (dx + n) % n];
      if (w != 0.0) taps.push_back({dy, dx, w});
    }

  parallel_for(static_cast<std::size_t>(n), [&](std::size_t y0, std::size_t y1) {
    for (std::size_t y = y0; y < y1; ++y) {
      for (int x = 0; x < n; ++x) {
        double acc = 0.0;
        for (const Tap& t : taps) {
          const int sy = (static_cast<int>(y) - t.dy + n) % n;
          const int sx = (x - t.dx + n) % n;
          acc += t.w * state.at(sy, sx);
        }
        out[y * n + x] = acc;
      }
    }
  });
  return out;
}

Pattern step(const Pattern& state, const DynamicsParams& params, const Convolution& conv) {
  if (params.time_resolution < 1) throw std::invalid_argument("step: T must be >= 1");
  const std::vector<double> field = conv(state);
  const double inv_t = 1.0 / params.time_resolution;
  Pattern out(state.size);
  for (std::size_t i = 0; i < field.size(); ++i) {
    const double g = growth_mapping(field[i], params.growth_center, params.growth_width);
    const double v = state.cells[i] + inv_t * g;
    out.cells[i] = static_cast<float>(std::clamp(v, 0.0, 1.0));
  }
  return out;
}

Pattern step(const Pattern& state, const DynamicsParams& params) {
  return step(state, params, Convolution(params, state.size));
}

Rollout rollout(const Pattern& initial, const DynamicsParams& params, int num_steps) {
  if (num_steps < 2) throw std::invalid_argument("rollout: need at least 2 steps");
  const Convolution conv(params, initial.size);
  Rollout r;
  r.steps.reserve(static_cast<std::size_t>(num_steps));
  r.steps.push_back(initial);
  for (int t = 1; t < num_steps; ++t) r.steps.push_back(step(r.steps.back(), params, conv));
  return r;
}

}  // namespace disc::lenia
