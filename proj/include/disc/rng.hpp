#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace disc {

// splitmix64 finalizer, used to derive well-mixed stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seedable random source with explicit, portable distributions.
///
/// The generator is std::mt19937_64 (fully specified by the standard) and
/// every distribution is implemented here rather than via std::*_distribution,
/// so that a given seed yields the same draw sequence on every platform.
/// Streams are derived from a master seed with mix64, which keeps independent
/// concerns (parameter sampling, goal sampling, training) on independent
/// streams: adding draws to one stream never shifts another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng derive(std::uint64_t master, std::uint64_t stream, std::uint64_t index = 0) {
    return Rng(mix64(mix64(master ^ mix64(stream)) ^ index));
  }

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi], inclusive
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(bounded(span));
  }

  std::size_t uniform_index(std::size_t n) { return static_cast<std::size_t>(bounded(n)); }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; the spare value is cached, so draw order is still deterministic
  double normal(double mean = 0.0, double stddev = 1.0) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + stddev * spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return mean + stddev * radius * std::cos(angle);
  }

 private:
  // Lemire-style bounded draw with rejection, unbiased
  std::uint64_t bounded(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t x = 0;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Named rng streams; values are arbitrary but frozen (part of reproducibility).
namespace stream {
inline constexpr std::uint64_t params = 0x70617261;
inline constexpr std::uint64_t goal = 0x676f616c;
inline constexpr std::uint64_t vae_init = 0x76696e69;
inline constexpr std::uint64_t vae_train = 0x7674726e;
inline constexpr std::uint64_t dataset = 0x64617461;
inline constexpr std::uint64_t gallery = 0x67616c79;
}  // namespace stream

}  // namespace disc
