#include "disc/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace disc {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!is_pow2(static_cast<int>(n))) throw std::invalid_argument("fft: length must be a power of two");

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

void fft2d(std::vector<std::complex<double>>& a, int n, bool inverse) {
  if (a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("fft2d: buffer/size mismatch");
  std::vector<std::complex<double>> line(static_cast<std::size_t>(n));

  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) line[x] = a[static_cast<std::size_t>(y) * n + x];
    fft(line, inverse);
    for (int x = 0; x < n; ++x) a[static_cast<std::size_t>(y) * n + x] = line[x];
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) line[y] = a[static_cast<std::size_t>(y) * n + x];
    fft(line, inverse);
    for (int y = 0; y < n; ++y) a[static_cast<std::size_t>(y) * n + x] = line[y];
  }
}

}  // namespace disc
