#pragma once

#include <complex>
#include <vector>

namespace disc {

bool is_pow2(int n);

// In-place radix-2 FFT of length n = a.size() (power of two).
void fft(std::vector<std::complex<double>>& a, bool inverse);

// In-place 2D FFT over an n*n row-major buffer. inverse=true applies the
// unnormalized inverse; callers divide by n*n once after a round trip.
void fft2d(std::vector<std::complex<double>>& a, int n, bool inverse);

}  // namespace disc
