#include "fdl/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdl {

bool is_pow2(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double s = 1.0 / double(n);
    for (auto& x : a) x *= s;
  }
}

std::vector<cplx> dft_coefficients(const std::vector<cplx>& samples) {
  std::vector<cplx> bins = samples;
  fft(bins, false);
  const double s = 1.0 / double(bins.size());
  for (auto& x : bins) x *= s;
  return bins;
}

std::vector<cplx> dft_samples(const std::vector<cplx>& bins) {
  std::vector<cplx> v = bins;
  fft(v, true);
  const double s = double(v.size());
  for (auto& x : v) x *= s;
  return v;
}

} // namespace fdl
