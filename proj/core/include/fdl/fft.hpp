#ifndef FDL_FFT_HPP
#define FDL_FFT_HPP

#include <complex>
#include <vector>

namespace fdl {

using cplx = std::complex<double>;

/// In-place radix-2 FFT. `a.size()` must be a power of two.
/// Forward transform uses the e^{-2 pi i jk/N} convention and no scaling;
/// the inverse uses e^{+2 pi i jk/N} and scales by 1/N, so the pair
/// round-trips to the identity.
void fft(std::vector<cplx>& a, bool inverse);

/// Forward DFT of samples: returns unscaled bin sums divided by N, i.e.
/// bin[m] = (1/N) sum_j v[j] e^{-2 pi i jm/N}, which for a trigonometric
/// polynomial sampled on an aliasing-safe grid equals its coefficient at
/// frequency m (bins indexed mod N).
std::vector<cplx> dft_coefficients(const std::vector<cplx>& samples);

/// Inverse of dft_coefficients: reconstructs samples from per-frequency
/// coefficients laid out in bins mod N.
std::vector<cplx> dft_samples(const std::vector<cplx>& bins);

/// True if n is a power of two (n >= 1).
bool is_pow2(std::size_t n);

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

} // namespace fdl

#endif
