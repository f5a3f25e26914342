#ifndef FDL_TRIGPOLY_HPP
#define FDL_TRIGPOLY_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fdl/fft.hpp"

namespace fdl {

/// A trigonometric polynomial stored as a dense window of complex
/// coefficients: f(x) = sum_{k=kmin}^{kmax} c[k-kmin] e^{2 pi i k x}.
/// An empty window (kmax < kmin) is the zero polynomial.
struct TrigPoly {
  std::string label;
  long long kmin = 0;
  long long kmax = -1;
  std::vector<cplx> c;

  bool empty() const { return kmax < kmin; }
  long long width() const { return empty() ? 0 : kmax - kmin + 1; }
  /// Largest |k| carried by the window (0 for the zero polynomial).
  long long degree() const;
  /// Coefficient at frequency k (zero outside the window).
  cplx coeff(long long k) const;
  /// Mutable access to a coefficient inside the window.
  cplx& at(long long k);

  static TrigPoly zeros(long long kmin, long long kmax, std::string label = "");
  /// The single exponential e_k.
  static TrigPoly basis(long long k);
};

/// Samples of a 1-periodic function at t_i = i/M, i = 0..M-1 (M power of two).
struct SampledFunction {
  std::string label;
  std::vector<cplx> v;
  std::size_t size() const { return v.size(); }
  double t(std::size_t i) const { return double(i) / double(v.size()); }
};

/// e_n * f: shifts the coefficient window by n.
TrigPoly modulate(const TrigPoly& f, long long n);

/// f scaled by a constant.
TrigPoly scaled(const TrigPoly& f, cplx a);

/// Coefficient-wise sum over the union window.
TrigPoly plus(const TrigPoly& f, const TrigPoly& g);

/// Symmetric partial sum: keeps frequencies |k| <= n.
TrigPoly partial_sum(const TrigPoly& f, long long n);

/// Triangular-weight mean of the first n partial sums, (1/n) sum_{k<n} S_k:
/// coefficient at k is scaled by max(0, 1 - |k|/n). Requires n >= 1.
TrigPoly fejer_sum(const TrigPoly& f, long long n);

/// Value of f at x by direct summation (phase-stepped, renormalized).
cplx eval(const TrigPoly& f, double x);

/// Value of the symmetric partial sum S_n f at x.
cplx eval_partial(const TrigPoly& f, long long n, double x);

/// Value at x summing only the stored nonzero coefficients, with
/// extended-precision phase reduction per term. Fast for sparse windows.
cplx eval_sparse(const TrigPoly& f, double x);

/// Values of f on the grid t_i = i/M via FFT. M must be a power of two with
/// M >= width, otherwise distinct frequencies would collide mod M
/// (AliasingError).
SampledFunction eval_grid(const TrigPoly& f, std::size_t M);

/// Values of S_n f on the grid t_i = i/M. Preconditions: M is a power of two
/// and M > (kmax - kmin) + 2n; violations raise AliasingError.
SampledFunction partial_sum_grid(const TrigPoly& f, std::size_t M, long long n);

/// Recovers the coefficient window [kmin, kmax] of a sampled function by DFT.
/// Certifies decay: the largest bin modulus in the top eighth of frequencies
/// near the Nyquist edge must be <= tail_tol, otherwise TailNotDecayed.
/// The requested window must fit the sample rate (AliasingError).
TrigPoly coefficients_from_samples(const SampledFunction& s, long long kmin,
                                   long long kmax, double tail_tol);

/// L^p norm (1 < p < infinity) by the equispaced quadrature mean over M grid
/// points: (mean |f|^p)^{1/p}. M must be a power of two >= 4*width.
double lp_norm(const TrigPoly& f, double p, std::size_t M);

/// lp_norm with the grid doubled until two successive estimates differ by
/// less than tol (absolute); starts at M0 (default: smallest admissible).
double lp_norm_certified(const TrigPoly& f, double p, double tol = 1e-6,
                         std::size_t M0 = 0, int max_doublings = 10);

/// Result of an incremental sweep of partial sums S_n f(x) over 0 <= n <= N.
/// `running_max[i]` is the exact max of |S_n f(x)| over n <= checkpoints[i]
/// (the maximum is scanned at every n, not only at checkpoints).
struct ProfileScan {
  long long n_min = 16;
  long long N = 0;
  std::vector<long long> checkpoints;
  std::vector<cplx> value;         // S_cp f(x) at each checkpoint
  std::vector<double> running_max; // max_{n <= cp} |S_n f(x)|
  double max_abs = 0.0;            // max over all n <= N
  long long argmax_n = 0;          // smallest n attaining max_abs
  double weighted_max = 0.0;       // max over 1 <= n <= N of |S_n|/n^w
  long long weighted_argmax_n = 0;
};

/// Geometric checkpoint ladder: n_min, ~2^{1/4} steps, deduplicated, ending
/// exactly at N.
std::vector<long long> default_checkpoints(long long n_min, long long N);

/// Incremental partial-sum sweep at one point; cost O(kmax - kmin + N weight
/// bookkeeping). If weight w > 0, also tracks max_n |S_n f(x)| / n^w.
ProfileScan partial_sum_profile(const TrigPoly& f, double x, long long N,
                                long long n_min = 16, double weight = 0.0,
                                std::vector<long long> checkpoints = {});

} // namespace fdl

#endif
