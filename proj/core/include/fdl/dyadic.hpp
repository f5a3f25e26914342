#ifndef FDL_DYADIC_HPP
#define FDL_DYADIC_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fdl {

/// A dyadic rational K / 2^J in canonical form: K odd, 0 < K < 2^J, J >= 1.
struct DyadicRational {
  unsigned long long K = 1;
  int J = 1;

  double value() const;
  /// Canonicalizes k / 2^j by stripping common powers of two. Rejects k = 0
  /// and values outside (0, 1).
  static DyadicRational from_fraction(unsigned long long k, int j);
};

/// One closed arc on the circle, |t - center| <= radius (mod 1).
struct Arc {
  double center = 0.0; // canonical representative in [0,1)
  double radius = 0.0; // > 0
};

/// A finite labeled family of arcs.
struct IntervalFamily {
  std::vector<Arc> arcs;
  std::string label;
};

/// Sum of arc lengths min(2*radius, 1) — the family's measure when disjoint.
double measure_sum(const IntervalFamily& F);

/// Exact measure of the union of the arcs (endpoint sweep).
double union_measure(const IntervalFamily& F);

/// True when no two arcs overlap in more than an endpoint.
bool arcs_disjoint(const IntervalFamily& F);

/// True iff the union of the (closed) arcs covers the whole circle.
bool covering_check(const IntervalFamily& F);

/// The family of 2^{J-1} arcs of radius 2^{-j} (2^{1-j} when primed)
/// centered at the generation-J dyadics, the odd multiples of 2^{-J}.
/// Requires 1 <= J <= j.
IntervalFamily interval_family_IJj(int J, int j, bool primed = false);

/// The k arcs of radius eps/2 centered at j/k, j = 0..k-1, where
/// eps = 1 / (k * exp((log k)^beta)). Requires k >= 2, beta in (0,1).
IntervalFamily ikbeta_family(long long k, double beta);

/// A point with prescribed approximability by dyadics, as a lacunary digit
/// sum x = sum_m 2^{-a_m} with a_1 = 2 and a_{m+1} = ceil(alpha * a_m)
/// (consecutive gaps for alpha = 1). The digit positions are reported
/// exactly; partial sums K_m/2^{a_m} approximate x to within 2^{1-a_{m+1}}.
struct ExponentPoint {
  double x = 0.0;
  std::vector<long long> digits; // the exponents a_1 < a_2 < ... < a_depth
};

/// Requires alpha >= 1, depth >= 2. DepthOverflow when the digit span
/// exceeds what a double represents exactly.
ExponentPoint point_with_exponent(double alpha, int depth);

/// Circle distance from x to the nearest odd multiple of 2^{-J}.
double dist_to_generation(double x, int J);

/// Finite-depth proxy of the dyadic approximation exponent:
/// max over 4 <= j <= jmax of log(1 / dist(x, nearest k/2^j)) / (j log 2),
/// clamped to >= 1. ExactDyadic when x is exactly a dyadic of depth <= jmax.
double dyadic_exponent_estimate(double x, int jmax);

} // namespace fdl

#endif
