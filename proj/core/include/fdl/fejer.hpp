#ifndef FDL_FEJER_HPP
#define FDL_FEJER_HPP

#include <cstdint>

#include "fdl/trigpoly.hpp"

namespace fdl {

/// The two bound shapes verified by check_fejer_localization:
/// EQ1 is the tight form (requires n >= 8), EQ2 the coarse form (n >= 4).
enum class FejerForm { EQ1, EQ2 };

const char* to_string(FejerForm form);

/// One verified localization bound for the triangular mean at a zero of
/// theta: lhs = |sigma_n theta(x)|, rhs the form's bound, holds their
/// comparison with 1e-12 roundoff slack.
struct FejerBoundReport {
  long long n = 0;
  double delta = 0.0;
  double u_n = 0.0;
  FejerForm bound_form = FejerForm::EQ1;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// The localization weight u(n, delta) = 2 * integral_0^{delta/n} of
/// (sin(n pi y)/sin(pi y))^2 * y dy, by adaptive quadrature to absolute
/// error <= 1e-6. Requires n >= 1 and delta in (0, 2].
double fejer_tail_u(long long n, double delta);

/// Verifies the localization bound for the order-n triangular mean at a zero
/// of a slope-limited function theta, given as equispaced samples.
///
/// Preconditions (HypothesisViolated when any fails): theta is real-valued,
/// theta(x) = 0 within 1e-9, the estimated sup of |theta'| is <= n, and
/// n >= 8 for the tight form / n >= 4 for the coarse form.
///
/// The slope sup is estimated by spectral differentiation on the sample grid
/// and again on a 2x refined grid; if the two estimates disagree by more
/// than 1% (non-smooth data, e.g. piecewise-linear ramps), the estimate
/// falls back to the max difference quotient of the raw samples.
FejerBoundReport check_fejer_localization(const SampledFunction& theta,
                                          long long n, double x,
                                          FejerForm form);

/// A randomized admissible input for falsification runs: a real random
/// trigonometric polynomial rescaled so its slope sup is about 0.9 * n and
/// shifted to vanish at the returned point x.
struct AdmissibleTheta {
  SampledFunction samples;
  double x = 0.0;
};
AdmissibleTheta random_admissible_theta(std::uint64_t seed, long long n,
                                        std::size_t M);

} // namespace fdl

#endif
