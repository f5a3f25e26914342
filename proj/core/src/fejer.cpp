#include "fdl/fejer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fdl/errors.hpp"
#include "fdl/kernels.hpp"
#include "fdl/quadrature.hpp"

namespace fdl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

TrigPoly derivative(const TrigPoly& f) {
  TrigPoly d = f;
  for (long long k = f.kmin; k <= f.kmax; ++k)
    d.at(k) = f.coeff(k) * cplx{0.0, two_pi * double(k)};
  return d;
}

double grid_sup_abs(const TrigPoly& f, std::size_t M) {
  SampledFunction s = eval_grid(f, M);
  double m = 0.0;
  for (const cplx& z : s.v) m = std::max(m, std::abs(z));
  return m;
}
} // namespace

const char* to_string(FejerForm form) {
  return form == FejerForm::EQ1 ? "EQ1" : "EQ2";
}

double fejer_tail_u(long long n, double delta) {
  if (n < 1) throw DomainError("fejer_tail_u requires n >= 1");
  if (!(delta > 0.0) || delta > 2.0)
    throw DomainError("fejer_tail_u requires delta in (0, 2]");
  const double upper = delta / double(n);
  const double val = adaptive_simpson(
      [n](double y) { return double(n) * fejer_kernel(n, y) * y; }, 0.0,
      upper, 1e-8);
  return 2.0 * val;
}

FejerBoundReport check_fejer_localization(const SampledFunction& theta,
                                          long long n, double x,
                                          FejerForm form) {
  const std::size_t M = theta.size();
  if (!is_pow2(M) || M < 16)
    throw AliasingError("localization check needs a power-of-two sample "
                        "grid of at least 16 points");
  const long long min_n = form == FejerForm::EQ1 ? 8 : 4;
  if (n < min_n)
    throw HypothesisViolated("mean order " + std::to_string(n) +
                             " is below the form's minimum " +
                             std::to_string(min_n));

  double sup_theta = 0.0, sup_imag = 0.0;
  for (const cplx& z : theta.v) {
    sup_theta = std::max(sup_theta, std::abs(z.real()));
    sup_imag = std::max(sup_imag, std::abs(z.imag()));
  }
  if (sup_imag > 1e-9 * std::max(1.0, sup_theta))
    throw HypothesisViolated("input samples are not real-valued");

  const long long W = (7 * static_cast<long long>(M)) / 16;
  TrigPoly f = coefficients_from_samples(theta, -W, W, 1e-8);

  const double at_x = std::abs(eval(f, x));
  if (at_x > 1e-9)
    throw HypothesisViolated("theta does not vanish at the given point: |theta(x)| = " +
                             std::to_string(at_x));

  // Slope sup: spectral estimate, cross-checked on a doubled grid; on
  // disagreement (non-smooth data) fall back to the raw difference quotient,
  // which never exceeds the true Lipschitz constant of the sampled function.
  const TrigPoly d = derivative(f);
  const double l1 = grid_sup_abs(d, M);
  const double l2 = grid_sup_abs(d, 2 * M);
  double slope;
  if (std::abs(l2 - l1) <= 0.01 * std::max({l1, l2, 1e-300})) {
    slope = std::max(l1, l2);
  } else {
    slope = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
      const double a = theta.v[i].real();
      const double b = theta.v[(i + 1) % M].real();
      slope = std::max(slope, std::abs(b - a) * double(M));
    }
  }
  if (slope > double(n) * (1.0 + 1e-9) + 1e-9)
    throw HypothesisViolated("slope sup estimate " + std::to_string(slope) +
                             " exceeds the mean order " + std::to_string(n));

  FejerBoundReport rep;
  rep.n = n;
  rep.bound_form = form;
  rep.delta = form == FejerForm::EQ1 ? 1.0 : 2.0;
  rep.u_n = fejer_tail_u(n, rep.delta);
  rep.lhs = std::abs(eval(fejer_sum(f, n), x));
  rep.rhs = form == FejerForm::EQ1 ? 0.25 + sup_theta / 2.0
                                   : 4.0 + sup_theta / 4.0;
  rep.holds = rep.lhs <= rep.rhs + 1e-12;
  return rep;
}

AdmissibleTheta random_admissible_theta(std::uint64_t seed, long long n,
                                        std::size_t M) {
  if (!is_pow2(M) || M < 64)
    throw DomainError("sample grid must be a power of two >= 64");
  if (n < 4) throw DomainError("mean order must be >= 4");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const long long d = std::max<long long>(
      2, std::min<long long>(n / 2, static_cast<long long>(M) / 8));
  TrigPoly f = TrigPoly::zeros(-d, d);
  f.at(0) = cplx{gauss(rng), 0.0};
  for (long long k = 1; k <= d; ++k) {
    const cplx c{gauss(rng) / double(k), gauss(rng) / double(k)};
    f.at(k) = c;
    f.at(-k) = std::conj(c); // keep the polynomial real-valued
  }
  const double slope = grid_sup_abs(derivative(f), 4 * M);
  if (slope > 0.0) f = scaled(f, 0.9 * double(n) / slope);
  std::uniform_int_distribution<std::size_t> pick(0, M - 1);
  const double x = double(pick(rng)) / double(M);
  f.at(0) -= eval(f, x).real();
  SampledFunction s = eval_grid(f, M);
  for (cplx& z : s.v) z = cplx{z.real(), 0.0};
  return AdmissibleTheta{std::move(s), x};
}

} // namespace fdl
