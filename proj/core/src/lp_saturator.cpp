#include "fdl/lp_saturator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fdl/dyadic.hpp"
#include "fdl/errors.hpp"

namespace fdl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

void check_Jj(int J, int j) {
  if (J < 1 || J > j) throw DomainError("block indices require 1 <= J <= j");
  if (j > 16) throw GenerationTooLarge("generation j = " + std::to_string(j) +
                                       " exceeds the supported cap 16");
}

void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw DomainError("the exponent p must lie in (1, infinity)");
}

double sinc(double u) {
  if (u == 0.0) return 1.0;
  const double a = std::numbers::pi * u;
  return std::sin(a) / a;
}
} // namespace

double lp_block_coefficient(int J, int j, double p) {
  check_Jj(J, j);
  check_p(p);
  return std::exp2(-double(J - j + 1) / p) / double(j);
}

long long lp_block_first(int J, int j) {
  check_Jj(J, j);
  return (2ll * J - 1) * (1ll << j) - ((1ll << j) - 1);
}

long long lp_block_last(int J, int j) {
  check_Jj(J, j);
  return (2ll * J - 1) * (1ll << j) + ((1ll << j) - 1);
}

TrigPoly build_chi(int J, int j) {
  check_Jj(J, j);
  const std::string label =
      "chi(" + std::to_string(J) + "," + std::to_string(j) + ")";
  if (J == j) {
    // The plateau arcs alone tile the circle, so the bump degenerates to 1.
    TrigPoly one = TrigPoly::zeros(0, 0, label);
    one.at(0) = cplx{1.0, 0.0};
    return one;
  }
  // One bump is the convolution of two boxes (half-widths 3*2^{-j-1} and
  // 2^{-j-1}) scaled to peak height 1; summing the phases over the odd
  // centers K/2^J keeps only multiples of 2^{J-1}, with alternating sign.
  const long long n = 1ll << j;
  TrigPoly f = TrigPoly::zeros(-n, n, label);
  const long long step = 1ll << (J - 1);
  const double area = 3.0 * std::ldexp(1.0, -j); // per-bump mean value
  for (long long m = -n; m <= n; m += step) {
    if (m % step != 0) continue;
    const long long q = m / step;
    const double u = std::ldexp(double(m), -j);
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    f.at(m) = cplx{sign * double(step) * area * sinc(3.0 * u) * sinc(u), 0.0};
  }
  return f;
}

TrigPoly build_block(int J, int j, double p) {
  check_p(p);
  TrigPoly s = fejer_sum(build_chi(J, j), 1ll << j);
  TrigPoly b = modulate(s, (2ll * J - 1) * (1ll << j));
  b.label = "block(" + std::to_string(J) + "," + std::to_string(j) + ")";
  return b;
}

TrigPoly build_gj(int j, double p) {
  if (j < 3)
    throw DomainError("generation j must be >= 3 (mean order 2^j >= 8)");
  if (j > 16)
    throw GenerationTooLarge("generation j = " + std::to_string(j) +
                             " exceeds the supported cap 16");
  check_p(p);
  TrigPoly g = TrigPoly::zeros(lp_block_first(1, j),
                               lp_block_last(j, j), "g" + std::to_string(j));
  for (int J = 1; J <= j; ++J) {
    const TrigPoly b = build_block(J, j, p);
    const double c = lp_block_coefficient(J, j, p);
    for (long long k = b.kmin; k <= b.kmax; ++k) g.at(k) += c * b.coeff(k);
  }
  return g;
}

TrigPoly build_saturating_lp(double p, int jmax) {
  if (jmax < 3) throw DomainError("jmax must be >= 3");
  if (jmax > 14)
    throw GenerationTooLarge("jmax = " + std::to_string(jmax) +
                             " exceeds the supported cap 14");
  check_p(p);
  const long long lo = 3ll * (1ll << 4) + lp_block_first(1, 3);
  const long long hi =
      static_cast<long long>(jmax) * (1ll << (jmax + 1)) +
      lp_block_last(jmax, jmax);
  TrigPoly g = TrigPoly::zeros(lo, hi, "sat_lp");
  for (int j = 3; j <= jmax; ++j) {
    const TrigPoly gj = build_gj(j, p);
    const long long offset = static_cast<long long>(j) * (1ll << (j + 1));
    const double w = 1.0 / (double(j) * double(j));
    for (long long k = gj.kmin; k <= gj.kmax; ++k)
      g.at(offset + k) += w * gj.coeff(k);
  }
  return g;
}

TrigPoly with_block_perturbation(const TrigPoly& f, int j, double p) {
  TrigPoly block = modulate(build_gj(j, p),
                            static_cast<long long>(j) * (1ll << (j + 1)));
  TrigPoly h = plus(f, scaled(block, cplx{1.0 / double(j), 0.0}));
  h.label = f.label + "+block" + std::to_string(j);
  return h;
}

JumpWitness witness_jump(const TrigPoly& f, double x, int J, int j, double p,
                         bool shifted) {
  if (j < 3) throw DomainError("witness requires j >= 3");
  check_Jj(J, j);
  check_p(p);
  const double radius = std::ldexp(1.0, -j);
  const double dist = dist_to_generation(x, J);
  if (dist > radius * (1.0 + 1e-12))
    throw PointOutsideFamily(
        "point at distance " + std::to_string(dist) +
        " from the nearest generation-" + std::to_string(J) +
        " center; plateau radius is " + std::to_string(radius));

  const long long offset =
      shifted ? static_cast<long long>(j) * (1ll << (j + 1)) : 0ll;
  JumpWitness w;
  w.x = x;
  w.n1 = offset + lp_block_first(J, j) - 1;
  w.n2 = offset + lp_block_last(J, j);

  // S_{n2} - S_{n1} keeps exactly the frequencies n1 < |k| <= n2.
  cplx acc{0.0, 0.0};
  const double xr = x - std::floor(x);
  auto add_range = [&](long long klo, long long khi) {
    klo = std::max(klo, f.kmin);
    khi = std::min(khi, f.kmax);
    if (khi < klo) return;
    const cplx step = std::polar(1.0, two_pi * xr);
    cplx ph = std::polar(1.0, two_pi * (double(klo) * xr -
                                        std::floor(double(klo) * xr)));
    for (long long k = klo; k <= khi; ++k) {
      acc += f.coeff(k) * ph;
      ph *= step;
    }
  };
  add_range(w.n1 + 1, w.n2);
  add_range(-w.n2, -w.n1 - 1);
  w.gap = std::abs(acc);
  w.bound = lp_block_coefficient(J, j, p) / 4.0;
  if (shifted) w.bound /= double(j) * double(j);
  w.holds = w.gap >= w.bound - 1e-12;
  return w;
}

} // namespace fdl
