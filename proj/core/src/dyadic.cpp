#include "fdl/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdl/errors.hpp"

namespace fdl {

double DyadicRational::value() const { return std::ldexp(double(K), -J); }

DyadicRational DyadicRational::from_fraction(unsigned long long k, int j) {
  if (k == 0)
    throw DomainError("zero has no canonical odd numerator");
  if (j < 1 || j > 62 || k >= (1ull << j))
    throw DomainError("dyadic fraction must lie in (0,1) with depth in [1,62]");
  while ((k & 1ull) == 0ull) {
    k >>= 1;
    --j;
  }
  DyadicRational d;
  d.K = k;
  d.J = j;
  return d;
}

namespace {
double canon(double t) {
  t -= std::floor(t);
  return t == 1.0 ? 0.0 : t;
}

// Unrolls the circle onto [0, 2): every arc is placed so that its span
// intersects [0, 1], and a copy shifted by +1 is added when it also wraps.
struct Seg {
  double lo, hi;
};

std::vector<Seg> unroll(const IntervalFamily& F) {
  std::vector<Seg> segs;
  for (const Arc& a : F.arcs) {
    if (!(a.radius > 0.0))
      throw DomainError("arc radius must be positive");
    if (a.radius >= 0.5) {
      segs.push_back({0.0, 1.0});
      continue;
    }
    const double c = canon(a.center);
    segs.push_back({c - a.radius, c + a.radius});
    if (c - a.radius < 0.0) segs.push_back({c - a.radius + 1.0, c + a.radius + 1.0});
    if (c + a.radius > 1.0) segs.push_back({c - a.radius - 1.0, c + a.radius - 1.0});
  }
  std::sort(segs.begin(), segs.end(),
            [](const Seg& p, const Seg& q) { return p.lo < q.lo; });
  return segs;
}
} // namespace

double measure_sum(const IntervalFamily& F) {
  double s = 0.0;
  for (const Arc& a : F.arcs) s += std::min(2.0 * a.radius, 1.0);
  return s;
}

double union_measure(const IntervalFamily& F) {
  if (F.arcs.empty()) return 0.0;
  std::vector<Seg> segs = unroll(F);
  // Measure of the union restricted to [0, 1] equals the circle measure.
  double total = 0.0;
  double cur_lo = 0.0, cur_hi = -1.0;
  for (const Seg& s : segs) {
    const double lo = std::max(s.lo, 0.0);
    const double hi = std::min(s.hi, 1.0);
    if (hi <= lo) continue;
    if (cur_hi < cur_lo) {
      cur_lo = lo;
      cur_hi = hi;
    } else if (lo <= cur_hi) {
      cur_hi = std::max(cur_hi, hi);
    } else {
      total += cur_hi - cur_lo;
      cur_lo = lo;
      cur_hi = hi;
    }
  }
  if (cur_hi >= cur_lo) total += cur_hi - cur_lo;
  return std::min(total, 1.0);
}

bool arcs_disjoint(const IntervalFamily& F) {
  const double s = measure_sum(F);
  if (s > 1.0) return false;
  return union_measure(F) >= s - 1e-15 * std::max(1.0, double(F.arcs.size()));
}

bool covering_check(const IntervalFamily& F) {
  if (F.arcs.empty()) return false;
  std::vector<Seg> segs = unroll(F);
  double reach = 0.0;
  bool started = false;
  for (const Seg& s : segs) {
    if (s.lo > (started ? reach : 0.0)) break;
    started = true;
    reach = std::max(reach, s.hi);
    if (reach >= 1.0) return true;
  }
  return false;
}

IntervalFamily interval_family_IJj(int J, int j, bool primed) {
  if (J < 1 || J > j)
    throw DomainError("interval family requires 1 <= J <= j");
  if (j > 60) throw DomainError("generation depth above 60 is not supported");
  IntervalFamily F;
  F.label = (primed ? "IJj_primed(" : "IJj(") + std::to_string(J) + "," +
            std::to_string(j) + ")";
  const double radius = std::ldexp(1.0, primed ? 1 - j : -j);
  const unsigned long long count = 1ull << (J - 1);
  F.arcs.reserve(count);
  for (unsigned long long i = 0; i < count; ++i) {
    const unsigned long long K = 2 * i + 1;
    F.arcs.push_back(Arc{std::ldexp(double(K), -J), radius});
  }
  return F;
}

IntervalFamily ikbeta_family(long long k, double beta) {
  if (k < 2) throw DomainError("ikbeta_family requires k >= 2");
  if (!(beta > 0.0) || !(beta < 1.0))
    throw DomainError("ikbeta_family requires beta in (0,1)");
  const double eps = 1.0 / (double(k) * std::exp(std::pow(std::log(double(k)), beta)));
  IntervalFamily F;
  F.label = "Ikbeta(" + std::to_string(k) + "," + std::to_string(beta) + ")";
  F.arcs.reserve(static_cast<std::size_t>(k));
  for (long long j = 0; j < k; ++j)
    F.arcs.push_back(Arc{double(j) / double(k), eps / 2.0});
  return F;
}

ExponentPoint point_with_exponent(double alpha, int depth) {
  if (!(alpha >= 1.0)) throw DomainError("alpha must be >= 1");
  if (depth < 2) throw DomainError("depth must be >= 2");
  ExponentPoint p;
  p.digits.reserve(static_cast<std::size_t>(depth));
  long long a = 2;
  for (int m = 0; m < depth; ++m) {
    p.digits.push_back(a);
    if (m + 1 < depth) {
      long long next;
      if (alpha == 1.0) {
        next = a + 1;
      } else {
        const double an = alpha * double(a);
        if (an > 1e15) throw DepthOverflow("digit position overflows");
        next = static_cast<long long>(std::ceil(an));
        if (next <= a) next = a + 1;
      }
      a = next;
    }
  }
  if (p.digits.back() - p.digits.front() > 52)
    throw DepthOverflow(
        "digit span " +
        std::to_string(p.digits.back() - p.digits.front()) +
        " exceeds exact double-precision width");
  double x = 0.0;
  for (long long d : p.digits) x += std::ldexp(1.0, -static_cast<int>(d));
  p.x = x;
  return p;
}

double dist_to_generation(double x, int J) {
  if (J < 1 || J > 62) throw DomainError("generation must lie in [1, 62]");
  const double u = std::ldexp(canon(x), J);
  const double base = std::floor(u);
  double best = 2.0;
  for (int off = -1; off <= 2; ++off) {
    const double k = base + double(off);
    if (std::fmod(std::abs(k), 2.0) != 1.0) continue;
    best = std::min(best, std::abs(u - k));
  }
  return std::ldexp(best, -J);
}

double dyadic_exponent_estimate(double x, int jmax) {
  if (jmax < 4) throw DomainError("jmax must be >= 4");
  x = canon(x);
  double best = 1.0;
  for (int j = 4; j <= jmax; ++j) {
    const double scaled = std::ldexp(x, j);
    const double k = std::nearbyint(scaled);
    const double diff = std::abs(scaled - k);
    if (diff == 0.0)
      throw ExactDyadic("point is exactly a dyadic rational of depth " +
                        std::to_string(j));
    const double dist = std::ldexp(diff, -j);
    best = std::max(best, std::log(1.0 / dist) / (double(j) * std::numbers::ln2));
  }
  return best;
}

} // namespace fdl
