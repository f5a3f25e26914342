#include "fdl/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fdl/errors.hpp"
#include "fdl/parallel.hpp"

namespace fdl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double clamp0(double v) { return v > 0.0 ? v : 0.0; }

void check_profile_pre(const TrigPoly&, long long N, long long n_min) {
  if (N < 64) throw DomainError("profile horizon N must be >= 64");
  if (n_min < 2 || n_min > N)
    throw DomainError("n_min must lie in [2, N]");
}

int log2_of(std::size_t M) {
  int s = 0;
  while ((std::size_t(1) << s) < M) ++s;
  return s;
}
} // namespace

const char* to_string(ProfileMode mode) {
  return mode == ProfileMode::LP ? "LP" : "CT";
}

DivergenceProfile divergence_profile(const TrigPoly& f, double x, long long N,
                                     ProfileMode /*mode*/, long long n_min) {
  check_profile_pre(f, N, n_min);
  ProfileScan scan = partial_sum_profile(f, x, N, n_min);
  DivergenceProfile prof;
  prof.x = x;
  prof.n_min = n_min;
  prof.N = N;
  prof.checkpoints = scan.checkpoints;
  prof.running_max = scan.running_max;
  for (std::size_t i = 0; i < scan.checkpoints.size(); ++i) {
    const long long n = scan.checkpoints[i];
    if (n < n_min) continue;
    const double lm = std::log(std::max(scan.running_max[i], 1e-300));
    prof.beta_poly = std::max(prof.beta_poly, clamp0(lm / std::log(double(n))));
    prof.beta_log =
        std::max(prof.beta_log, clamp0(lm / std::log(std::log(double(n)))));
  }
  return prof;
}

GridProfileResult profile_grid(const TrigPoly& f, std::size_t M, long long N,
                               long long n_min, double p) {
  check_profile_pre(f, N, n_min);
  if (!is_pow2(M) || M < 2)
    throw AliasingError("grid size must be a power of two >= 2");
  const std::vector<long long> cps = default_checkpoints(n_min, N);

  // Frequencies where any partial sum actually changes.
  struct Active {
    long long n;
    long long nmod;
    cplx cpos, cneg;
  };
  std::vector<Active> act;
  {
    const long long top = std::min<long long>(N, f.degree());
    for (long long n = 0; n <= top; ++n) {
      const cplx cp = f.coeff(n);
      const cplx cm = n == 0 ? cplx{0.0, 0.0} : f.coeff(-n);
      if (cp == cplx{0.0, 0.0} && cm == cplx{0.0, 0.0} && n != 0) continue;
      act.push_back(
          {n, n % static_cast<long long>(M), cp, cm});
    }
  }

  std::vector<cplx> w(M);
  for (std::size_t r = 0; r < M; ++r)
    w[r] = std::polar(1.0, two_pi * double(r) / double(M));

  GridProfileResult out;
  out.M = M;
  out.n_min = n_min;
  out.N = N;
  out.beta_poly.assign(M, 0.0);
  out.beta_log.assign(M, 0.0);
  std::vector<double> lpC(M, 0.0), ctC(M, 0.0);
  std::vector<long long> lpN(M, 0);
  const double invp = p > 1.0 ? 1.0 / p : 0.0;
  const long long Ml = static_cast<long long>(M);

  parallel_for(M, [&](std::size_t i) {
    cplx s{0.0, 0.0};
    double runmax = 0.0;
    double bpoly = 0.0, blog = 0.0;
    double lp_c = 0.0, ct_c = 0.0;
    long long lp_n = 0;
    std::size_t a = 0;
    const long long il = static_cast<long long>(i);
    for (const long long cp : cps) {
      while (a < act.size() && act[a].n <= cp) {
        const Active& A = act[a];
        const std::size_t r =
            static_cast<std::size_t>((A.nmod * il) % Ml);
        s += A.cpos * w[r];
        if (A.cneg != cplx{0.0, 0.0})
          s += A.cneg * std::conj(w[r]);
        const double ab = std::abs(s);
        if (ab > runmax) runmax = ab;
        if (A.n >= 1) {
          if (invp > 0.0) {
            const double v = ab / std::pow(double(A.n), invp);
            if (v > lp_c) {
              lp_c = v;
              lp_n = A.n;
            }
          }
          if (A.n >= 2) {
            const double v = ab / std::log(double(A.n));
            if (v > ct_c) ct_c = v;
          }
        }
        ++a;
      }
      if (cp >= n_min) {
        const double lm = std::log(std::max(runmax, 1e-300));
        bpoly = std::max(bpoly, clamp0(lm / std::log(double(cp))));
        blog = std::max(blog, clamp0(lm / std::log(std::log(double(cp)))));
      }
    }
    out.beta_poly[i] = bpoly;
    out.beta_log[i] = blog;
    lpC[i] = lp_c;
    ctC[i] = ct_c;
    lpN[i] = lp_n;
  });

  for (std::size_t i = 0; i < M; ++i) {
    if (lpC[i] > out.lp_envelope_C) {
      out.lp_envelope_C = lpC[i];
      out.lp_envelope_n = lpN[i];
    }
    out.ct_envelope_C = std::max(out.ct_envelope_C, ctC[i]);
  }
  return out;
}

GridPointSet level_set_grid(const TrigPoly& f, ProfileMode mode,
                            std::size_t M, long long N, double beta,
                            double eta, long long n_min) {
  GridProfileResult prof = profile_grid(f, M, N, n_min);
  const std::vector<double>& v =
      mode == ProfileMode::LP ? prof.beta_poly : prof.beta_log;
  GridPointSet S;
  S.M = M;
  for (std::size_t i = 0; i < M; ++i)
    if (v[i] >= beta - eta && v[i] <= beta + eta) S.indices.push_back(i);
  return S;
}

BoxCountFit boxcount_dimension(const GridPointSet& S, int s0, int s1) {
  if (S.indices.empty()) throw EmptySet("box count of an empty point set");
  if (!is_pow2(S.M)) throw DomainError("grid size must be a power of two");
  const int smax = log2_of(S.M);
  if (s0 < 2 || s0 >= s1 || s1 > smax)
    throw DomainError("scales must satisfy 2 <= s0 < s1 <= log2(M)");
  BoxCountFit fit;
  std::vector<double> xs, ys;
  for (int s = s0; s <= s1; ++s) {
    const int shift = smax - s;
    std::size_t occ = 0;
    std::size_t prev = std::numeric_limits<std::size_t>::max();
    for (const std::size_t idx : S.indices) {
      const std::size_t cell = idx >> shift;
      if (cell != prev) {
        ++occ;
        prev = cell;
      }
    }
    fit.occupied.push_back(occ);
    xs.push_back(double(s));
    ys.push_back(std::log2(double(occ)));
  }
  const double m = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  fit.dim = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double b = (sy - fit.dim * sx) / m;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.residual =
        std::max(fit.residual, std::abs(ys[i] - (fit.dim * xs[i] + b)));
  return fit;
}

GridPointSet grid_points_in_family(const IntervalFamily& F, std::size_t M) {
  if (!is_pow2(M)) throw DomainError("grid size must be a power of two");
  std::vector<char> hit(M, 0);
  for (const Arc& a : F.arcs) {
    if (!(a.radius > 0.0)) throw DomainError("arc radius must be positive");
    double c = a.center - std::floor(a.center);
    const double lo = c - a.radius;
    const double hi = c + a.radius;
    const long long ilo = static_cast<long long>(std::ceil(lo * double(M) - 1e-12));
    const long long ihi = static_cast<long long>(std::floor(hi * double(M) + 1e-12));
    for (long long i = ilo; i <= ihi; ++i) {
      long long r = i % static_cast<long long>(M);
      if (r < 0) r += static_cast<long long>(M);
      hit[static_cast<std::size_t>(r)] = 1;
    }
  }
  GridPointSet S;
  S.M = M;
  for (std::size_t i = 0; i < M; ++i)
    if (hit[i]) S.indices.push_back(i);
  return S;
}

double jauge_eval(const Jauge& j, double x) {
  if (!(j.s > 0.0) || !(j.t > 0.0) || j.t > 1.0)
    throw DomainError("gauge parameters need s > 0 and t in (0,1]");
  if (!(x > 0.0) || !(x < 1.0))
    throw DomainError("gauge argument must lie in (0,1)");
  return std::pow(x, j.s) * std::exp(std::pow(std::log(1.0 / x), 1.0 - j.t));
}

JaugeComparison jauge_compare(const Jauge& a, const Jauge& b) {
  JaugeComparison cmp;
  if (a.s == b.s && a.t == b.t) {
    cmp.order = JaugeOrder::Equal;
  } else if (a.s > b.s || (a.s == b.s && a.t >= b.t)) {
    cmp.order = JaugeOrder::ALessOrEqual;
  } else {
    cmp.order = JaugeOrder::BLessOrEqual;
  }
  cmp.numeric_agrees = true;
  for (const double x : {1e-4, 1e-8, 1e-12}) {
    const double fa = jauge_eval(a, x);
    const double fb = jauge_eval(b, x);
    switch (cmp.order) {
      case JaugeOrder::Equal:
        if (fa != fb) cmp.numeric_agrees = false;
        break;
      case JaugeOrder::ALessOrEqual:
        if (fa > fb * (1.0 + 1e-12)) cmp.numeric_agrees = false;
        break;
      case JaugeOrder::BLessOrEqual:
        if (fb > fa * (1.0 + 1e-12)) cmp.numeric_agrees = false;
        break;
    }
  }
  return cmp;
}

std::vector<double> jauge_mass_curve(const GridPointSet& S, const Jauge& j,
                                     int s0, int s1) {
  BoxCountFit fit = boxcount_dimension(S, s0, s1);
  std::vector<double> mass;
  mass.reserve(fit.occupied.size());
  for (std::size_t i = 0; i < fit.occupied.size(); ++i) {
    const int s = s0 + static_cast<int>(i);
    mass.push_back(double(fit.occupied[i]) *
                   jauge_eval(j, std::ldexp(1.0, -s)));
  }
  return mass;
}

SpectrumTable empirical_spectrum(const TrigPoly& f, ProfileMode mode,
                                 double p, std::size_t M, long long N,
                                 const std::vector<double>& centers,
                                 double half_width, long long n_min) {
  if (centers.empty()) throw DomainError("need at least one bin center");
  for (std::size_t i = 1; i < centers.size(); ++i)
    if (centers[i] <= centers[i - 1])
      throw DomainError("bin centers must be strictly increasing");
  if (!(half_width > 0.0)) throw DomainError("half_width must be > 0");

  GridProfileResult prof = profile_grid(f, M, N, n_min, p);
  const std::vector<double>& v =
      mode == ProfileMode::LP ? prof.beta_poly : prof.beta_log;

  SpectrumTable table;
  table.mode = mode;
  table.p = mode == ProfileMode::LP ? p : 0.0;
  table.M = M;
  table.N = N;
  table.n_min = n_min;
  std::vector<GridPointSet> sets(centers.size());
  for (std::size_t b = 0; b < centers.size(); ++b) sets[b].M = M;
  for (std::size_t i = 0; i < M; ++i) {
    // Scanning centers in ascending order sends edge ties to the lower bin.
    for (std::size_t b = 0; b < centers.size(); ++b) {
      if (v[i] >= centers[b] - half_width && v[i] <= centers[b] + half_width) {
        sets[b].indices.push_back(i);
        break;
      }
    }
  }
  const int smax = log2_of(M);
  for (std::size_t b = 0; b < centers.size(); ++b) {
    SpectrumBin bin;
    bin.center = centers[b];
    bin.half_width = half_width;
    bin.count = sets[b].indices.size();
    if (bin.count == 0) {
      bin.dim = std::numeric_limits<double>::quiet_NaN();
      bin.residual = std::numeric_limits<double>::quiet_NaN();
    } else {
      BoxCountFit fit = boxcount_dimension(sets[b], 2, smax);
      bin.dim = fit.dim;
      bin.residual = fit.residual;
    }
    table.bins.push_back(bin);
  }
  return table;
}

} // namespace fdl
