#include "fdl/ct_saturator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fdl/errors.hpp"

namespace fdl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

void check_beta(double beta) {
  if (!(beta > 0.0) || !(beta < 1.0))
    throw DomainError("beta must lie in (0,1)");
}

void check_delta(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0 / 3.0))
    throw DomainError("delta must lie in (0,1/3)");
}

double pole_modulus(long long k, double beta) {
  return std::pow(1.0 + kk_epsilon(k, beta), double(k)); // (1+eps)^k
}

double grid_sup_abs(const TrigPoly& f, std::size_t M) {
  SampledFunction s = eval_grid(f, M);
  double m = 0.0;
  for (const cplx& z : s.v) m = std::max(m, std::abs(z));
  return m;
}
} // namespace

double kk_epsilon(long long k, double beta) {
  if (k < 1) throw DomainError("k must be >= 1");
  check_beta(beta);
  return 1.0 / (double(k) * std::exp(std::pow(std::log(double(k)), beta)));
}

cplx eval_kk_f_point(long long k, double beta, double x) {
  const double eps = kk_epsilon(k, beta);
  const cplx z = std::polar(1.0, two_pi * (x - std::floor(x)));
  cplx acc{0.0, 0.0};
  for (long long j = 0; j < k; ++j) {
    const cplx zj = std::polar(1.0, two_pi * double(j) / double(k));
    acc += (1.0 + eps) / ((1.0 + eps) - std::conj(zj) * z);
  }
  return acc / double(k);
}

SampledFunction eval_kk_f(long long k, double beta, std::size_t M,
                          KkReport* report) {
  if (k < 1) throw DomainError("k must be >= 1");
  check_beta(beta);
  if (!is_pow2(M) || M < 64 * static_cast<std::size_t>(k))
    throw AliasingError("sample grid must be a power of two >= 64k to "
                        "resolve the pole peaks");
  const double eps = kk_epsilon(k, beta);
  const double A = pole_modulus(k, beta);
  // Averaging the k simple poles over the k-th roots of unity collapses to a
  // single pole in z^k: f(z) = A / (A - z^k).
  SampledFunction s;
  s.v.resize(M);
  const long long Ml = static_cast<long long>(M);
  for (std::size_t i = 0; i < M; ++i) {
    const long long r = (static_cast<long long>(i) * k) % Ml;
    const cplx zk = std::polar(1.0, two_pi * double(r) / double(M));
    s.v[i] = A / (A - zk);
  }
  // Dual-route check: the defining k-term average must agree.
  for (int t = 0; t < 64; ++t) {
    const std::size_t i = (M / 64) * static_cast<std::size_t>(t);
    const cplx direct = eval_kk_f_point(k, beta, double(i) / double(M));
    if (std::abs(direct - s.v[i]) > 1e-10 * std::max(1.0, std::abs(direct)))
      throw Error("pole-sum evaluation mismatch between closed form and "
                  "direct average at grid index " + std::to_string(i));
  }
  if (report) {
    KkReport rep;
    rep.min_re_global = s.v[0].real();
    rep.min_abs_global = rep.max_abs_global = std::abs(s.v[0]);
    bool arcs_seen = false;
    for (std::size_t i = 0; i < M; ++i) {
      const double re = s.v[i].real();
      const double ab = std::abs(s.v[i]);
      rep.min_re_global = std::min(rep.min_re_global, re);
      rep.min_abs_global = std::min(rep.min_abs_global, ab);
      rep.max_abs_global = std::max(rep.max_abs_global, ab);
      const long long r = (static_cast<long long>(i) * k) % Ml;
      const double dist =
          double(std::min(r, Ml - r)) / (double(M) * double(k));
      if (dist <= eps / 2.0) {
        if (!arcs_seen) {
          rep.min_abs_arcs = rep.max_abs_arcs = ab;
          arcs_seen = true;
        } else {
          rep.min_abs_arcs = std::min(rep.min_abs_arcs, ab);
          rep.max_abs_arcs = std::max(rep.max_abs_arcs, ab);
        }
      }
    }
    *report = rep;
  }
  return s;
}

CtBlock build_g(long long k, double beta, std::size_t M, double tail_tol) {
  KkReport rep;
  SampledFunction f = eval_kk_f(k, beta, M, &rep);
  if (!(rep.min_re_global > 0.0))
    throw LogBranchError("Re f reaches " + std::to_string(rep.min_re_global) +
                         " on the grid; the principal logarithm needs "
                         "Re f > 0 (build bug)");
  CtBlock block;
  block.spec.beta = beta;
  block.spec.k = k;
  block.spec.epsilon = kk_epsilon(k, beta);
  block.M = M;
  block.g_samples.v.resize(M);
  for (std::size_t i = 0; i < M; ++i) {
    const cplx g = std::log(f.v[i]);
    block.g_samples.v[i] = g;
    block.sup_abs_g = std::max(block.sup_abs_g, std::abs(g));
    block.sup_im_g = std::max(block.sup_im_g, std::abs(g.imag()));
  }
  if (block.sup_im_g > std::numbers::pi / 2.0 + 1e-12)
    throw LogBranchError("imaginary part of log f exceeds pi/2");

  const long long W = (7 * static_cast<long long>(M)) / 16;
  block.g_coeffs = coefficients_from_samples(block.g_samples, -W, W, tail_tol);
  block.g_coeffs.label = "g(k=" + std::to_string(k) + ")";

  // The logarithm of a zero-free analytic extension has mean zero and a
  // one-sided spectrum; both are certified, not assumed.
  if (std::abs(block.g_coeffs.coeff(0)) > 1e-8)
    throw Error("mean of log f is " +
                std::to_string(std::abs(block.g_coeffs.coeff(0))) +
                ", expected ~0");
  double neg = 0.0, all = 0.0;
  for (long long m = -W; m <= W; ++m) {
    const double a = std::norm(block.g_coeffs.coeff(m));
    all += a;
    if (m < 0) neg += a;
  }
  if (neg > 1e-14 * all)
    throw Error("spectrum of log f is not one-sided: negative-side energy "
                "fraction " + std::to_string(neg / all));
  return block;
}

ResolveResult resolve_n(const CtBlock& partial) {
  if (partial.g_coeffs.empty())
    throw DomainError("resolve_n needs a built g");
  TrigPoly d = partial.g_coeffs;
  for (long long m = d.kmin; m <= d.kmax; ++m)
    d.at(m) = partial.g_coeffs.coeff(m) * cplx{0.0, two_pi * double(m)};
  const std::size_t M = std::max<std::size_t>(
      partial.M, next_pow2(static_cast<std::size_t>(d.width())));
  const double l1 = grid_sup_abs(d, M);
  const double l2 = grid_sup_abs(d, 2 * M);
  if (std::abs(l2 - l1) > 0.01 * std::max({l1, l2, 1e-300}))
    throw TailNotDecayed("derivative sup did not settle under grid "
                         "refinement: " + std::to_string(l1) + " vs " +
                         std::to_string(l2));
  ResolveResult r;
  r.sup_gprime = std::max(l1, l2);
  r.n = std::max<long long>(4, static_cast<long long>(std::ceil(r.sup_gprime)));
  const double lk = std::log(double(partial.spec.k));
  r.ratio = double(r.n) / (std::pow(double(partial.spec.k), 3.0) *
                           std::exp(3.0 * std::pow(lk, partial.spec.beta)));
  return r;
}

CtBlock build_P(long long k, double beta, double delta) {
  if (k < 2) throw DomainError("block build requires k >= 2");
  check_beta(beta);
  check_delta(delta);
  std::size_t M = next_pow2(64 * static_cast<std::size_t>(k));
  CtBlock block;
  long long n = 0;
  for (int attempt = 0; attempt < 24; ++attempt) {
    try {
      block = build_g(k, beta, M, 1e-10);
    } catch (const TailNotDecayed&) {
      M *= 2;
      continue;
    }
    ResolveResult r = resolve_n(block);
    n = r.n;
    block.spec.n = n;
    block.sup_gprime = r.sup_gprime;
    block.resolve_ratio = r.ratio;
    const std::size_t M_req =
        std::max(next_pow2(64 * static_cast<std::size_t>(k)),
                 8 * next_pow2(static_cast<std::size_t>(n)));
    if (M >= M_req) break;
    M = M_req;
    n = 0;
  }
  if (n == 0)
    throw TailNotDecayed("block build did not stabilize its sample grid");
  block.spec.delta = delta;

  // P = (2/pi) e_n sigma_n(Im g), with the imaginary-part window derived
  // coefficient-wise from the one-sided g.
  const long long half = std::min<long long>(n - 1, block.g_coeffs.kmax);
  TrigPoly img = TrigPoly::zeros(-half, half, "Im_g");
  img.at(0) = cplx{block.g_coeffs.coeff(0).imag(), 0.0};
  const cplx inv2i = cplx{0.0, -0.5}; // 1/(2i)
  for (long long m = 1; m <= half; ++m) {
    img.at(m) = block.g_coeffs.coeff(m) * inv2i;
    img.at(-m) = -std::conj(block.g_coeffs.coeff(m)) * inv2i;
  }
  TrigPoly P = modulate(scaled(fejer_sum(img, n), 2.0 / std::numbers::pi), n);
  P.label = "P(k=" + std::to_string(k) + ",beta=" + std::to_string(beta) + ")";
  block.P = P;

  const double supP =
      grid_sup_abs(P, next_pow2(2 * static_cast<std::size_t>(P.width())));
  if (supP > 1.0 + 1e-9)
    throw Error("sup |P| = " + std::to_string(supP) + " exceeds 1");

  // Cancellation identity: truncating P at n must reproduce |sigma_n g|/pi.
  const std::size_t Mid =
      next_pow2(4 * static_cast<std::size_t>(std::max<long long>(n, 1)));
  SampledFunction lhs = eval_grid(partial_sum(P, n), Mid);
  SampledFunction rhs = eval_grid(fejer_sum(block.g_coeffs, n), Mid);
  double sup_rhs = 0.0;
  for (const cplx& z : rhs.v) sup_rhs = std::max(sup_rhs, std::abs(z));
  double worst = 0.0;
  for (std::size_t i = 0; i < Mid; ++i)
    worst = std::max(worst, std::abs(std::abs(lhs.v[i]) -
                                     std::abs(rhs.v[i]) / std::numbers::pi));
  if (worst > 1e-8 * std::max(1.0, sup_rhs / std::numbers::pi))
    throw Error("partial-sum identity deviates by " + std::to_string(worst));
  return block;
}

CtBoundReport verify_ct_bound(const CtBlock& block, int pts_per_arc) {
  if (block.P.empty() || block.spec.n < 4)
    throw DomainError("verify_ct_bound needs a complete block");
  if (pts_per_arc < 2) throw DomainError("need at least 2 points per arc");
  const long long k = block.spec.k;
  const long long n = block.spec.n;
  const double eps = block.spec.epsilon;
  const TrigPoly Sn = partial_sum(block.P, n);
  const double loglog_n = std::log(std::log(double(n)));
  CtBoundReport rep;
  rep.spec = block.spec;
  rep.required = (1.0 - block.spec.delta) * block.spec.beta;
  const double threshold = std::exp(rep.required * loglog_n);
  rep.rows.reserve(static_cast<std::size_t>(k) *
                   static_cast<std::size_t>(pts_per_arc));
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (long long arc = 0; arc < k; ++arc) {
    for (int t = 0; t < pts_per_arc; ++t) {
      const double off =
          eps * (double(t) / double(pts_per_arc - 1) - 0.5);
      const double x = double(arc) / double(k) + off;
      const double snp = std::abs(eval_sparse(Sn, x));
      CtBoundRow row;
      row.arc = arc;
      row.x = x;
      row.snp = snp;
      row.threshold = threshold;
      row.holds = snp >= threshold * (1.0 - 1e-12);
      rep.rows.push_back(row);
      const double ratio =
          std::log(std::max(snp, 1e-300)) / loglog_n;
      rep.min_ratio = std::min(rep.min_ratio, ratio);
    }
  }
  rep.flag = rep.min_ratio >= rep.required - 1e-12;
  return rep;
}

TrigPoly build_saturating_ct(const std::vector<double>& betas,
                             const std::vector<double>& deltas,
                             const std::vector<double>& eps_weights, int jmax,
                             long long k_min, long long k_cap,
                             std::vector<CtPlacedBlock>* placement) {
  if (jmax < 1) throw DomainError("jmax must be >= 1");
  if (jmax > 6)
    throw GenerationTooLarge("jmax = " + std::to_string(jmax) +
                             " exceeds the supported cap 6");
  const std::size_t need = static_cast<std::size_t>(jmax);
  if (betas.size() < need || deltas.size() < need || eps_weights.size() < need)
    throw DomainError("betas, deltas, eps_weights must have at least jmax "
                      "entries");
  for (std::size_t a = 0; a < need; ++a) {
    check_beta(betas[a]);
    check_delta(deltas[a]);
    for (std::size_t b = a + 1; b < need; ++b)
      if (betas[a] == betas[b])
        throw DomainError("betas must be pairwise distinct");
  }
  double wsum = 0.0;
  for (std::size_t a = 0; a < need; ++a) {
    if (!(eps_weights[a] > 0.0)) throw DomainError("weights must be > 0");
    wsum += eps_weights[a];
  }
  if (wsum > 1.0 + 1e-12)
    throw DomainError("weights must sum to at most 1");
  if (k_min < 2 || k_cap < k_min)
    throw DomainError("need 2 <= k_min <= k_cap");

  struct Placed {
    CtPlacedBlock info;
    TrigPoly part; // weight * e_n P, ready to splice
  };
  std::vector<Placed> blocks;
  long long prev_n = 0;
  long long k = k_min;
  for (int j = 1; j <= jmax; ++j) {
    for (int l = 1; l <= j; ++l) {
      const double beta = betas[static_cast<std::size_t>(l - 1)];
      const double delta = deltas[static_cast<std::size_t>(l - 1)];
      const long long n_needed = prev_n == 0 ? 4 : 3 * prev_n + (l == 1 ? 1 : 0);
      CtBlock blk;
      for (;;) {
        blk = build_P(k, beta, delta);
        if (blk.spec.n >= n_needed) break;
        if (k >= k_cap)
          throw GenerationTooLarge(
              "spectral placement for block (" + std::to_string(j) + "," +
              std::to_string(l) + ") needs k beyond the cap " +
              std::to_string(k_cap));
        k *= 2;
      }
      const long long n = blk.spec.n;
      if (3 * n - 1 > (1ll << 23))
        throw GenerationTooLarge("composite degree would exceed 2^23");
      const double w =
          eps_weights[static_cast<std::size_t>(l - 1)] / (double(j) * double(j));
      Placed pl;
      pl.info = CtPlacedBlock{j, l, k, n, beta, delta, w};
      pl.part = modulate(scaled(blk.P, w), n);
      blocks.push_back(std::move(pl));
      prev_n = n;
    }
  }
  const long long lo = blocks.front().part.kmin;
  const long long hi = blocks.back().part.kmax;
  TrigPoly g = TrigPoly::zeros(lo, hi, "sat_ct");
  for (const Placed& pl : blocks) {
    for (long long m = pl.part.kmin; m <= pl.part.kmax; ++m) {
      const cplx c = pl.part.coeff(m);
      if (c != cplx{0.0, 0.0}) g.at(m) += c;
    }
    if (placement) placement->push_back(pl.info);
  }
  return g;
}

} // namespace fdl
