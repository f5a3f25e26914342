#include "fdl/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdl/errors.hpp"

namespace fdl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
} // namespace

long long TrigPoly::degree() const {
  if (empty()) return 0;
  return std::max(std::llabs(kmin), std::llabs(kmax));
}

cplx TrigPoly::coeff(long long k) const {
  if (empty() || k < kmin || k > kmax) return {0.0, 0.0};
  return c[static_cast<std::size_t>(k - kmin)];
}

cplx& TrigPoly::at(long long k) {
  if (empty() || k < kmin || k > kmax)
    throw DomainError("coefficient index " + std::to_string(k) +
                      " lies outside the stored window");
  return c[static_cast<std::size_t>(k - kmin)];
}

TrigPoly TrigPoly::zeros(long long kmin, long long kmax, std::string label) {
  if (kmax < kmin)
    throw DomainError("cannot allocate a coefficient window with kmax < kmin");
  TrigPoly f;
  f.label = std::move(label);
  f.kmin = kmin;
  f.kmax = kmax;
  f.c.assign(static_cast<std::size_t>(kmax - kmin + 1), cplx{0.0, 0.0});
  return f;
}

TrigPoly TrigPoly::basis(long long k) {
  TrigPoly f = zeros(k, k, "e_" + std::to_string(k));
  f.c[0] = cplx{1.0, 0.0};
  return f;
}

TrigPoly modulate(const TrigPoly& f, long long n) {
  TrigPoly g = f;
  if (!g.empty()) {
    g.kmin += n;
    g.kmax += n;
  }
  return g;
}

TrigPoly scaled(const TrigPoly& f, cplx a) {
  TrigPoly g = f;
  for (auto& z : g.c) z *= a;
  return g;
}

TrigPoly plus(const TrigPoly& f, const TrigPoly& g) {
  if (f.empty()) return g;
  if (g.empty()) return f;
  TrigPoly h =
      TrigPoly::zeros(std::min(f.kmin, g.kmin), std::max(f.kmax, g.kmax));
  for (long long k = f.kmin; k <= f.kmax; ++k) h.at(k) += f.coeff(k);
  for (long long k = g.kmin; k <= g.kmax; ++k) h.at(k) += g.coeff(k);
  return h;
}

TrigPoly partial_sum(const TrigPoly& f, long long n) {
  if (n < 0) throw DomainError("partial sum order must be >= 0");
  long long lo = std::max(f.kmin, -n);
  long long hi = std::min(f.kmax, n);
  if (f.empty() || hi < lo) {
    TrigPoly z;
    z.label = f.label;
    return z;
  }
  TrigPoly g = TrigPoly::zeros(lo, hi, f.label);
  for (long long k = lo; k <= hi; ++k) g.at(k) = f.coeff(k);
  return g;
}

TrigPoly fejer_sum(const TrigPoly& f, long long n) {
  if (n < 1) throw DomainError("triangular mean order must be >= 1");
  long long lo = std::max(f.kmin, -(n - 1));
  long long hi = std::min(f.kmax, n - 1);
  if (f.empty() || hi < lo) {
    TrigPoly z;
    z.label = f.label;
    return z;
  }
  TrigPoly g = TrigPoly::zeros(lo, hi, f.label);
  for (long long k = lo; k <= hi; ++k)
    g.at(k) = f.coeff(k) * (1.0 - double(std::llabs(k)) / double(n));
  return g;
}

cplx eval(const TrigPoly& f, double x) {
  if (f.empty()) return {0.0, 0.0};
  // f(x) = e^{2 pi i kmin x} * sum_j c[j] e^{2 pi i j x}
  const cplx step = std::polar(1.0, two_pi * x);
  cplx w{1.0, 0.0};
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < f.c.size(); ++j) {
    acc += f.c[j] * w;
    w *= step;
    if ((j & 511u) == 511u) w /= std::abs(w); // keep |w| = 1 on long windows
  }
  const double base = two_pi * (double(f.kmin) * x -
                                std::floor(double(f.kmin) * x));
  return std::polar(1.0, base) * acc;
}

cplx eval_partial(const TrigPoly& f, long long n, double x) {
  return eval(partial_sum(f, n), x);
}

cplx eval_sparse(const TrigPoly& f, double x) {
  x -= std::floor(x);
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == cplx{0.0, 0.0}) continue;
    const long long k = f.kmin + static_cast<long long>(i);
    const long double ph = static_cast<long double>(k) * x;
    const double frac = static_cast<double>(ph - std::floor(ph));
    acc += f.c[i] * std::polar(1.0, two_pi * frac);
  }
  return acc;
}

SampledFunction eval_grid(const TrigPoly& f, std::size_t M) {
  if (!is_pow2(M))
    throw AliasingError("grid size " + std::to_string(M) +
                        " is not a power of two");
  if (static_cast<long long>(M) < f.width())
    throw AliasingError(
        "grid size " + std::to_string(M) +
        " cannot separate a coefficient window of width " +
        std::to_string(f.width()));
  std::vector<cplx> bins(M, cplx{0.0, 0.0});
  for (long long k = f.kmin; k <= f.kmax; ++k)
    bins[static_cast<std::size_t>(
        floor_mod(k, static_cast<long long>(M)))] += f.coeff(k);
  SampledFunction s;
  s.v = dft_samples(bins);
  return s;
}

SampledFunction partial_sum_grid(const TrigPoly& f, std::size_t M,
                                 long long n) {
  if (!is_pow2(M))
    throw AliasingError("grid size " + std::to_string(M) +
                        " is not a power of two");
  const long long span = f.empty() ? 0 : f.kmax - f.kmin;
  if (static_cast<long long>(M) <= span + 2 * n)
    throw AliasingError("grid size " + std::to_string(M) +
                        " is too small for window span " +
                        std::to_string(span) + " plus partial-sum order " +
                        std::to_string(n));
  return eval_grid(partial_sum(f, n), M);
}

TrigPoly coefficients_from_samples(const SampledFunction& s, long long kmin,
                                   long long kmax, double tail_tol) {
  const std::size_t M = s.size();
  if (!is_pow2(M) || M == 0)
    throw AliasingError("sample count must be a positive power of two");
  if (kmax < kmin) throw DomainError("requested window has kmax < kmin");
  if (kmax - kmin + 1 > static_cast<long long>(M))
    throw AliasingError("requested window of width " +
                        std::to_string(kmax - kmin + 1) +
                        " exceeds the sample rate " + std::to_string(M));
  std::vector<cplx> hat = dft_coefficients(s.v);
  // Certify decay near the folding frequency: bins whose centered frequency
  // j satisfies |j| >= (7/16) M and that lie outside the requested window
  // must be negligibly small, otherwise the samples are under-resolved.
  const long long half = static_cast<long long>(M) / 2;
  const long long band = half - static_cast<long long>(M) / 16;
  double worst = 0.0;
  long long worst_j = 0;
  for (long long j = -half; j < half; ++j) {
    if (std::llabs(j) < band) continue;
    if (j >= kmin && j <= kmax) continue;
    const double a =
        std::abs(hat[static_cast<std::size_t>(
            floor_mod(j, static_cast<long long>(M)))]);
    if (a > worst) {
      worst = a;
      worst_j = j;
    }
  }
  if (worst > tail_tol)
    throw TailNotDecayed("coefficient modulus " + std::to_string(worst) +
                         " at frequency " + std::to_string(worst_j) +
                         " near the folding edge exceeds " +
                         std::to_string(tail_tol));
  TrigPoly f = TrigPoly::zeros(kmin, kmax);
  for (long long k = kmin; k <= kmax; ++k)
    f.at(k) = hat[static_cast<std::size_t>(
        floor_mod(k, static_cast<long long>(M)))];
  return f;
}

double lp_norm(const TrigPoly& f, double p, std::size_t M) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw DomainError("lp_norm requires a finite exponent p > 1");
  if (!is_pow2(M) || static_cast<long long>(M) < 4 * f.width())
    throw AliasingError("lp_norm grid must be a power of two >= four times "
                        "the window width");
  if (f.empty()) return 0.0;
  SampledFunction s = eval_grid(f, M);
  double acc = 0.0;
  for (const cplx& z : s.v) acc += std::pow(std::abs(z), p);
  return std::pow(acc / double(M), 1.0 / p);
}

double lp_norm_certified(const TrigPoly& f, double p, double tol,
                         std::size_t M0, int max_doublings) {
  if (f.empty()) return 0.0;
  std::size_t M = M0 ? M0 : next_pow2(static_cast<std::size_t>(
                                std::max<long long>(4 * f.width(), 64)));
  double prev = lp_norm(f, p, M);
  for (int d = 0; d < max_doublings; ++d) {
    M *= 2;
    const double cur = lp_norm(f, p, M);
    if (std::abs(cur - prev) <= tol) return cur;
    prev = cur;
  }
  throw TailNotDecayed("L^p quadrature did not settle to " +
                       std::to_string(tol) + " after grid doubling");
}

std::vector<long long> default_checkpoints(long long n_min, long long N) {
  if (N < n_min)
    throw DomainError("profile range is empty: N < n_min");
  std::vector<long long> cps;
  double v = double(n_min);
  const double ratio = std::pow(2.0, 0.25);
  while (v < double(N)) {
    const long long n = static_cast<long long>(std::llround(v));
    if (cps.empty() || n > cps.back()) cps.push_back(std::min(n, N));
    v *= ratio;
  }
  if (cps.empty() || cps.back() != N) cps.push_back(N);
  return cps;
}

ProfileScan partial_sum_profile(const TrigPoly& f, double x, long long N,
                                long long n_min, double weight,
                                std::vector<long long> checkpoints) {
  if (N < 0) throw DomainError("profile horizon N must be >= 0");
  ProfileScan out;
  out.n_min = n_min;
  out.N = N;
  out.checkpoints =
      checkpoints.empty() ? default_checkpoints(n_min, N) : std::move(checkpoints);
  for (std::size_t i = 0; i < out.checkpoints.size(); ++i) {
    if (out.checkpoints[i] > N || out.checkpoints[i] < 0)
      throw DomainError("checkpoint outside [0, N]");
    if (i && out.checkpoints[i] <= out.checkpoints[i - 1])
      throw DomainError("checkpoints must be strictly increasing");
  }
  out.value.resize(out.checkpoints.size(), cplx{0.0, 0.0});
  out.running_max.resize(out.checkpoints.size(), 0.0);

  x -= std::floor(x);
  const cplx stepp = std::polar(1.0, two_pi * x);
  const cplx stepm = std::conj(stepp);
  cplx wp = stepp, wm = stepm; // phases at frequency n = 1
  cplx s = f.coeff(0);
  double cur_abs = std::abs(s);
  out.max_abs = cur_abs;
  out.argmax_n = 0;
  const long long deg = f.degree();
  std::size_t cp = 0;
  auto note_checkpoints = [&](long long n) {
    while (cp < out.checkpoints.size() && out.checkpoints[cp] == n) {
      out.value[cp] = s;
      out.running_max[cp] = out.max_abs;
      ++cp;
    }
  };
  note_checkpoints(0);
  for (long long n = 1; n <= N; ++n) {
    if (n <= deg) {
      const cplx cp_ = f.coeff(n);
      const cplx cm_ = f.coeff(-n);
      if (cp_ != cplx{0.0, 0.0}) s += cp_ * wp;
      if (cm_ != cplx{0.0, 0.0}) s += cm_ * wm;
      wp *= stepp;
      wm *= stepm;
      if ((n & 511) == 511) {
        wp /= std::abs(wp);
        wm /= std::abs(wm);
      }
      cur_abs = std::abs(s);
      if (cur_abs > out.max_abs) {
        out.max_abs = cur_abs;
        out.argmax_n = n;
      }
      if (weight > 0.0) {
        const double wv = cur_abs / std::pow(double(n), weight);
        if (wv > out.weighted_max) {
          out.weighted_max = wv;
          out.weighted_argmax_n = n;
        }
      }
      note_checkpoints(n);
    } else {
      // The sum is settled; remaining checkpoints see the final value, and
      // the weighted ratio only shrinks as n grows.
      note_checkpoints(n);
      if (cp >= out.checkpoints.size()) break;
      if (cp < out.checkpoints.size()) {
        // jump straight to the next checkpoint
        const long long nxt = out.checkpoints[cp];
        if (nxt > n) n = nxt - 1;
      }
    }
  }
  if (weight > 0.0 && out.weighted_argmax_n == 0 && N >= 1) {
    out.weighted_max = cur_abs / std::pow(double(std::max<long long>(deg, 1)),
                                          weight);
    out.weighted_argmax_n = std::max<long long>(deg, 1);
  }
  return out;
}

} // namespace fdl
