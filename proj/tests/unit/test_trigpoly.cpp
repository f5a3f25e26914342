#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fdl/errors.hpp"
#include "fdl/trigpoly.hpp"

using namespace fdl;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

TrigPoly random_poly(long long kmin, long long kmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  TrigPoly f = TrigPoly::zeros(kmin, kmax);
  for (cplx& z : f.c) z = cplx{gauss(rng), gauss(rng)};
  return f;
}

// Term-by-term reference evaluation, no phase recurrences.
cplx eval_reference(const TrigPoly& f, double x) {
  cplx acc = 0.0;
  for (long long k = f.kmin; k <= f.kmax; ++k)
    acc += f.coeff(k) * std::polar(1.0, two_pi * double(k) * x);
  return acc;
}

} // namespace

TEST_CASE("window accessors") {
  TrigPoly f = TrigPoly::zeros(-3, 5);
  CHECK(f.width() == 9);
  CHECK(f.degree() == 5);
  f.at(-3) = cplx{1.0, 0.0};
  f.at(5) = cplx{0.0, 2.0};
  CHECK(f.coeff(-3) == cplx{1.0, 0.0});
  CHECK(f.coeff(7) == cplx{0.0, 0.0}); // outside the window
  const TrigPoly b = TrigPoly::basis(4);
  CHECK(b.kmin == 4);
  CHECK(b.kmax == 4);
  CHECK(b.coeff(4) == cplx{1.0, 0.0});
  const TrigPoly empty;
  CHECK(empty.empty());
  CHECK(empty.width() == 0);
  CHECK(empty.degree() == 0);
}

TEST_CASE("evaluation matches the term-by-term reference") {
  const TrigPoly f = random_poly(-17, 23, 42);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    const double x = unif(rng);
    const cplx want = eval_reference(f, x);
    CHECK(std::abs(eval(f, x) - want) < 1e-10);
    CHECK(std::abs(eval_sparse(f, x) - want) < 1e-10);
  }
}

TEST_CASE("long phase recurrences stay accurate") {
  const TrigPoly f = random_poly(-3000, 3000, 9);
  const double x = 0.6180339887498949;
  CHECK(std::abs(eval(f, x) - eval_reference(f, x)) < 1e-8);
}

TEST_CASE("grid evaluation agrees with pointwise evaluation") {
  const TrigPoly f = random_poly(-12, 20, 3);
  const std::size_t M = 64;
  const SampledFunction s = eval_grid(f, M);
  REQUIRE(s.size() == M);
  for (std::size_t i = 0; i < M; ++i)
    CHECK(std::abs(s.v[i] - eval(f, s.t(i))) < 1e-10);
  CHECK_THROWS_AS((void)eval_grid(f, 16), AliasingError); // 16 < width 33
  CHECK_THROWS_AS((void)eval_grid(f, 48), AliasingError); // not a power of two
}

TEST_CASE("algebraic operations act on coefficients") {
  const TrigPoly f = random_poly(-4, 6, 1);
  const TrigPoly g = random_poly(-8, 2, 2);
  const cplx a{2.0, -1.0};
  const TrigPoly h = plus(scaled(f, a), g);
  for (long long k = -8; k <= 6; ++k)
    CHECK(std::abs(h.coeff(k) - (a * f.coeff(k) + g.coeff(k))) < 1e-15);
  const TrigPoly m = modulate(f, 10);
  CHECK(m.kmin == 6);
  CHECK(m.kmax == 16);
  for (long long k = -4; k <= 6; ++k)
    CHECK(m.coeff(k + 10) == f.coeff(k));
  // modulation is evaluation-side multiplication by e_10
  const double x = 0.31;
  CHECK(std::abs(eval(m, x) -
                 eval(f, x) * std::polar(1.0, two_pi * 10.0 * x)) < 1e-10);
}

TEST_CASE("partial sum truncates symmetrically and is idempotent") {
  const TrigPoly f = random_poly(-9, 14, 4);
  const TrigPoly s = partial_sum(f, 6);
  CHECK(s.degree() <= 6);
  for (long long k = -6; k <= 6; ++k) CHECK(s.coeff(k) == f.coeff(k));
  CHECK(s.coeff(7) == cplx{0.0, 0.0});
  CHECK(s.coeff(-7) == cplx{0.0, 0.0});
  // idempotence: a polynomial with spectrum inside [-n, n] is fixed
  const TrigPoly again = partial_sum(s, 6);
  for (long long k = -6; k <= 6; ++k) CHECK(again.coeff(k) == s.coeff(k));
}

TEST_CASE("triangular mean equals the average of partial sums") {
  const TrigPoly f = random_poly(-10, 10, 8);
  const long long n = 7;
  const TrigPoly fast = fejer_sum(f, n);
  // oracle: (1/n) sum_{k=0}^{n-1} S_k f, computed coefficient-wise
  TrigPoly acc = TrigPoly::zeros(-n + 1, n - 1);
  for (long long k = 0; k < n; ++k) {
    const TrigPoly sk = partial_sum(f, k);
    for (long long m = -k; m <= k; ++m) acc.at(m) += sk.coeff(m);
  }
  for (cplx& z : acc.c) z /= double(n);
  CHECK(fast.degree() <= n - 1);
  for (long long m = -n + 1; m <= n - 1; ++m)
    CHECK(std::abs(fast.coeff(m) - acc.coeff(m)) < 1e-13);
}

TEST_CASE("triangular mean is a sup-norm contraction on a dense grid") {
  const TrigPoly f = random_poly(-16, 16, 10);
  const std::size_t M = 512;
  const SampledFunction before = eval_grid(f, M);
  const SampledFunction after = eval_grid(fejer_sum(f, 12), M);
  double sup_before = 0.0, sup_after = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    sup_before = std::max(sup_before, std::abs(before.v[i]));
    sup_after = std::max(sup_after, std::abs(after.v[i]));
  }
  // the mean of a real nonnegative kernel cannot raise the sup norm; the
  // coarse grid bound gets a small slack
  CHECK(sup_after <= sup_before * (1.0 + 1e-9) + 1e-9);
}

TEST_CASE("coefficients recover from samples") {
  const TrigPoly f = random_poly(-20, 30, 6);
  const SampledFunction s = eval_grid(f, 128);
  const TrigPoly back = coefficients_from_samples(s, -20, 30, 1e-10);
  for (long long k = -20; k <= 30; ++k)
    CHECK(std::abs(back.coeff(k) - f.coeff(k)) < 1e-12);
}

TEST_CASE("unresolved content near the folding edge is refused") {
  const TrigPoly f = TrigPoly::basis(30); // 30 >= 7*64/16 = 28
  const SampledFunction s = eval_grid(f, 64);
  CHECK_THROWS_AS((void)coefficients_from_samples(s, -2, 2, 1e-10),
                  TailNotDecayed);
}

TEST_CASE("norm preconditions") {
  const TrigPoly f = random_poly(-4, 4, 12); // width 9
  CHECK_THROWS_AS((void)lp_norm(f, 0.5, 64), DomainError);
  CHECK_THROWS_AS((void)lp_norm(f, 1.0, 64), DomainError);
  CHECK_THROWS_AS((void)lp_norm(f, 2.0, 32), AliasingError); // 32 < 4*9
  CHECK_THROWS_AS((void)lp_norm(f, 2.0, 65), AliasingError); // not pow2
}

TEST_CASE("quadratic norm matches the coefficient energy") {
  const TrigPoly f = random_poly(-15, 9, 13);
  double energy = 0.0;
  for (const cplx& z : f.c) energy += std::norm(z);
  const double want = std::sqrt(energy);
  CHECK(lp_norm_certified(f, 2.0, 1e-10) ==
        doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("basis elements have unit norm in every exponent") {
  const TrigPoly e7 = TrigPoly::basis(7);
  for (double p : {1.5, 2.0, 3.0, 4.0})
    CHECK(lp_norm_certified(e7, p, 1e-10) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("checkpoint ladders are strictly increasing and end at N") {
  const std::vector<long long> cps = default_checkpoints(16, 5000);
  REQUIRE(!cps.empty());
  CHECK(cps.front() >= 16);
  CHECK(cps.back() == 5000);
  for (std::size_t i = 1; i < cps.size(); ++i) CHECK(cps[i] > cps[i - 1]);
  // geometric spacing: consecutive ratios stay below sqrt 2
  for (std::size_t i = 1; i < cps.size(); ++i)
    CHECK(double(cps[i]) / double(cps[i - 1]) < 1.5);
}

TEST_CASE("profile of a single oscillation settles at its frequency") {
  const TrigPoly f = TrigPoly::basis(5);
  const double x = 0.1234;
  ProfileScan scan = partial_sum_profile(f, x, 64, 3, 0.0, {3, 5, 64});
  REQUIRE(scan.value.size() == 3);
  CHECK(std::abs(scan.value[0]) < 1e-15); // S_3 misses frequency 5
  const cplx want = std::polar(1.0, two_pi * 5.0 * x);
  CHECK(std::abs(scan.value[1] - want) < 1e-12);
  CHECK(std::abs(scan.value[2] - want) < 1e-12);
  CHECK(scan.max_abs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(scan.argmax_n == 5);
  CHECK(scan.running_max[0] == 0.0);
  CHECK(scan.running_max[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weighted profile of a single oscillation peaks at its frequency") {
  const TrigPoly f = TrigPoly::basis(5);
  ProfileScan scan = partial_sum_profile(f, 0.77, 100, 16, 0.5);
  CHECK(scan.weighted_argmax_n == 5);
  CHECK(scan.weighted_max ==
        doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("profiles are linear in the input") {
  const TrigPoly P = random_poly(-30, 30, 20);
  const TrigPoly Q = random_poly(-30, 30, 21);
  const cplx a{0.7, 0.0}, b{-1.3, 0.0};
  const TrigPoly R = plus(scaled(P, a), scaled(Q, b));
  const double x = 0.4321;
  const std::vector<long long> cps = {16, 20, 25, 30};
  const ProfileScan sp = partial_sum_profile(P, x, 30, 16, 0.0, cps);
  const ProfileScan sq = partial_sum_profile(Q, x, 30, 16, 0.0, cps);
  const ProfileScan sr = partial_sum_profile(R, x, 30, 16, 0.0, cps);
  for (std::size_t i = 0; i < cps.size(); ++i)
    CHECK(std::abs(sr.value[i] - (a * sp.value[i] + b * sq.value[i])) <
          1e-12);
}

TEST_CASE("running maxima never decrease") {
  const TrigPoly f = random_poly(-64, 64, 30);
  const ProfileScan scan = partial_sum_profile(f, 0.345, 64, 16);
  for (std::size_t i = 1; i < scan.running_max.size(); ++i)
    CHECK(scan.running_max[i] >= scan.running_max[i - 1]);
}
