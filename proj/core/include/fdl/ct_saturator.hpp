#ifndef FDL_CT_SATURATOR_HPP
#define FDL_CT_SATURATOR_HPP

#include <cstdint>
#include <vector>

#include "fdl/trigpoly.hpp"

namespace fdl {

/// Parameters and resolved order of one uniform-norm block.
struct CtBlockSpec {
  double beta = 0.5;   // in (0,1)
  double delta = 0.25; // in (0,1/3)
  long long k = 0;     // number of poles / arcs
  double epsilon = 0.0; // 1 / (k * exp((log k)^beta))
  long long n = 0;     // resolved mean order, >= 4
};

/// eps = 1 / (k * exp((log k)^beta)); natural log. k = 1 gives 1.
double kk_epsilon(long long k, double beta);

/// Empirical constants of the pole-sum rational function on the unit circle.
struct KkReport {
  double min_re_global = 0.0;
  double min_abs_global = 0.0;
  double max_abs_global = 0.0;
  double min_abs_arcs = 0.0; // over the k arcs of radius eps/2 at j/k
  double max_abs_arcs = 0.0;
};

/// Defining evaluation of f at the circle point e^{2 pi i x}: the average of
/// k simple poles (1+eps)/((1+eps) - conj(z_j) z) over the k-th roots of
/// unity z_j. Requires k >= 1 (k = 1 admitted for testing).
cplx eval_kk_f_point(long long k, double beta, double x);

/// Samples f on the M-point grid using the equivalent single-pole closed
/// form in z^k, spot-checked against eval_kk_f_point on 64 grid points to
/// relative error 1e-10. M must be a power of two >= 64k (smaller M is
/// refused as under-resolved). The optional report captures the measured
/// positivity and peak constants.
SampledFunction eval_kk_f(long long k, double beta, std::size_t M,
                          KkReport* report = nullptr);

/// One block of the uniform-norm construction. Partial until P is filled.
struct CtBlock {
  CtBlockSpec spec;
  SampledFunction g_samples; // principal log of f on the build grid
  TrigPoly g_coeffs;         // one-sided, supported on multiples of k
  TrigPoly P;                // spectrum in [1, 2n-1], sup norm <= 1
  std::size_t M = 0;         // build grid size
  double sup_abs_g = 0.0;
  double sup_im_g = 0.0;
  double sup_gprime = 0.0;
  double resolve_ratio = 0.0; // n / (k^3 exp(3 (log k)^beta))
};

/// Takes the principal logarithm of the sampled f and recovers its
/// coefficient window, certifying decay (tail_tol), zero mean, and
/// one-sidedness. LogBranchError if Re f <= 0 at any sample (cannot happen
/// for the pole-sum f; signals a build bug).
CtBlock build_g(long long k, double beta, std::size_t M, double tail_tol);

struct ResolveResult {
  long long n = 0;
  double sup_gprime = 0.0;
  double ratio = 0.0; // n / (k^3 exp(3 (log k)^beta))
};

/// The smallest admissible mean order: n = max(4, ceil(sup |g'|)), with the
/// derivative sup taken spectrally on the build grid and certified by a 2x
/// refinement agreeing within 1%.
ResolveResult resolve_n(const CtBlock& partial);

/// Full block build: choose the grid (M = max(64k, 8 * next_pow2(n)),
/// doubled until the coefficient tail is below 1e-10), build g, resolve n,
/// and assemble P = (2/pi) e_n sigma_n(Im g). Checks sup|P| <= 1 + 1e-9 and
/// the exact-cancellation identity |S_n P| = |sigma_n g| / pi on a dense
/// grid (deviation <= 1e-8 of the sup). Requires k >= 2, beta in (0,1),
/// delta in (0,1/3).
CtBlock build_P(long long k, double beta, double delta);

/// One sampled point of the arc-family verification.
struct CtBoundRow {
  long long arc = 0;
  double x = 0.0;
  double snp = 0.0;       // |S_n P(x)|
  double threshold = 0.0; // (log n)^{(1-delta) beta}
  bool holds = false;
};

/// Result of sweeping |S_n P| over points of every arc of the eps-family:
/// min_ratio = min over points of log|S_n P(x)| / log log n, and the flag
/// min_ratio >= (1-delta)*beta. The flag is reported, never assumed: at
/// small k it is expected to be false.
struct CtBoundReport {
  CtBlockSpec spec;
  double min_ratio = 0.0;
  double required = 0.0; // (1-delta)*beta
  bool flag = false;
  std::vector<CtBoundRow> rows;
};

/// Samples pts_per_arc equispaced points on each of the k arcs
/// [j/k - eps/2, j/k + eps/2] and records |S_n P| against the threshold.
CtBoundReport verify_ct_bound(const CtBlock& block, int pts_per_arc = 16);

/// Placement record of one block inside the composite sum.
struct CtPlacedBlock {
  int j = 0;
  int l = 0;
  long long k = 0;
  long long n = 0;
  double beta = 0.0;
  double delta = 0.0;
  double weight = 0.0; // eps_weights[l-1] / j^2
};

/// Composite sum over generations j = 1..jmax of (1/j^2) sum_{l=1}^{j}
/// eps_weights[l-1] * e_{n_{j,l}} P_{j,l}, each block built at the smallest
/// power-of-two k (batched upward from k_min, capped at k_cap) whose
/// resolved order satisfies the spectral placement n_{j,l+1} >= 3 n_{j,l}
/// and n_{j+1,1} > 3 n_{j,j}; all block spectra [n+1, 3n-1] are then
/// pairwise disjoint. betas must be pairwise distinct, deltas in (0,1/3),
/// sum of eps_weights <= 1, 1 <= jmax <= 6 (GenerationTooLarge above).
TrigPoly build_saturating_ct(const std::vector<double>& betas,
                             const std::vector<double>& deltas,
                             const std::vector<double>& eps_weights, int jmax,
                             long long k_min = 16, long long k_cap = 2048,
                             std::vector<CtPlacedBlock>* placement = nullptr);

} // namespace fdl

#endif
