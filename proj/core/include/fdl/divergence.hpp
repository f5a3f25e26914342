#ifndef FDL_DIVERGENCE_HPP
#define FDL_DIVERGENCE_HPP

#include <cstdint>
#include <vector>

#include "fdl/dyadic.hpp"
#include "fdl/trigpoly.hpp"

namespace fdl {

/// Which denominator the divergence index uses: log n (partial-sum growth of
/// an L^p function) or log log n (uniform-norm growth).
enum class ProfileMode { LP, CT };

const char* to_string(ProfileMode mode);

/// Divergence indices of one point: running maxima of |S_n f(x)| recorded at
/// geometric checkpoints, and the two indices obtained by maximizing
/// log(running_max(n)) / log n (beta_poly) resp. / log log n (beta_log)
/// over checkpoints n in [n_min, N], with negative logs clamped to 0.
struct DivergenceProfile {
  double x = 0.0;
  long long n_min = 16;
  long long N = 0;
  std::vector<long long> checkpoints;
  std::vector<double> running_max;
  double beta_poly = 0.0;
  double beta_log = 0.0;
};

/// Full-profile scan at one point. Requires N >= 64; horizons beyond the
/// degree are allowed (the profile is flat past the last frequency).
/// Both indices are always computed; mode only selects which one callers
/// treat as primary.
DivergenceProfile divergence_profile(const TrigPoly& f, double x, long long N,
                                     ProfileMode mode, long long n_min = 16);

/// A subset of the uniform grid i/M.
struct GridPointSet {
  std::size_t M = 0;
  std::vector<std::size_t> indices; // strictly increasing, each < M
};

/// Per-point divergence indices over the whole grid i/M, computed by one
/// shared sweep that only visits frequencies carrying a nonzero coefficient.
/// Also reports the tightest empirical envelope constants:
/// lp_envelope_C = max over points and n of |S_n|/n^{1/p} (when p > 1),
/// ct_envelope_C = max over points and checkpoints of running_max/log n.
struct GridProfileResult {
  std::size_t M = 0;
  long long n_min = 16;
  long long N = 0;
  std::vector<double> beta_poly; // size M
  std::vector<double> beta_log;  // size M
  double lp_envelope_C = 0.0;
  long long lp_envelope_n = 0;
  double ct_envelope_C = 0.0;
};

GridProfileResult profile_grid(const TrigPoly& f, std::size_t M, long long N,
                               long long n_min = 16, double p = 0.0);

/// Grid points whose mode index lies in [beta - eta, beta + eta].
GridPointSet level_set_grid(const TrigPoly& f, ProfileMode mode,
                            std::size_t M, long long N, double beta,
                            double eta, long long n_min = 16);

/// Least-squares slope of log2(occupied dyadic cells of length 2^{-s})
/// against s over s in [s0, s1]; residual is the max deviation from the
/// fit. Requires a nonempty set (EmptySet) and 2 <= s0 < s1 <= log2(M).
struct BoxCountFit {
  double dim = 0.0;
  double residual = 0.0;
  std::vector<std::size_t> occupied; // per scale s0..s1
};

BoxCountFit boxcount_dimension(const GridPointSet& S, int s0, int s1);

/// Grid points covered by an arc family (closed arcs).
GridPointSet grid_points_in_family(const IntervalFamily& F, std::size_t M);

/// The comparison gauge phi_{s,t}(x) = x^s exp((log 1/x)^{1-t}).
struct Jauge {
  double s = 1.0; // > 0
  double t = 1.0; // in (0, 1]
};

/// Exact formula value; DomainError outside x in (0,1).
double jauge_eval(const Jauge& j, double x);

enum class JaugeOrder { ALessOrEqual, BLessOrEqual, Equal };

/// Lexicographic small-x ordering: phi_a <= phi_b near 0 iff a.s > b.s, or
/// equal s and a.t >= b.t. numeric_agrees records a spot verification at
/// x = 1e-4, 1e-8, 1e-12.
struct JaugeComparison {
  JaugeOrder order = JaugeOrder::Equal;
  bool numeric_agrees = false;
};

JaugeComparison jauge_compare(const Jauge& a, const Jauge& b);

/// Covering mass sum over the occupied boxcount cells: at each scale s the
/// number of occupied cells times phi(2^{-s}). A falling curve as s grows
/// indicates the gauge dominates the set's covering growth.
std::vector<double> jauge_mass_curve(const GridPointSet& S, const Jauge& j,
                                     int s0, int s1);

/// One row of the empirical divergence spectrum.
struct SpectrumBin {
  double center = 0.0;
  double half_width = 0.05;
  std::size_t count = 0;
  double dim = 0.0;      // NaN when the bin is empty
  double residual = 0.0; // NaN when the bin is empty
};

struct SpectrumTable {
  ProfileMode mode = ProfileMode::LP;
  double p = 0.0; // exponent when mode == LP (reference slope -p)
  std::size_t M = 0;
  long long N = 0;
  long long n_min = 16;
  std::vector<SpectrumBin> bins;
};

/// Bins the grid's divergence indices around the given centers (ties at
/// shared bin edges go to the lower bin) and box-counts each level set.
/// Empty bins record count 0 and NaN estimates.
SpectrumTable empirical_spectrum(const TrigPoly& f, ProfileMode mode,
                                 double p, std::size_t M, long long N,
                                 const std::vector<double>& centers,
                                 double half_width = 0.05,
                                 long long n_min = 16);

} // namespace fdl

#endif
