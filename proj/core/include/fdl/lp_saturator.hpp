#ifndef FDL_LP_SATURATOR_HPP
#define FDL_LP_SATURATOR_HPP

#include "fdl/trigpoly.hpp"

namespace fdl {

/// Scaling coefficient of the (J, j) block: (1/j) * 2^{-(J-j+1)/p}.
double lp_block_coefficient(int J, int j, double p);

/// First and last frequencies of the modulated (J, j) block:
/// [(2J-1) 2^j - (2^j - 1), (2J-1) 2^j + (2^j - 1)].
long long lp_block_first(int J, int j);
long long lp_block_last(int J, int j);

/// Fourier window |k| <= 2^j of the piecewise-linear bump chi_{J,j}: value 1
/// within distance 2^{-j} of every generation-J dyadic center, 0 beyond
/// distance 2^{1-j}, slopes of magnitude 2^j between. Coefficients are in
/// closed form (trapezoid transform summed over the 2^{J-1} centers);
/// chi is the constant 1 when J = j. Requires 1 <= J <= j.
TrigPoly build_chi(int J, int j);

/// The modulated triangular mean of chi: e_{(2J-1) 2^j} sigma_{2^j} chi_{J,j}.
/// Spectrum lies in [lp_block_first, lp_block_last]; blocks of distinct J
/// never overlap. The exponent p is validated but does not enter the block
/// itself — it only weights the blocks inside build_gj.
TrigPoly build_block(int J, int j, double p);

/// Generation polynomial g_j = sum_{J=1}^{j} c_{J,j} block(J, j), with
/// spectrum in [0, j 2^{j+1}) and L^p norm at most 1. Requires 3 <= j;
/// GenerationTooLarge above j = 16.
TrigPoly build_gj(int j, double p);

/// Truncated saturating sum g = sum_{j=3}^{jmax} j^{-2} e_{j 2^{j+1}} g_j.
/// The shifted generations occupy pairwise disjoint windows
/// [j 2^{j+1}, j 2^{j+2}). Requires 3 <= jmax; GenerationTooLarge above 14.
TrigPoly build_saturating_lp(double p, int jmax);

/// f + (1/j) e_{j 2^{j+1}} g_j: a single-generation perturbation of an
/// arbitrary base polynomial.
TrigPoly with_block_perturbation(const TrigPoly& f, int j, double p);

/// A verified partial-sum jump at x: gap = |S_{n2} - S_{n1}| at x against
/// the guaranteed lower bound c_{J,j}/4 (times j^{-2} in shifted mode).
struct JumpWitness {
  double x = 0.0;
  long long n1 = 0;
  long long n2 = 0;
  double gap = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// Evaluates the jump of the symmetric partial sums of f across the (J, j)
/// block window at a point x of the generation-J plateau family (within
/// 2^{-j} of an odd K/2^J; PointOutsideFamily otherwise). In shifted mode f
/// is the full saturating sum: indices are offset by j 2^{j+1} and the bound
/// carries the extra factor j^{-2}. Requires j >= 3.
JumpWitness witness_jump(const TrigPoly& f, double x, int J, int j, double p,
                         bool shifted);

} // namespace fdl

#endif
