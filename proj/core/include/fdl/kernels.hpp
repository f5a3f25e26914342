#ifndef FDL_KERNELS_HPP
#define FDL_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace fdl {

/// Value at t of the order-n summation kernel sum_{|k|<=n} e^{2 pi i k t}
/// = sin((2n+1) pi t) / sin(pi t), extended by its limit 2n+1 at integers.
double dirichlet_kernel(long long n, double t);

/// Value at t of the order-n triangular-mean kernel
/// (1/n) (sin(n pi t)/sin(pi t))^2, extended by its limit n at integers.
/// Nonnegative for all t.
double fejer_kernel(long long n, double t);

/// Integral over one period of |dirichlet_kernel(n, .)|, approximated by the
/// equispaced mean over a power-of-two grid. Starting from M points, the grid
/// is doubled until two successive estimates agree to 1e-6; the settled value
/// is returned. Raises TailNotDecayed if agreement is never reached.
double dirichlet_l1_norm(long long n, std::size_t M = 64);

} // namespace fdl

#endif
