#ifndef FDL_QUADRATURE_HPP
#define FDL_QUADRATURE_HPP

#include <functional>

namespace fdl {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance
/// `abs_tol`. The error budget is halved with the interval, which keeps the
/// total quadrature error below abs_tol for integrands with integrable
/// kinks as well as smooth ones.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth = 48);

/// Equispaced trapezoid mean of f over one period [0, 1) with M nodes.
/// For a 1-periodic function this equals (1/M) sum f(i/M); it is exact for
/// trigonometric polynomials with spectrum inside the Nyquist window.
double periodic_mean(const std::function<double(double)>& f, std::size_t M);

} // namespace fdl

#endif
