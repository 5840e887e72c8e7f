#pragma once

#include <functional>

namespace randers {

/// Adaptive Gauss-Kronrod integral of f over [a, b] to absolute tolerance
/// `tol`; throws "quadrature non-convergence" with the worst interval if the
/// error estimate stays above it.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-10);

}  // namespace randers
