#include "randersgeo/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "randersgeo/error.hpp"

namespace randers {

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    double error = 0;
    double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, 14, tol, &error);
    if (!(error <= std::max(tol * 100, 1e-8 * std::abs(value)) + 1e-14))
        fail("quadrature non-convergence on [", a, ", ", b, "]: error estimate ", error);
    return value;
}

}  // namespace randers
