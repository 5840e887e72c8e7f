#include "randersgeo/hyperbolic_randers.hpp"

#include <cmath>

#include "randersgeo/error.hpp"

namespace randers {

double lorentz_dot(const Vec4& a, const Vec4& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

LorentzPoint LorentzPoint::make(const Vec4& p, double tol) {
    LorentzPoint lp{p};
    if (lp.minkowski_residual() > tol)
        fail("point not on the hyperboloid: <p,p> = ", lorentz_dot(p, p));
    if (!(p[0] > 0)) fail("point not on the upper sheet: p1 = ", p[0]);
    return lp;
}

double LorentzPoint::minkowski_residual() const { return std::abs(lorentz_dot(p, p) + 1.0); }

Vec4 MixedKillingField::value(const Vec4& p) const {
    return Vec4(eps1 * p[1], eps1 * p[0], -eps2 * p[3], eps2 * p[2]);
}

double MixedKillingField::norm2(const Vec4& p) const {
    Vec4 w = value(p);
    return lorentz_dot(w, w);
}

bool in_omega(const LorentzPoint& p, const MixedKillingField& w) { return w.norm2(p.p) < 1.0; }

namespace h3 {

Vec4 embed(const Vec& u) {
    return Vec4(std::sqrt(1.0 + u.squaredNorm()), u[0], u[1], u[2]);
}

Vec chart_of(const Vec4& p) {
    Vec u(3);
    u << p[1], p[2], p[3];
    return u;
}

Eigen::Vector3d poincare(const Vec4& p) {
    return Eigen::Vector3d(p[1], p[2], p[3]) / (1.0 + p[0]);
}

MetricField metric() {
    auto value = [](const Vec& u) {
        double q = 1.0 + u.squaredNorm();
        Mat h = Mat::Identity(3, 3) - (u * u.transpose()) / q;
        return h;
    };
    auto d1 = [](const Vec& u) {
        double q = 1.0 + u.squaredNorm();
        Tensor3 d(3, 3, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    double v = 2.0 * u[a] * u[b] * u[c] / (q * q);
                    if (a == c) v -= u[b] / q;
                    if (b == c) v -= u[a] / q;
                    d(a, b, c) = v;
                }
        return d;
    };
    return MetricField(3, value, d1);
}

VectorField wind(double eps1, double eps2) {
    auto value = [eps1, eps2](const Vec& u) {
        Vec w(3);
        w << eps1 * std::sqrt(1.0 + u.squaredNorm()), -eps2 * u[2], eps2 * u[1];
        return w;
    };
    auto jac = [eps1, eps2](const Vec& u) {
        double r = std::sqrt(1.0 + u.squaredNorm());
        Mat j = Mat::Zero(3, 3);
        j(0, 0) = eps1 * u[0] / r;
        j(0, 1) = eps1 * u[1] / r;
        j(0, 2) = eps1 * u[2] / r;
        j(1, 2) = -eps2;
        j(2, 1) = eps2;
        return j;
    };
    return VectorField(3, value, jac);
}

NavigationData navigation(double eps1, double eps2, MeasureSpec measure) {
    return NavigationData{metric(), wind(eps1, eps2), std::move(measure)};
}

}  // namespace h3

}  // namespace randers
