#pragma once

#include <Eigen/Dense>

#include "randersgeo/randers_measure.hpp"

namespace randers {

using Vec4 = Eigen::Vector4d;

/// Minkowski inner product of signature (-,+,+,+).
double lorentz_dot(const Vec4& a, const Vec4& b);

/// Point on the upper hyperboloid sheet H^3: <p,p> = -1, p1 > 0.
struct LorentzPoint {
    Vec4 p;
    static LorentzPoint make(const Vec4& p, double tol = 1e-10);  // validates
    double minkowski_residual() const;                            // |<p,p> + 1|
};

/// Killing field (e1 p2, e1 p1, -e2 p4, e2 p3) on H^3: a boost generator in
/// the (p1,p2)-plane mixed with a rotation generator in the (p3,p4)-plane.
struct MixedKillingField {
    double eps1 = 0, eps2 = 0;
    Vec4 value(const Vec4& p) const;
    double norm2(const Vec4& p) const;  // <W,W>_L restricted to H^3
};

/// Randers domain: ||W~|| < 1 strictly.
bool in_omega(const LorentzPoint& p, const MixedKillingField& w);

/// Global graph chart p = (sqrt(1+|u|^2), u) with the pullback metric
/// h_ab = delta_ab - u_a u_b / (1+|u|^2) (sectional curvature -1) and the
/// mixed field expressed in chart components.
namespace h3 {

Vec4 embed(const Vec& u);
Vec chart_of(const Vec4& p);  // (p2, p3, p4)
Eigen::Vector3d poincare(const Vec4& p);

MetricField metric();  // analytic first derivatives
VectorField wind(double eps1, double eps2);
NavigationData navigation(double eps1, double eps2, MeasureSpec measure);

}  // namespace h3

}  // namespace randers
