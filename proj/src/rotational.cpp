#include "randersgeo/rotational.hpp"

#include <cmath>

#include "randersgeo/error.hpp"

namespace randers {

Vec4 surface_point(SurfaceType type, double x1, double phi, double theta) {
    if (type == SurfaceType::Spherical) {
        if (x1 == 0) fail("spherical type requires x1 != 0");
        double r = std::sqrt(1.0 + x1 * x1);
        return Vec4(r * std::cosh(phi), r * std::sinh(phi), x1 * std::cos(theta),
                    x1 * std::sin(theta));
    }
    if (!(x1 > 1)) fail("hyperbolic type requires x1 > 1, got ", x1);
    double rho = std::sqrt(x1 * x1 - 1.0);
    return Vec4(x1 * std::cosh(theta), x1 * std::sinh(theta), rho * std::cos(phi),
                rho * std::sin(phi));
}

namespace {

struct ProfileTriple {
    double x, y, z;     // generating curve components
    double xp, yp, zp;  // arc-length derivatives
};

ProfileTriple profile_triple(SurfaceType type, const ProfileJet& pj) {
    ProfileTriple pt;
    if (type == SurfaceType::Spherical) {
        double r = std::sqrt(1.0 + pj.x1 * pj.x1);
        double r_t = pj.x1 * pj.x1_t / r;
        pt.x = r * std::cosh(pj.phi);
        pt.y = r * std::sinh(pj.phi);
        pt.z = pj.x1;
        pt.xp = r_t * std::cosh(pj.phi) + r * std::sinh(pj.phi) * pj.phi_t;
        pt.yp = r_t * std::sinh(pj.phi) + r * std::cosh(pj.phi) * pj.phi_t;
        pt.zp = pj.x1_t;
    } else {
        if (!(pj.x1 > 1)) fail("hyperbolic type requires x1 > 1, got ", pj.x1);
        double rho = std::sqrt(pj.x1 * pj.x1 - 1.0);
        double rho_t = pj.x1 * pj.x1_t / rho;
        pt.x = pj.x1;
        pt.y = rho * std::cos(pj.phi);
        pt.z = rho * std::sin(pj.phi);
        pt.xp = pj.x1_t;
        pt.yp = rho_t * std::cos(pj.phi) - rho * std::sin(pj.phi) * pj.phi_t;
        pt.zp = rho_t * std::sin(pj.phi) + rho * std::cos(pj.phi) * pj.phi_t;
    }
    return pt;
}

double frame_delta(SurfaceType type, const ProfileJet& pj) {
    return delta_of(type) + pj.x1 * pj.x1 - pj.x1_t * pj.x1_t;
}

}  // namespace

Vec4 rotational_normal(SurfaceType type, const ProfileJet& pj, double theta) {
    double Delta = frame_delta(type, pj);
    if (!(Delta > 1e-12))
        fail("degenerate frame: delta + x1^2 - x1'^2 = ", Delta);
    ProfileTriple pt = profile_triple(type, pj);
    if (type == SurfaceType::Spherical) {
        double m = pt.x * pt.yp - pt.xp * pt.y;
        return Vec4(pt.z * pt.yp - pt.y * pt.zp, pt.xp * pt.z - pt.x * pt.zp, m * std::cos(theta),
                    m * std::sin(theta));
    }
    double m = pt.y * pt.zp - pt.z * pt.yp;
    return Vec4(m * std::cosh(theta), m * std::sinh(theta), pt.x * pt.zp - pt.xp * pt.z,
                pt.xp * pt.y - pt.x * pt.yp);
}

RotationalCurvature rotational_H(SurfaceType type, const ProfileJet& pj) {
    double Delta = frame_delta(type, pj);
    if (!(Delta > 1e-12)) fail("degenerate frame: delta + x1^2 - x1'^2 = ", Delta);
    if (pj.x1 == 0) fail("x1 = 0 on a rotational profile");
    double root = std::sqrt(Delta);
    RotationalCurvature rc;
    rc.lambda1 = (pj.x1 - pj.x1_tt) / root;
    rc.lambda2 = root / pj.x1;
    rc.H = (pj.x1 * pj.x1_tt + pj.x1_t * pj.x1_t - 2.0 * pj.x1 * pj.x1 - delta_of(type)) /
           (2.0 * pj.x1 * root);
    return rc;
}

double minimal_residual(SurfaceType type, double eps_k, const ProfileJet& pj) {
    int delta = delta_of(type);
    double e2 = eps_k * eps_k;
    double sfrak = 1.0 - e2 * pj.s();
    if (!(sfrak > 0)) fail("invalid sfrak = ", sfrak);
    double Delta = frame_delta(type, pj);
    if (Delta == 0) fail("degenerate frame (Delta = 0)");
    auto [phi, phi_p] = bh2_phi(sfrak);
    return ((pj.x1 * pj.x1_tt + pj.s() - 2.0 * pj.x1 * pj.x1 - delta) / Delta) * phi +
           2.0 * e2 * pj.x1 * pj.x1_tt * phi_p;
}

double profile_energy(SurfaceType type, double eps_k, const ProfileJet& pj) {
    double e2 = eps_k * eps_k;
    double sfrak = 1.0 - e2 * pj.s();
    if (!(sfrak > 0)) fail("invalid sfrak = ", sfrak);
    auto [phi, phi_p] = bh2_phi(sfrak);
    (void)phi_p;
    if (std::abs(phi) < 1e-12)
        fail("degenerate first integral: Phi(sfrak) = 0 on the sfrak = 2/3 family");
    double Delta = frame_delta(type, pj);
    if (Delta < 0) fail("degenerate frame: Delta = ", Delta);
    return pj.x1 * std::sqrt(Delta) * phi;
}

RotationalSurface::RotationalSurface(std::shared_ptr<const ProfileCurve> profile, double eps1,
                                     double eps2, double kappa)
    : profile_(std::move(profile)), eps1_(eps1), eps2_(eps2), kappa_(kappa) {
    double want = type() == SurfaceType::Spherical ? eps1_ : eps2_;
    if (std::abs(profile_->eps_k() - want) > 1e-14)
        fail("profile eps_k does not match the type-governing Killing strength");
}

double RotationalSurface::eps_k() const {
    return type() == SurfaceType::Spherical ? eps1_ : eps2_;
}

Vec4 RotationalSurface::point(double lambda, double theta) const {
    ProfileJet pj = profile_->at(lambda);
    return surface_point(type(), kappa_ * pj.x1, pj.phi, theta);
}

Vec4 RotationalSurface::wind_at(const Vec4& p) const {
    return MixedKillingField{eps1_, eps2_}.value(p);
}

bool RotationalSurface::point_in_omega(const Vec4& p) const {
    return MixedKillingField{eps1_, eps2_}.norm2(p) < 1.0;
}

ImmersionJet2 RotationalSurface::chart_jet(double lambda, double theta) const {
    ProfileJet pj = profile_->at(lambda);
    double x1 = kappa_ * pj.x1, x1_l = kappa_ * pj.x1_l, x1_ll = kappa_ * pj.x1_ll;
    double ph = pj.phi, ph_l = pj.phi_l, ph_ll = pj.phi_ll;

    ImmersionJet2 jet;
    jet.n = 2;
    jet.p = 1;
    jet.x = Vec(2);
    jet.x << lambda, theta;
    jet.fx = Vec(3);
    jet.z = Mat::Zero(3, 2);
    jet.z2 = Tensor3(3, 2, 2);

    auto set2 = [&](int a, double ll, double lt, double tt) {
        jet.z2(a, 0, 0) = ll;
        jet.z2(a, 0, 1) = lt;
        jet.z2(a, 1, 0) = lt;
        jet.z2(a, 1, 1) = tt;
    };

    if (type() == SurfaceType::Spherical) {
        double r = std::sqrt(1.0 + x1 * x1);
        double r_l = x1 * x1_l / r;
        double r_ll = (x1_l * x1_l + x1 * x1_ll) / r - (x1 * x1_l) * (x1 * x1_l) / (r * r * r);
        double sh = std::sinh(ph), ch = std::cosh(ph);
        double c = std::cos(theta), s = std::sin(theta);
        jet.fx << r * sh, x1 * c, x1 * s;
        jet.z(0, 0) = r_l * sh + r * ch * ph_l;
        jet.z(1, 0) = x1_l * c;
        jet.z(2, 0) = x1_l * s;
        jet.z(1, 1) = -x1 * s;
        jet.z(2, 1) = x1 * c;
        set2(0, r_ll * sh + 2 * r_l * ch * ph_l + r * sh * ph_l * ph_l + r * ch * ph_ll, 0, 0);
        set2(1, x1_ll * c, -x1_l * s, -x1 * c);
        set2(2, x1_ll * s, x1_l * c, -x1 * s);
    } else {
        if (!(x1 > 1)) fail("hyperbolic type requires x1 > 1, got ", x1);
        double rho = std::sqrt(x1 * x1 - 1.0);
        double rho_l = x1 * x1_l / rho;
        double rho_ll =
            (x1_l * x1_l + x1 * x1_ll) / rho - (x1 * x1_l) * (x1 * x1_l) / (rho * rho * rho);
        double sh = std::sinh(theta), ch = std::cosh(theta);
        double c = std::cos(ph), s = std::sin(ph);
        jet.fx << x1 * sh, rho * c, rho * s;
        jet.z(0, 0) = x1_l * sh;
        jet.z(0, 1) = x1 * ch;
        jet.z(1, 0) = rho_l * c - rho * s * ph_l;
        jet.z(2, 0) = rho_l * s + rho * c * ph_l;
        set2(0, x1_ll * sh, x1_l * ch, x1 * sh);
        set2(1, rho_ll * c - 2 * rho_l * s * ph_l - rho * c * ph_l * ph_l - rho * s * ph_ll, 0, 0);
        set2(2, rho_ll * s + 2 * rho_l * c * ph_l - rho * s * ph_l * ph_l + rho * c * ph_ll, 0, 0);
    }
    return jet;
}

Vec RotationalSurface::chart_normal(double lambda, double theta) const {
    if (!has_explicit_normal()) fail("explicit normal unavailable for this surface");
    ProfileJet pj = profile_->at(lambda);
    Vec4 nl = rotational_normal(type(), pj, theta);
    Vec n(3);
    n << nl[1], nl[2], nl[3];
    return n;
}

ImmersionHandle RotationalSurface::handle(bool fd_dw) const {
    ImmersionHandle h;
    h.n = 2;
    h.p = 1;
    auto self = *this;  // value copy keeps the profile alive through shared_ptr
    h.jet = [self](const Vec& x) { return self.chart_jet(x[0], x[1]); };
    if (has_explicit_normal()) {
        h.normal_override = [self](const Vec& x) { return self.chart_normal(x[0], x[1]); };
        if (!fd_dw) {
            double ek = eps_k();
            auto prof = profile_;
            h.dw = [prof, ek](const Vec& x) {
                ProfileJet pj = prof->at(x[0]);
                Vec dw(2);
                dw << -ek * pj.x1_tt * pj.dt_dl, 0.0;
                return dw;
            };
        }
    }
    return h;
}

NavigationData RotationalSurface::navigation(MeasureSpec measure) const {
    return h3::navigation(eps1_, eps2_, std::move(measure));
}

}  // namespace randers
