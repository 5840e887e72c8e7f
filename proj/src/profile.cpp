#include "randersgeo/profile.hpp"

#include <algorithm>
#include <cmath>

#include "randersgeo/error.hpp"
#include "randersgeo/quadrature.hpp"

namespace randers {

std::pair<double, double> bh2_phi(double sfrak) {
    if (!(sfrak > 0)) fail("invalid sfrak = ", sfrak);
    double s2 = sfrak * sfrak;
    return {(3.0 * sfrak - 2.0) / s2, (4.0 - 3.0 * sfrak) / (s2 * sfrak)};
}

namespace {

// phi'(t) and phi''(t) from profile t-jets; Delta = delta + x1^2 - x1'^2
struct PhiDeriv {
    double phi_t, phi_tt;
};

PhiDeriv phi_derivs(int delta, double x1, double x1_t, double x1_tt) {
    double Delta = delta + x1 * x1 - x1_t * x1_t;
    if (Delta < 0) {
        if (Delta > -1e-12) Delta = 0;  // geodesic family boundary, roundoff
        else
            fail("degenerate frame: delta + x1^2 - x1'^2 = ", Delta);
    }
    double denom = delta + x1 * x1;
    double root = std::sqrt(Delta);
    double phi_t = root / denom;
    double Delta_t = 2.0 * x1_t * (x1 - x1_tt);
    double root_t = (root > 0) ? Delta_t / (2.0 * root) : 0.0;
    double phi_tt = root_t / denom - root * 2.0 * x1 * x1_t / (denom * denom);
    return {phi_t, phi_tt};
}

}  // namespace

AnalyticProfile::AnalyticProfile(SurfaceType type, double eps_k, JetFn jet, double t_ref,
                                 double quad_tol)
    : ProfileCurve(type, eps_k), jet_(std::move(jet)), t_ref_(t_ref), quad_tol_(quad_tol) {}

ProfileJet AnalyticProfile::at(double t) const {
    auto [x1, x1_t, x1_tt] = jet_(t);
    ProfileJet pj;
    pj.x1 = x1;
    pj.x1_l = pj.x1_t = x1_t;
    pj.x1_ll = pj.x1_tt = x1_tt;
    pj.dt_dl = 1;
    auto pd = phi_derivs(delta(), x1, x1_t, x1_tt);
    pj.phi_l = pj.phi_t = pd.phi_t;
    pj.phi_ll = pj.phi_tt = pd.phi_tt;
    int d = delta();
    pj.phi = integrate(
        [&](double tau) {
            auto [y, y_t, y_tt] = jet_(tau);
            return phi_derivs(d, y, y_t, y_tt).phi_t;
        },
        t_ref_, t, quad_tol_);
    return pj;
}

std::shared_ptr<AnalyticProfile> make_linear_profile(SurfaceType type, double eps_k, double slope,
                                                     double intercept, double t_ref) {
    return std::make_shared<AnalyticProfile>(
        type, eps_k,
        [slope, intercept](double t) {
            return std::array<double, 3>{slope * t + intercept, slope, 0.0};
        },
        t_ref);
}

std::shared_ptr<AnalyticProfile> make_minimal_linear(SurfaceType type, double eps_k, int sign,
                                                     double intercept, double t_ref) {
    double slope = sign / (std::sqrt(3.0) * eps_k);
    return make_linear_profile(type, eps_k, slope, intercept, t_ref);
}

ProfileJet GeodesicProfile::at(double t) const {
    ProfileJet pj;
    if (type() == SurfaceType::Spherical) {
        pj.x1 = std::sinh(t);
        pj.x1_l = pj.x1_t = std::cosh(t);
    } else {
        pj.x1 = std::cosh(t);
        pj.x1_l = pj.x1_t = std::sinh(t);
    }
    pj.x1_ll = pj.x1_tt = pj.x1;  // sinh'' = sinh, cosh'' = cosh
    pj.dt_dl = 1;
    // delta + x1^2 - x1'^2 == 0 identically: phi vanishes
    pj.phi = pj.phi_l = pj.phi_ll = pj.phi_t = pj.phi_tt = 0;
    return pj;
}

Vec OdeProfile::rhs(SurfaceType type, double eps_k, double t, const Vec& y) {
    (void)t;
    int delta = delta_of(type);
    double x1 = y[0], x1p = y[1];
    double e2 = eps_k * eps_k;
    double sfrak = 1.0 - e2 * x1p * x1p;
    auto [phi, phi_p] = bh2_phi(sfrak);
    double Delta = delta + x1 * x1 - x1p * x1p;
    double denom = x1 * phi / Delta + 2.0 * e2 * x1 * phi_p;
    if (std::abs(denom) < 1e-12)
        fail("minimal equation not solvable for x1'' (denominator ", denom, ")");
    double x1pp = (2.0 * x1 * x1 + delta - x1p * x1p) * (phi / Delta) / denom;
    Vec dy(3);
    dy << x1p, x1pp, std::sqrt(std::max(Delta, 0.0)) / (delta + x1 * x1);
    return dy;
}

OdeResult OdeProfile::integrate(SurfaceType type, double eps_k, double x1_0, double x1p_0,
                                double t_end, const OdeOptions& opts) {
    int delta = delta_of(type);
    double e2 = eps_k * eps_k;
    {
        // solvability of the initial data
        double sfrak = 1.0 - e2 * x1p_0 * x1p_0;
        if (!(sfrak > 0)) fail("initial data outside the Randers domain: sfrak = ", sfrak);
        auto [phi, phi_p] = bh2_phi(sfrak);
        double Delta = delta + x1_0 * x1_0 - x1p_0 * x1p_0;
        if (std::abs(Delta) < 1e-10) fail("initial data on the degenerate frame (Delta = 0)");
        if (std::abs(x1_0 * phi / Delta + 2.0 * e2 * x1_0 * phi_p) < 1e-10)
            fail("minimal equation not solvable for x1'' at the initial data");
    }
    OdeRhs f = [type, eps_k](double t, const Vec& y) { return rhs(type, eps_k, t, y); };
    OdeEvent event = [delta, e2](double, const Vec& y) -> std::optional<std::string> {
        double x1 = y[0], x1p = y[1];
        double sfrak = 1.0 - e2 * x1p * x1p;
        double Delta = delta + x1 * x1 - x1p * x1p;
        if (sfrak < 1e-3) return "sfrak -> 0";
        if (std::abs(Delta) < 1e-6) return "Delta -> 0 (degenerate frame)";
        auto [phi, phi_p] = bh2_phi(sfrak);
        if (std::abs(x1 * phi / Delta + 2.0 * e2 * x1 * phi_p) < 1e-8)
            return "x1'' denominator -> 0";
        if (delta > 0 && std::abs(x1) < 1e-6) return "x1 -> 0";
        if (delta < 0 && x1 < 1.0 + 1e-9) return "x1 -> 1";
        return std::nullopt;
    };
    Vec y0(3);
    y0 << x1_0, x1p_0, 0.0;
    return ode45(f, 0.0, t_end, y0, opts, event);
}

OdeProfile::OdeProfile(SurfaceType type, double eps_k, OdeResult trajectory)
    : ProfileCurve(type, eps_k), traj_(std::move(trajectory)) {
    if (traj_.t.size() < 2) fail("ode profile needs a nonempty trajectory");
}

Vec OdeProfile::state_at(double t) const {
    // nearest stored sample at or below t, then fixed RK4 substeps
    auto it = std::upper_bound(traj_.t.begin(), traj_.t.end(), t);
    size_t idx = (it == traj_.t.begin()) ? 0 : static_cast<size_t>(it - traj_.t.begin()) - 1;
    idx = std::min(idx, traj_.t.size() - 1);
    double t0 = traj_.t[idx];
    Vec y = traj_.y[idx];
    double span = t - t0;
    if (span == 0) return y;
    int nsub = std::max(1, static_cast<int>(std::ceil(std::abs(span) / 1e-3)));
    double h = span / nsub;
    SurfaceType ty = type();
    double ek = eps_k();
    for (int i = 0; i < nsub; ++i) {
        double ti = t0 + i * h;
        Vec k1 = rhs(ty, ek, ti, y);
        Vec k2 = rhs(ty, ek, ti + h / 2, y + (h / 2) * k1);
        Vec k3 = rhs(ty, ek, ti + h / 2, y + (h / 2) * k2);
        Vec k4 = rhs(ty, ek, ti + h, y + h * k3);
        y += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return y;
}

ProfileJet OdeProfile::at(double t) const {
    Vec y = state_at(t);
    ProfileJet pj;
    pj.x1 = y[0];
    pj.x1_l = pj.x1_t = y[1];
    Vec dy = rhs(type(), eps_k(), t, y);
    pj.x1_ll = pj.x1_tt = dy[1];
    pj.dt_dl = 1;
    pj.phi = y[2];
    auto pd = phi_derivs(delta(), pj.x1, pj.x1_t, pj.x1_tt);
    pj.phi_l = pj.phi_t = pd.phi_t;
    pj.phi_ll = pj.phi_tt = pd.phi_tt;
    return pj;
}

ClosedFormProfile::ClosedFormProfile(SurfaceType type, ClosedFormParams params, double s_ref,
                                     double quad_tol)
    : ProfileCurve(type, params.eps_k), params_(params), s_ref_(s_ref), quad_tol_(quad_tol) {
    if (params_.energy == 0) fail("closed-form profile requires energy E != 0");
    if (params_.delta != delta_of(type)) fail("profile delta does not match the surface type");
    if (type == SurfaceType::Hyperbolic && params_.sigma < 0)
        fail("hyperbolic type requires the positive x1 branch");
}

ProfileJet ClosedFormProfile::at(double s) const {
    ClosedFormJet cf = closed_form_x1_jet(s, params_);
    if (params_.delta < 0 && !(cf.x1 > 1))
        fail("hyperbolic type requires x1 > 1, got ", cf.x1, " at s = ", s);
    double rs = std::sqrt(s);
    ProfileJet pj;
    pj.x1 = cf.x1;
    pj.x1_l = cf.x1_s;
    pj.x1_ll = cf.x1_ss;
    pj.x1_t = params_.x1p_sign * rs;
    pj.x1_tt = 1.0 / (2.0 * cf.x1_s);  // dx1'/dt, independent of the x1' branch
    pj.dt_dl = cf.x1_s / pj.x1_t;
    pj.phi = phi_between(s_ref_, s, params_, quad_tol_);
    pj.phi_l = phi_integrand(s, params_);
    pj.phi_ll = phi_integrand_deriv(s, params_);
    pj.phi_t = pj.phi_l / pj.dt_dl;
    // phi_tt = (d/ds of phi_t) / dt_ds with phi_t = phi_l / dt_ds and
    // d(dt_ds)/ds = (x1_ss x1_t - x1_s dx1t_ds) / x1_t^2
    double dt_ds = pj.dt_dl;
    double dx1t_ds = params_.x1p_sign / (2.0 * rs);
    double d_dtds = (cf.x1_ss * pj.x1_t - cf.x1_s * dx1t_ds) / (pj.x1_t * pj.x1_t);
    pj.phi_tt = (pj.phi_ll * dt_ds - pj.phi_l * d_dtds) / (dt_ds * dt_ds * dt_ds);
    return pj;
}

}  // namespace randers
