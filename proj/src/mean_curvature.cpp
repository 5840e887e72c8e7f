#include "randersgeo/mean_curvature.hpp"

#include <cmath>

#include "randersgeo/error.hpp"

namespace randers {

namespace {

struct FormContext {
    InducedGeometry g;
    Mat K_low;       // W~_{a|e}
    Mat P_mixed;     // delta^a_g - B^a_g
    Mat P_up;        // h~^{ab} - B^{ab}
    Mat P_low;       // h~_{ab} - B_{ab}
    Vec WPW;         // W~_t (delta^t_g - B^t_g)
    Vec BW;          // B^{ed} W~_d
    Vec M1;          // W~_{a|e} W~^a  (covector in e)
    Vec trace_tau;   // h^{ij} tau^a_ij
    Vec ww_tau;      // W^i W^j tau^a_ij
    double rho, rho_p, rho_pp, log_chi_p;
};

FormContext make_context(const NavigationData& nav, const ImmersionJet2& jet) {
    FormContext c{induced_geometry(nav, jet), {}, {}, {}, {}, {}, {}, {}, {}, {}, 0, 0, 0, 0};
    const int m = jet.n + jet.p, n = jet.n;
    const InducedGeometry& g = c.g;

    c.K_low = covariant_deriv(nav.metric, nav.wind, jet.fx).low;
    c.P_mixed = Mat::Identity(m, m) - g.B_mixed;
    c.P_up = g.ambient_metric_inv - g.B_up;
    c.P_low = g.ambient_metric - g.B_low;
    c.WPW = c.P_mixed.transpose() * g.wind_low;
    c.BW = g.B_up * g.wind_low;
    c.M1 = c.K_low.transpose() * g.wind_up;

    Vec w_up_tan = g.h_inv * g.w_cov;  // W^i
    c.trace_tau = Vec::Zero(m);
    c.ww_tau = Vec::Zero(m);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                c.trace_tau[a] += g.h_inv(i, j) * g.tau(a, i, j);
                c.ww_tau[a] += w_up_tan[i] * w_up_tan[j] * g.tau(a, i, j);
            }

    double s = g.sfrak;
    if (!(s > 0)) fail("outside Randers domain: s = ", s);
    c.rho = nav.measure.rho(s);
    c.rho_p = nav.measure.rho_p(s);
    c.rho_pp = nav.measure.rho_pp(s);
    c.log_chi_p = nav.measure.log_chi_p(g.wind_norm2);
    return c;
}

Vec term1(const FormContext& c) {
    // (2 (log chi)'/rho) [2 rho' (BW.M1) WPW_g - rho (P^e_g M1_e)]
    double c1 = c.BW.dot(c.M1);
    Vec pm1 = c.P_mixed.transpose() * c.M1;
    return (2 * c.log_chi_p / c.rho) * (2 * c.rho_p * c1 * c.WPW - c.rho * pm1);
}

}  // namespace

MeanCurvatureForm mean_form_general(const NavigationData& nav, const ImmersionJet2& jet) {
    FormContext c = make_context(nav, jet);
    const InducedGeometry& g = c.g;

    Vec H = term1(c);

    // second group: contractions of W~_{a|e} W~_b
    Vec u = c.P_up * g.wind_low;                  // (h~^{ab} - B^{ab}) W~_b
    Vec v = c.K_low.transpose() * u;              // u^a K_{ae}
    double c2 = (g.B_up * c.K_low).trace();       // B^{ea} K_{ae}
    Vec q = c.K_low * c.BW;                       // K_{ae} B^{eb} W~_b
    double c3 = u.dot(q);
    H -= (1.0 / c.rho) * (2 * c.rho_p * (c.P_mixed.transpose() * v) +
                          2 * c.rho_p * c2 * c.WPW - 4 * c.rho_pp * c3 * c.WPW +
                          2 * c.rho_p * (c.P_mixed.transpose() * q));

    // third group: contractions of tau (free ambient index against the
    // normal-projected bracket; tau itself is already normal-valued)
    double d1 = c.trace_tau.dot(c.WPW);
    Vec d2 = c.P_low * c.trace_tau;
    double d3 = c.ww_tau.dot(c.WPW);
    Vec d4 = c.P_low * c.ww_tau;
    H -= (1.0 / c.rho) * (2 * c.rho_p * d1 * c.WPW + c.rho * d2 +
                          2 * (2 * c.rho_pp * d3 * c.WPW - c.rho_p * d4));
    return H;
}

MeanCurvatureForm mean_form_killing(const NavigationData& nav, const ImmersionJet2& jet,
                                    double killing_tol) {
    KillingResult kr = is_killing(nav.metric, nav.wind, jet.fx, killing_tol);
    if (!kr.killing)
        fail("wind is not Killing at point [", jet.fx.transpose(), "] (residual ", kr.residual,
             " > ", killing_tol, ")");
    FormContext c = make_context(nav, jet);
    const InducedGeometry& g = c.g;

    Vec H = term1(c);

    Vec q = c.K_low * c.BW;
    double c1 = c.BW.dot(c.M1);
    Vec pm1 = c.P_mixed.transpose() * c.M1;
    H -= (1.0 / c.rho) *
         (4 * c.rho_p * (c.P_mixed.transpose() * q) - 2 * (2 * c.rho_pp * c1 * c.WPW - c.rho_p * pm1));

    double e1 = c.trace_tau.dot(g.wind_low);
    Vec e2 = g.ambient_metric * c.trace_tau;
    double e3 = c.ww_tau.dot(g.wind_low);
    Vec e4 = g.ambient_metric * c.ww_tau;
    H -= (1.0 / c.rho) * (2 * c.rho_p * e1 * c.WPW + c.rho * e2 +
                          2 * (2 * c.rho_pp * e3 * c.WPW - c.rho_p * e4));
    return H;
}

double mean_value_hypersurface(const NavigationData& nav, const ImmersionHandle& f, const Vec& x,
                               const Vec& X_ambient, double killing_tol) {
    if (f.p != 1) fail("mean_value_hypersurface requires p = 1");
    ImmersionJet2 jet = f.jet(x);
    KillingResult kr = is_killing(nav.metric, nav.wind, jet.fx, killing_tol);
    if (!kr.killing)
        fail("wind is not Killing at point [", jet.fx.transpose(), "] (residual ", kr.residual,
             ")");
    std::optional<Vec> nv;
    if (f.normal_override) nv = f.normal_override(x);
    InducedGeometry g = induced_geometry(nav, jet, nv ? &*nv : nullptr);

    double s = 1.0 - g.w * g.w;
    auto [phi, phi_p] = nav.measure.phi(s);
    double rho = nav.measure.rho(s);

    Vec dn2 = grad_norm_sq(nav.metric, nav.wind, jet.fx);
    double n_of_wn2 = g.normal.dot(dn2);
    double n_log_chi = nav.measure.log_chi_p(g.wind_norm2) * n_of_wn2;

    double pairing = pairing_df_grad_w(nav, f, x);
    double nx = g.normal.dot(g.ambient_metric * X_ambient);
    return -(1.0 / rho) * ((jet.n * g.mean_curv + n_log_chi) * phi - 2 * pairing * phi_p) * nx;
}

double mean_value_bh(const NavigationData& nav, const ImmersionHandle& f, const Vec& x,
                     const Vec& X_ambient, double killing_tol) {
    if (f.p != 1) fail("mean_value_bh requires p = 1");
    if (nav.measure.kind() != MeasureKind::BH) fail("mean_value_bh requires the BH measure");
    ImmersionJet2 jet = f.jet(x);
    KillingResult kr = is_killing(nav.metric, nav.wind, jet.fx, killing_tol);
    if (!kr.killing)
        fail("wind is not Killing at point [", jet.fx.transpose(), "] (residual ", kr.residual,
             ")");
    std::optional<Vec> nv;
    if (f.normal_override) nv = f.normal_override(x);
    InducedGeometry g = induced_geometry(nav, jet, nv ? &*nv : nullptr);

    double s = 1.0 - g.w * g.w;
    auto [phi, phi_p] = nav.measure.phi(s);
    double rho = nav.measure.rho(s);
    double pairing = pairing_df_grad_w(nav, f, x);
    double nx = g.normal.dot(g.ambient_metric * X_ambient);
    return -(1.0 / rho) * (jet.n * g.mean_curv * phi - 2 * pairing * phi_p) * nx;
}

MeanCurvatureForm mean_form_oracle(const NavigationData& nav, const ImmersionJet2& jet,
                                   const OracleOptions& opts) {
    jet.validate();
    const int n = jet.n, m = jet.n + jet.p;

    // F as a free function of (x~, z); z passed flattened column-major (a, i)
    auto F = [&](const Vec& pt, const Mat& z) { return density(nav, pt, z); };

    double F0;
    try {
        F0 = F(jet.fx, jet.z);
    } catch (const Error& e) {
        fail("oracle ill-conditioned: ", e.what());
    }

    auto d_x = [&](int gamma) {
        auto once = [&](double h) {
            Vec xp = jet.fx, xm = jet.fx;
            xp[gamma] += h;
            xm[gamma] -= h;
            return (F(xp, jet.z) - F(xm, jet.z)) / (2 * h);
        };
        double h = opts.step_first * std::max(1.0, std::abs(jet.fx[gamma]));
        double v = once(h);
        if (!opts.richardson) return v;
        return (4 * once(h / 2) - v) / 3;
    };

    // d2F / dz^g_i dz^e_j
    auto d_zz = [&](int ga, int i, int eb, int j) {
        auto once = [&](double h) {
            if (ga == eb && i == j) {
                Mat zp = jet.z, zm = jet.z;
                zp(ga, i) += h;
                zm(ga, i) -= h;
                return (F(jet.fx, zp) - 2 * F0 + F(jet.fx, zm)) / (h * h);
            }
            Mat zpp = jet.z, zpm = jet.z, zmp = jet.z, zmm = jet.z;
            zpp(ga, i) += h; zpp(eb, j) += h;
            zpm(ga, i) += h; zpm(eb, j) -= h;
            zmp(ga, i) -= h; zmp(eb, j) += h;
            zmm(ga, i) -= h; zmm(eb, j) -= h;
            return (F(jet.fx, zpp) - F(jet.fx, zpm) - F(jet.fx, zmp) + F(jet.fx, zmm)) /
                   (4 * h * h);
        };
        double h = opts.step_second;
        double v = once(h);
        if (!opts.richardson) return v;
        return (4 * once(h / 2) - v) / 3;
    };

    // d2F / dx~^e dz^g_i
    auto d_xz = [&](int eta, int ga, int i) {
        auto once = [&](double h) {
            double hx = h * std::max(1.0, std::abs(jet.fx[eta]));
            Vec xp = jet.fx, xm = jet.fx;
            xp[eta] += hx;
            xm[eta] -= hx;
            Mat zp = jet.z, zm = jet.z;
            zp(ga, i) += h;
            zm(ga, i) -= h;
            return (F(xp, zp) - F(xp, zm) - F(xm, zp) + F(xm, zm)) / (4 * hx * h);
        };
        double h = opts.step_second;
        double v = once(h);
        if (!opts.richardson) return v;
        return (4 * once(h / 2) - v) / 3;
    };

    MeanCurvatureForm H(m);
    try {
        for (int ga = 0; ga < m; ++ga) {
            double acc = d_x(ga);
            for (int eb = 0; eb < m; ++eb)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        // symmetry of z2 in (i,j) pairs with symmetry of the mixed partial
                        double fzz = d_zz(ga, i, eb, j);
                        acc -= fzz * jet.z2(eb, i, j);
                    }
            for (int eb = 0; eb < m; ++eb)
                for (int i = 0; i < n; ++i) acc -= d_xz(eb, ga, i) * jet.z(eb, i);
            H[ga] = acc / F0;
        }
    } catch (const Error& e) {
        fail("oracle ill-conditioned near parameters [", jet.x.transpose(), "]: ", e.what());
    }
    return H;
}

}  // namespace randers
