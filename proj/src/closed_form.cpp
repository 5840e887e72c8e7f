#include "randersgeo/closed_form.hpp"

#include <cmath>

#include "randersgeo/error.hpp"
#include "randersgeo/quadrature.hpp"

namespace randers {

SDomain s_domain(double eps_k) {
    double e2 = eps_k * eps_k;
    return {1.0 / (3.0 * e2), 1.0 / e2};
}

void validate_s(double s, const ClosedFormParams& cp, double margin) {
    SDomain dom = s_domain(cp.eps_k);
    if (!(s >= margin) || !(s <= dom.smax - margin) || std::abs(s - dom.pole) < margin)
        fail("s = ", s, " outside the admissible window (0, ", dom.pole, ") U (", dom.pole, ", ",
             dom.smax, ") with margin ", margin);
}

ClosedFormJet closed_form_x1_jet(double s, const ClosedFormParams& cp) {
    if (!(s > 0)) fail("invalid s = ", s, " (need s > 0)");
    double e2 = cp.eps_k * cp.eps_k;
    double a = 1.0 - e2 * s;        // the navigation scalar
    double b = 1.0 - 3.0 * e2 * s;  // 3*sfrak - 2
    if (!(a > 0)) fail("invalid s = ", s, ": navigation scalar ", a, " <= 0");
    if (b == 0) fail("s = ", s, " sits on the Phi = 0 pole");

    double G = a * a / b;
    double G_s = e2 * a * (1.0 + 3.0 * e2 * s) / (b * b);
    double G_ss = e2 * e2 * (2.0 / b + 6.0 * a * (1.0 + 3.0 * e2 * s) / (b * b * b));

    double ds = cp.delta - s;
    double E2 = 4.0 * cp.energy * cp.energy;
    double Q = ds * ds + E2 * G * G;
    double Q_s = -2.0 * ds + 2.0 * E2 * G * G_s;
    double Q_ss = 2.0 + 2.0 * E2 * (G_s * G_s + G * G_ss);
    if (!(Q > 0)) fail("degenerate radicand at s = ", s);

    double sq = std::sqrt(Q);
    double R = -ds + sq;
    double R_s = 1.0 + Q_s / (2.0 * sq);
    double R_ss = Q_ss / (2.0 * sq) - Q_s * Q_s / (4.0 * Q * sq);

    ClosedFormJet j;
    j.x1_sq = 0.5 * R;
    j.x1_sq_s = 0.5 * R_s;
    j.x1_sq_ss = 0.5 * R_ss;
    if (!(j.x1_sq > 0)) fail("degenerate profile (x1 = 0) at s = ", s);
    double x1 = std::sqrt(j.x1_sq);
    j.x1 = cp.sigma * x1;
    j.x1_s = cp.sigma * j.x1_sq_s / (2.0 * x1);
    j.x1_ss = cp.sigma * (j.x1_sq_ss / (2.0 * x1) - j.x1_sq_s * j.x1_sq_s / (4.0 * x1 * x1 * x1));
    return j;
}

double closed_form_x1(double s, const ClosedFormParams& cp) {
    ClosedFormJet j = closed_form_x1_jet(s, cp);
    if (cp.delta > 0) {
        if (j.x1 == 0) fail("spherical type requires x1 != 0 (s = ", s, ")");
    } else {
        if (!(j.x1 > 1))
            fail("hyperbolic type requires x1 > 1, got ", j.x1, " at s = ", s);
    }
    return j.x1;
}

double phi_integrand(double s, const ClosedFormParams& cp) {
    ClosedFormJet j = closed_form_x1_jet(s, cp);
    double e2 = cp.eps_k * cp.eps_k;
    double a = 1.0 - e2 * s, b = 1.0 - 3.0 * e2 * s;
    double P = a * a / (b * std::sqrt(s));
    double y = j.x1_sq;
    double L_s = j.x1_sq_s * cp.delta / (y * (cp.delta + y));
    return cp.phi_sign * cp.energy / (2.0 * cp.delta) * P * L_s;
}

double phi_integrand_deriv(double s, const ClosedFormParams& cp) {
    ClosedFormJet j = closed_form_x1_jet(s, cp);
    double e2 = cp.eps_k * cp.eps_k;
    double a = 1.0 - e2 * s, b = 1.0 - 3.0 * e2 * s;
    double rs = std::sqrt(s);
    double P = a * a / (b * rs);
    double P_s = (-2.0 * e2 * a / b + 3.0 * e2 * a * a / (b * b)) / rs -
                 a * a / (2.0 * b * s * rs);
    double y = j.x1_sq, y_s = j.x1_sq_s, y_ss = j.x1_sq_ss;
    double dy = cp.delta + y;
    double L_s = y_s * cp.delta / (y * dy);
    double L_ss = cp.delta * (y_ss / (y * dy) - y_s * y_s * (cp.delta + 2.0 * y) / (y * dy * y * dy));
    return cp.phi_sign * cp.energy / (2.0 * cp.delta) * (P_s * L_s + P * L_ss);
}

double phi_between(double s0, double s1, const ClosedFormParams& cp, double quad_tol) {
    // s = u^2 cancels the 1/sqrt(s) factor in the integrand
    auto g = [&](double u) {
        double s = u * u;
        ClosedFormJet j = closed_form_x1_jet(s, cp);
        double e2 = cp.eps_k * cp.eps_k;
        double a = 1.0 - e2 * s, b = 1.0 - 3.0 * e2 * s;
        double y = j.x1_sq;
        double L_s = j.x1_sq_s * cp.delta / (y * (cp.delta + y));
        return cp.phi_sign * cp.energy / (2.0 * cp.delta) * 2.0 * a * a / b * L_s;
    };
    return integrate(g, std::sqrt(s0), std::sqrt(s1), quad_tol);
}

std::vector<double> phi_of_s(const std::vector<double>& s_grid, const ClosedFormParams& cp,
                             double margin, double quad_tol) {
    if (s_grid.empty()) fail("empty s grid");
    for (double s : s_grid) validate_s(s, cp, margin);
    SDomain dom = s_domain(cp.eps_k);
    for (size_t i = 1; i < s_grid.size(); ++i)
        if ((s_grid[i - 1] - dom.pole) * (s_grid[i] - dom.pole) < 0)
            fail("s grid crosses the Phi = 0 pole at ", dom.pole);
    std::vector<double> phi(s_grid.size(), 0.0);
    for (size_t i = 1; i < s_grid.size(); ++i)
        phi[i] = phi[i - 1] + phi_between(s_grid[i - 1], s_grid[i], cp, quad_tol);
    return phi;
}

}  // namespace randers
