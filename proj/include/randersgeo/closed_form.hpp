#pragma once

#include <vector>

namespace randers {

/// Branch data for the explicit profile x1(s) obtained by inverting the
/// first integral  x1 sqrt(delta + x1^2 - s) Phi(1 - eps^2 s) = E  with
/// Phi(s) = (3s-2)/s^2 (the n = 2 BH volume ratio), s = x1'(t)^2.
struct ClosedFormParams {
    double energy = 1.0;  // E != 0
    double eps_k = 0.5;   // the Killing strength governing w for this type
    int delta = 1;        // +1 spherical, -1 hyperbolic
    int sigma = 1;        // sign branch of x1
    int x1p_sign = 1;     // sign branch of x1'(t) = +-sqrt(s)
    int phi_sign = 1;     // sign branch of the phi integral
};

struct ClosedFormJet {
    double x1 = 0, x1_s = 0, x1_ss = 0;
    double x1_sq = 0, x1_sq_s = 0, x1_sq_ss = 0;  // x1^2 and its s-derivatives
};

/// Valid parameter window: s in (0, pole) U (pole, smax), pole = 1/(3 eps^2),
/// smax = 1/eps^2 (where the navigation scalar 1 - eps^2 s reaches 0).
struct SDomain {
    double pole;
    double smax;
};
SDomain s_domain(double eps_k);

/// Throws unless s stays `margin` away from {0, pole, smax}.
void validate_s(double s, const ClosedFormParams& cp, double margin);

ClosedFormJet closed_form_x1_jet(double s, const ClosedFormParams& cp);

/// Value only; additionally rejects results violating the type constraint
/// (x1 != 0 spherical, x1 > 1 hyperbolic).
double closed_form_x1(double s, const ClosedFormParams& cp);

/// dphi/ds of the reparametrized profile:
///   phi_sign * (E / 2 delta) * (1-e^2 s)^2 / (sqrt(s)(1-3 e^2 s)) * d/ds log(x1^2/(delta+x1^2))
double phi_integrand(double s, const ClosedFormParams& cp);
double phi_integrand_deriv(double s, const ClosedFormParams& cp);

/// phi(s1) - phi(s0) by adaptive quadrature with the substitution s = u^2
/// (removes the 1/sqrt(s) endpoint singularity).
double phi_between(double s0, double s1, const ClosedFormParams& cp, double quad_tol = 1e-10);

/// Cumulative phi over a grid, zero at the first node.
std::vector<double> phi_of_s(const std::vector<double>& s_grid, const ClosedFormParams& cp,
                             double margin = 1e-2, double quad_tol = 1e-10);

}  // namespace randers
