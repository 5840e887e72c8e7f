#pragma once

#include <memory>

#include "randersgeo/hyperbolic_randers.hpp"
#include "randersgeo/immersion_geometry.hpp"
#include "randersgeo/profile.hpp"

namespace randers {

/// Surface point in L^4:
///  spherical:  (sqrt(1+x1^2) cosh phi, sqrt(1+x1^2) sinh phi, x1 cos th, x1 sin th)
///  hyperbolic: (x1 cosh th, x1 sinh th, sqrt(x1^2-1) cos phi, sqrt(x1^2-1) sin phi)
Vec4 surface_point(SurfaceType type, double x1, double phi, double theta);

/// The explicit unit normal of the rotational surface in H^3. Requires a
/// non-degenerate frame (delta + x1^2 - x1'^2 > 0).
Vec4 rotational_normal(SurfaceType type, const ProfileJet& pj, double theta);

struct RotationalCurvature {
    double lambda1, lambda2;  // principal curvatures are -lambda1, -lambda2
    double H;                 // -(lambda1 + lambda2)/2
};
RotationalCurvature rotational_H(SurfaceType type, const ProfileJet& pj);

/// Residual of the BH-minimal profile equation
///   [(x1 x1'' + x1'^2 - 2 x1^2 - delta)/(delta + x1^2 - x1'^2)] Phi(sfrak)
///     + 2 eps^2 x1 x1'' Phi'(sfrak),  sfrak = 1 - eps^2 x1'^2.
double minimal_residual(SurfaceType type, double eps_k, const ProfileJet& pj);

/// First integral E = x1 sqrt(delta + x1^2 - x1'^2) Phi(sfrak); throws
/// "degenerate first integral" on the Phi = 0 family.
double profile_energy(SurfaceType type, double eps_k, const ProfileJet& pj);

/**
 * A rotational surface seen through the hyperboloid chart, exposing second-
 * order immersion jets for the general mean-curvature engine. kappa != 1
 * scales the profile (a deliberately non-minimal perturbation); in that case
 * the explicit normal and the analytic dw registration are not available.
 */
class RotationalSurface {
public:
    RotationalSurface(std::shared_ptr<const ProfileCurve> profile, double eps1, double eps2,
                      double kappa = 1.0);

    SurfaceType type() const { return profile_->type(); }
    double eps1() const { return eps1_; }
    double eps2() const { return eps2_; }
    double eps_k() const;
    double kappa() const { return kappa_; }
    const ProfileCurve& profile() const { return *profile_; }

    Vec4 point(double lambda, double theta) const;
    Vec4 wind_at(const Vec4& p) const;
    bool point_in_omega(const Vec4& p) const;

    /// Chart jets of (lambda, theta) -> u = (p2, p3, p4); n = 2, p = 1.
    ImmersionJet2 chart_jet(double lambda, double theta) const;
    /// Paper normal in chart components (kappa == 1, non-degenerate frame).
    Vec chart_normal(double lambda, double theta) const;

    /// Handle for the engine; explicit normal and analytic dw installed when
    /// available. `fd_dw` forces the finite-difference gradient path.
    ImmersionHandle handle(bool fd_dw = false) const;
    NavigationData navigation(MeasureSpec measure) const;

    bool has_explicit_normal() const { return kappa_ == 1.0 && !profile_->degenerate_frame(); }

private:
    std::shared_ptr<const ProfileCurve> profile_;
    double eps1_, eps2_, kappa_;
};

}  // namespace randers
