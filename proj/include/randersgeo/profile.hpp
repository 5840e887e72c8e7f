#pragma once

#include <array>
#include <functional>
#include <memory>

#include "randersgeo/closed_form.hpp"
#include "randersgeo/ode45.hpp"

namespace randers {

enum class SurfaceType { Spherical, Hyperbolic };

inline int delta_of(SurfaceType t) { return t == SurfaceType::Spherical ? 1 : -1; }
/// Which Killing strength governs w: k = 1 (spherical), k = 2 (hyperbolic).
inline int k_index(SurfaceType t) { return t == SurfaceType::Spherical ? 1 : 2; }

/// Jet of a generating profile at one parameter value. Profiles may be
/// parametrized by the arc length t itself or by s = x1'(t)^2; both the
/// parameter derivatives (_l) and the arc-length derivatives (_t) are
/// populated, with dt_dl converting between them.
struct ProfileJet {
    double x1 = 0, x1_l = 0, x1_ll = 0;
    double x1_t = 0, x1_tt = 0;
    double phi = 0, phi_l = 0, phi_ll = 0;
    double phi_t = 0, phi_tt = 0;
    double dt_dl = 1;

    double s() const { return x1_t * x1_t; }
};

class ProfileCurve {
public:
    ProfileCurve(SurfaceType type, double eps_k) : type_(type), eps_k_(eps_k) {}
    virtual ~ProfileCurve() = default;

    virtual ProfileJet at(double lambda) const = 0;
    /// True for the totally geodesic family (delta + x1^2 - x1'^2 == 0),
    /// where the explicit rotational normal degenerates.
    virtual bool degenerate_frame() const { return false; }

    SurfaceType type() const { return type_; }
    int delta() const { return delta_of(type_); }
    double eps_k() const { return eps_k_; }

private:
    SurfaceType type_;
    double eps_k_;
};

/// Arc-length-parametrized profile from analytic (x1, x1', x1'') callables.
/// phi comes from quadrature of sqrt(delta + x1^2 - x1'^2)/(delta + x1^2)
/// anchored at t_ref; its t-derivatives are analytic.
class AnalyticProfile : public ProfileCurve {
public:
    using JetFn = std::function<std::array<double, 3>(double)>;
    AnalyticProfile(SurfaceType type, double eps_k, JetFn jet, double t_ref = 0.0,
                    double quad_tol = 1e-11);
    ProfileJet at(double t) const override;

private:
    JetFn jet_;
    double t_ref_;
    double quad_tol_;
};

/// x1 = slope * t + c. `make_minimal_linear` pins slope = sign/(sqrt(3) eps_k),
/// the family on which the volume ratio Phi vanishes identically.
std::shared_ptr<AnalyticProfile> make_linear_profile(SurfaceType type, double eps_k, double slope,
                                                     double intercept, double t_ref);
std::shared_ptr<AnalyticProfile> make_minimal_linear(SurfaceType type, double eps_k, int sign,
                                                     double intercept, double t_ref);

/// Totally geodesic profiles: x1 = sinh t (spherical), cosh t (hyperbolic);
/// phi vanishes identically.
class GeodesicProfile : public ProfileCurve {
public:
    GeodesicProfile(SurfaceType type, double eps_k) : ProfileCurve(type, eps_k) {}
    ProfileJet at(double t) const override;
    bool degenerate_frame() const override { return true; }
};

/// Numerically integrated minimal profile (the BH-minimal ODE solved for
/// x1''). Evaluation refines from the stored trajectory samples with fixed
/// RK4 substeps, so results do not depend on evaluation order.
class OdeProfile : public ProfileCurve {
public:
    /// state y = (x1, x1', phi)
    static Vec rhs(SurfaceType type, double eps_k, double t, const Vec& y);
    static OdeResult integrate(SurfaceType type, double eps_k, double x1_0, double x1p_0,
                               double t_end, const OdeOptions& opts = {});

    OdeProfile(SurfaceType type, double eps_k, OdeResult trajectory);
    ProfileJet at(double t) const override;
    const OdeResult& trajectory() const { return traj_; }

private:
    Vec state_at(double t) const;
    OdeResult traj_;
};

/// s-parametrized closed-form minimal profile (first-integral inversion).
class ClosedFormProfile : public ProfileCurve {
public:
    ClosedFormProfile(SurfaceType type, ClosedFormParams params, double s_ref,
                      double quad_tol = 1e-11);
    ProfileJet at(double s) const override;
    const ClosedFormParams& params() const { return params_; }

private:
    ClosedFormParams params_;
    double s_ref_;
    double quad_tol_;
};

/// Volume ratio of the n = 2 BH measure in the closed form the rotational
/// machinery uses: Phi = (3 sfrak - 2)/sfrak^2, Phi' = (4 - 3 sfrak)/sfrak^3.
std::pair<double, double> bh2_phi(double sfrak);

}  // namespace randers
