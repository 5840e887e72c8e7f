#pragma once

#include "randersgeo/immersion_geometry.hpp"

namespace randers {

/// Mean curvature form H_g dx~^g: the first variation of the volume
/// functional of the immersed submanifold. Covector of length n+p.
using MeanCurvatureForm = Vec;

/// General closed form, any codimension, arbitrary (not necessarily
/// Killing) wind.
MeanCurvatureForm mean_form_general(const NavigationData& nav, const ImmersionJet2& jet);

/// Closed form when the wind is a Killing field; refuses (with the
/// residual) if the Killing identity fails at the point.
MeanCurvatureForm mean_form_killing(const NavigationData& nav, const ImmersionJet2& jet,
                                    double killing_tol = 1e-8);

/// Hypersurface scalar form:
///   H_f(X) = -(1/rho) { [nH + N(log chi)] Phi(s) - 2 <df(grad w), W~> Phi'(s) } <N, X>
/// with s = 1 - w^2. Requires p = 1 and Killing wind.
double mean_value_hypersurface(const NavigationData& nav, const ImmersionHandle& f, const Vec& x,
                               const Vec& X_ambient, double killing_tol = 1e-8);

/// BH specialization (chi == 1):
///   H_f(X) = -(1/rho) { nH Phi(s) - 2 <df(grad w), W~> Phi'(s) } <N, X>.
double mean_value_bh(const NavigationData& nav, const ImmersionHandle& f, const Vec& x,
                     const Vec& X_ambient, double killing_tol = 1e-8);

struct OracleOptions {
    double step_first = 1e-4;
    double step_second = 1e-3;
    bool richardson = true;
};

/// Finite-difference oracle straight from the variational definition:
///   H_g = (1/F) { dF/dx~^g - d2F/dz^g_i dz^e_j * z^e_ij - d2F/dx~^e dz^g_i * z^e_i }
/// with every partial of the density F(x~, z) taken by central differences,
/// F treated as a free function of (x~, z). Independent of the closed forms.
MeanCurvatureForm mean_form_oracle(const NavigationData& nav, const ImmersionJet2& jet,
                                   const OracleOptions& opts = {});

}  // namespace randers
