#pragma once

#include <functional>
#include <optional>

#include "randersgeo/randers_measure.hpp"

namespace randers {

/// Second-order jet of an immersion f: M^n -> M~^{n+p} at one parameter point.
struct ImmersionJet2 {
    int n = 0, p = 0;
    Vec x;       // parameters, size n
    Vec fx;      // ambient chart point, size n+p
    Mat z;       // z^a_i = df^a/dx^i, (n+p) x n
    Tensor3 z2;  // z^a_ij, symmetric in (i,j)

    void validate() const;  // rank, symmetry
};

/**
 * Pointwise data of the Riemannian immersion: induced metric, the A/B
 * projection tensors, second fundamental form, and (hypersurfaces only)
 * the unit normal, mean curvature H and w = <N, W~>.
 */
struct InducedGeometry {
    int n = 0, p = 0;
    Mat h, h_inv;             // n x n
    Mat A_up;                 // A^{i a} = h^{ij} z^a_j, n x (n+p)
    Mat A_mixed;              // A^i_a = A^{i d} h~_{da}
    Mat B_up, B_mixed, B_low; // B^{ab}, B^a_b, B_{ab}
    Tensor3 tau;              // tau^a_ij (normal-valued)
    Mat ambient_metric;       // h~_{ab} at fx
    Mat ambient_metric_inv;
    Vec wind_up, wind_low;    // W~^a, W~_a
    Vec w_cov;                // W_i = W~_a z^a_i
    double wind_norm2 = 0;    // ||W~||^2
    double w_norm2 = 0;       // ||W||^2_h
    double sfrak = 1;

    bool has_normal = false;  // populated only for p == 1
    Vec normal;               // N^a, unit
    double mean_curv = 0;     // H with h^{ij} tau^a_ij d_a = n H N
    double w = 0;             // <N, W~>
};

/// Immersion given as an evaluable map so that quantities needing one more
/// derivative level than the jet (the gradient of w) can be differenced.
struct ImmersionHandle {
    int n = 0, p = 0;
    std::function<ImmersionJet2(const Vec&)> jet;
    // Optional explicit unit normal in chart components (hypersurfaces; used
    // to pin orientation-dependent signs).
    std::function<Vec(const Vec&)> normal_override;
    // Optional analytic dw/dx^j covector; finite differences otherwise.
    std::function<Vec(const Vec&)> dw;
};

/// Full bundle at one point. For p == 1 the normal follows the positive
/// orientation of (z_1, ..., z_n, N) unless an override is supplied.
InducedGeometry induced_geometry(const NavigationData& nav, const ImmersionJet2& jet,
                                 const Vec* normal_override = nullptr);

/// tau^a_ij = (delta^a_e - B^a_e)(z^e_ij + G~^e_{td} z^t_j z^d_i).
Tensor3 second_fundamental_form(const NavigationData& nav, const ImmersionJet2& jet);

/// Same tensor through the induced Christoffel symbols G^k_ij = A^k_e(...),
/// kept as an independent route for consistency checks.
Tensor3 second_fundamental_form_via_gamma(const NavigationData& nav, const ImmersionJet2& jet);

/// <df(grad w), W~>_h~ = h^{ij} (dw/dx^j) W_i for a hypersurface handle.
double pairing_df_grad_w(const NavigationData& nav, const ImmersionHandle& f, const Vec& x,
                         const DiffKernel& kern = {});

/// w = <N, W~> at parameters x (normal override honored).
double w_of(const NavigationData& nav, const ImmersionHandle& f, const Vec& x);

}  // namespace randers
