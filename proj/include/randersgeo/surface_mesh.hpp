#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "randersgeo/rotational.hpp"

namespace randers {

enum class SurfaceFamily { ClosedForm, Linear, Geodesic };

struct MeshSpec {
    SurfaceType type = SurfaceType::Spherical;
    SurfaceFamily family = SurfaceFamily::ClosedForm;
    double energy = 1.0;
    double eps1 = 0.5, eps2 = 0.5;
    int branch = 1;       // sigma branch of the closed form
    int x1p_sign = 1;
    int phi_sign = 1;
    double kappa = 1.0;   // profile scale; != 1 gives a non-minimal control
    double lin_slope_sign = 1;
    double lin_intercept = 0.0;

    // closed form: s-range; linear/geodesic: t-range
    double l_min = 0.05, l_max = 1.0;
    int n_l = 64;
    double theta_min = 0.0, theta_max = 2 * 3.14159265358979323846;
    int n_theta = 64;
    bool theta_wrap = true;  // spherical tube topology; hyperbolic angle is open
    double margin = 0.01;
    double quad_tol = 1e-10;
    bool fd_dw = false;  // force the finite-difference dw path in residuals
};

struct MeshVertex {
    double lambda = 0, theta = 0;
    Vec4 X = Vec4::Zero();
    Eigen::Vector3d poincare = Eigen::Vector3d::Zero();
    double w = 0, sfrak = 1, residual = 0;
    bool in_omega = false;
};

struct ResidualStats {
    int total = 0, in_omega = 0;
    double max = 0, mean = 0, q50 = 0, q90 = 0, q99 = 0;  // over in-Omega vertices
};

struct SurfaceMesh {
    std::vector<MeshVertex> vertices;
    std::vector<std::array<int, 3>> triangles;
    int n_l = 0, n_theta = 0;
    bool theta_wrap = false;
    ResidualStats stats;
};

RotationalSurface build_surface(const MeshSpec& spec);

/// Grid-sampled mesh with per-vertex BH residual |H_f(N)| evaluated through
/// the general engine on the hyperboloid chart. Vertices outside Omega are
/// kept but flagged; statistics cover only the in-Omega subset. Throws
/// "no samples in Omega" only when no vertex can be constructed at all.
SurfaceMesh generate_mesh(const MeshSpec& spec);

/// OBJ with vertices in Poincare-ball coordinates, 1-based triangle faces.
void write_obj(const SurfaceMesh& mesh, std::ostream& os);
/// CSV: s,theta,p1,p2,p3,p4,w,sfrak,residual,in_omega (17 significant digits).
void write_csv(const SurfaceMesh& mesh, std::ostream& os);

}  // namespace randers
