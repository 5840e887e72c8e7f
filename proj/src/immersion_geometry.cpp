#include "randersgeo/immersion_geometry.hpp"

#include <Eigen/LU>
#include <cmath>

#include "randersgeo/error.hpp"

namespace randers {

void ImmersionJet2::validate() const {
    if (z.rows() != n + p || z.cols() != n) fail("immersion jet has wrong shape");
    Eigen::FullPivLU<Mat> lu(z);
    if (lu.rank() < n)
        fail("degenerate immersion jet at parameters [", x.transpose(), "] (rank ", lu.rank(),
             " < ", n, ")");
    for (int a = 0; a < n + p; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(z2(a, i, j) - z2(a, j, i)) > 1e-12)
                    fail("immersion second jet not symmetric in (i,j)");
}

namespace {

// z^e_ij + G~^e_{td} z^t_j z^d_i, symmetric in (i,j)
Tensor3 gauss_bracket(const ImmersionJet2& jet, const Tensor3& gamma) {
    const int n = jet.n, m = jet.n + jet.p;
    Tensor3 g(m, n, n);
    for (int e = 0; e < m; ++e)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = jet.z2(e, i, j);
                for (int t = 0; t < m; ++t)
                    for (int d = 0; d < m; ++d) s += gamma(e, t, d) * jet.z(t, j) * jet.z(d, i);
                g(e, i, j) = s;
            }
    return g;
}

Vec orientation_normal(const Mat& z, const Mat& ht, const Vec& x) {
    const int n = static_cast<int>(z.cols());
    Mat ker_of = z.transpose() * ht;  // n x (n+1)
    Eigen::FullPivLU<Mat> lu(ker_of);
    Mat kernel = lu.kernel();
    if (kernel.cols() != 1)
        fail("cannot orient normal at parameters [", x.transpose(), "] (kernel dim ",
             kernel.cols(), ")");
    Vec v = kernel.col(0);
    v /= std::sqrt(v.dot(ht * v));
    Mat frame(n + 1, n + 1);
    frame.leftCols(n) = z;
    frame.col(n) = v;
    if (frame.determinant() < 0) v = -v;
    return v;
}

}  // namespace

InducedGeometry induced_geometry(const NavigationData& nav, const ImmersionJet2& jet,
                                 const Vec* normal_override) {
    jet.validate();
    const int n = jet.n, p = jet.p, m = n + p;
    InducedGeometry g;
    g.n = n;
    g.p = p;

    g.ambient_metric = nav.metric.value(jet.fx);
    g.h = jet.z.transpose() * g.ambient_metric * jet.z;
    Eigen::LLT<Mat> llt(g.h);
    if (llt.info() != Eigen::Success)
        fail("degenerate induced metric at parameters [", jet.x.transpose(), "]");
    g.h_inv = llt.solve(Mat::Identity(n, n));
    g.ambient_metric_inv = nav.metric.inverse_of(g.ambient_metric, jet.fx);

    g.A_up = g.h_inv * jet.z.transpose();          // A^{i a}
    g.A_mixed = g.A_up * g.ambient_metric;         // A^i_a
    g.B_up = jet.z * g.A_up;                       // B^{ab} = z^a_i A^{i b}
    g.B_mixed = g.B_up * g.ambient_metric;         // B^a_b
    g.B_low = g.ambient_metric * g.B_mixed;        // B_{ab}

    Tensor3 gamma = christoffel(nav.metric, jet.fx);
    Tensor3 bracket = gauss_bracket(jet, gamma);
    g.tau = Tensor3(m, n, n);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = bracket(a, i, j);
                for (int e = 0; e < m; ++e) s -= g.B_mixed(a, e) * bracket(e, i, j);
                g.tau(a, i, j) = s;
            }

    g.wind_up = nav.wind.value(jet.fx);
    g.wind_low = g.ambient_metric * g.wind_up;
    g.wind_norm2 = g.wind_up.dot(g.wind_low);
    if (g.wind_norm2 >= 1.0)
        fail("outside Randers domain at point [", jet.fx.transpose(), "], ||W||^2 = ",
             g.wind_norm2);
    g.w_cov = jet.z.transpose() * g.wind_low;
    g.w_norm2 = g.w_cov.dot(g.h_inv * g.w_cov);
    g.sfrak = 1.0 - g.wind_norm2 + g.w_norm2;

    if (p == 1) {
        if (normal_override) {
            Vec nv = *normal_override;
            double nn = nv.dot(g.ambient_metric * nv);
            if (!(nn > 0)) fail("normal override not spacelike");
            nv /= std::sqrt(nn);
            double tang = (jet.z.transpose() * (g.ambient_metric * nv)).cwiseAbs().maxCoeff();
            if (tang > 1e-8)
                fail("normal override not orthogonal at parameters [", jet.x.transpose(),
                     "], residual ", tang);
            g.normal = nv;
        } else {
            g.normal = orientation_normal(jet.z, g.ambient_metric, jet.x);
        }
        g.has_normal = true;
        Vec trace_tau = Vec::Zero(m);
        for (int a = 0; a < m; ++a) {
            double s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) s += g.h_inv(i, j) * g.tau(a, i, j);
            trace_tau[a] = s;
        }
        g.mean_curv = g.normal.dot(g.ambient_metric * trace_tau) / n;
        g.w = g.normal.dot(g.ambient_metric * g.wind_up);
    }
    return g;
}

Tensor3 second_fundamental_form(const NavigationData& nav, const ImmersionJet2& jet) {
    return induced_geometry(nav, jet).tau;
}

Tensor3 second_fundamental_form_via_gamma(const NavigationData& nav, const ImmersionJet2& jet) {
    jet.validate();
    const int n = jet.n, m = jet.n + jet.p;
    Mat ht = nav.metric.value(jet.fx);
    Mat h = jet.z.transpose() * ht * jet.z;
    Mat h_inv = h.llt().solve(Mat::Identity(n, n));
    Mat A_mixed = h_inv * jet.z.transpose() * ht;
    Tensor3 gamma = christoffel(nav.metric, jet.fx);
    Tensor3 bracket = gauss_bracket(jet, gamma);
    // G^k_ij = A^k_e (z^e_ij + G~ z z), then tau = bracket - z^a_k G^k_ij
    Tensor3 tau(m, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec g_ij(n);
            for (int k = 0; k < n; ++k) {
                double s = 0;
                for (int e = 0; e < m; ++e) s += A_mixed(k, e) * bracket(e, i, j);
                g_ij[k] = s;
            }
            for (int a = 0; a < m; ++a) {
                double s = bracket(a, i, j);
                for (int k = 0; k < n; ++k) s -= jet.z(a, k) * g_ij[k];
                tau(a, i, j) = s;
            }
        }
    return tau;
}

double w_of(const NavigationData& nav, const ImmersionHandle& f, const Vec& x) {
    ImmersionJet2 jet = f.jet(x);
    std::optional<Vec> nv;
    if (f.normal_override) nv = f.normal_override(x);
    InducedGeometry g = induced_geometry(nav, jet, nv ? &*nv : nullptr);
    return g.w;
}

double pairing_df_grad_w(const NavigationData& nav, const ImmersionHandle& f, const Vec& x,
                         const DiffKernel& kern) {
    if (f.p != 1) fail("pairing_df_grad_w requires a hypersurface (p = 1)");
    Vec dw;
    if (f.dw) {
        dw = f.dw(x);
    } else {
        ScalarFn wfun = [&](const Vec& params) { return w_of(nav, f, params); };
        dw = gradient(wfun, x, kern);
    }
    ImmersionJet2 jet = f.jet(x);
    std::optional<Vec> nv;
    if (f.normal_override) nv = f.normal_override(x);
    InducedGeometry g = induced_geometry(nav, jet, nv ? &*nv : nullptr);
    return dw.dot(g.h_inv * g.w_cov);
}

}  // namespace randers
