#include "randersgeo/geometry_core.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "randersgeo/error.hpp"

namespace randers {

MetricField::MetricField(int dim, ValueFn value, D1Fn d1, D2Fn d2, DiffKernel kern)
    : dim_(dim), value_(std::move(value)), d1_(std::move(d1)), d2_(std::move(d2)), kern_(kern) {}

Mat MetricField::value(const Vec& x) const {
    Mat h = value_(x);
    double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        fail("metric not symmetric at point [", x.transpose(), "]");
    return h;
}

Tensor3 MetricField::first_deriv(const Vec& x) const {
    if (d1_) return d1_(x);
    Tensor3 d(dim_, dim_, dim_);
    for (int c = 0; c < dim_; ++c) {
        double h = kern_.scaled(x[c]);
        Vec xp = x, xm = x;
        xp[c] += h;
        xm[c] -= h;
        Mat dm = (value_(xp) - value_(xm)) / (2 * h);
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b) d(a, b, c) = dm(a, b);
    }
    return d;
}

Tensor4 MetricField::second_deriv(const Vec& x) const {
    if (d2_) return d2_(x);
    Tensor4 dd(dim_, dim_, dim_, dim_);
    if (d1_) {
        // difference the analytic first derivative, Richardson per kernel
        for (int d = 0; d < dim_; ++d) {
            double h = kern_.scaled(x[d]);
            auto diff = [&](double hh) {
                Vec xp = x, xm = x;
                xp[d] += hh;
                xm[d] -= hh;
                Tensor3 tp = d1_(xp), tm = d1_(xm);
                Tensor3 r(dim_, dim_, dim_);
                for (int a = 0; a < dim_; ++a)
                    for (int b = 0; b < dim_; ++b)
                        for (int c = 0; c < dim_; ++c)
                            r(a, b, c) = (tp(a, b, c) - tm(a, b, c)) / (2 * hh);
                return r;
            };
            Tensor3 g = diff(h);
            if (kern_.richardson) {
                Tensor3 g2 = diff(h / 2);
                for (int a = 0; a < dim_; ++a)
                    for (int b = 0; b < dim_; ++b)
                        for (int c = 0; c < dim_; ++c)
                            g(a, b, c) = (4 * g2(a, b, c) - g(a, b, c)) / 3;
            }
            for (int a = 0; a < dim_; ++a)
                for (int b = 0; b < dim_; ++b)
                    for (int c = 0; c < dim_; ++c) dd(a, b, c, d) = g(a, b, c);
        }
        return dd;
    }
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) {
            ScalarFn f = [&](const Vec& y) { return value_(y)(a, b); };
            for (int c = 0; c < dim_; ++c)
                for (int d = c; d < dim_; ++d) {
                    double h = std::max(kern_.scaled(x[c]), kern_.scaled(x[d]));
                    double v = partial2(f, x, c, d, h, kern_.richardson);
                    dd(a, b, c, d) = v;
                    dd(a, b, d, c) = v;
                }
        }
    return dd;
}

Mat MetricField::inverse(const Vec& x) const { return inverse_of(value(x), x); }

Mat MetricField::inverse_of(const Mat& h, const Vec& x) const {
    Eigen::LLT<Mat> llt(h);
    if (llt.info() != Eigen::Success) {
        Eigen::SelfAdjointEigenSolver<Mat> es(h);
        fail("degenerate metric at point [", x.transpose(), "], smallest eigenvalue ",
             es.eigenvalues().minCoeff());
    }
    return llt.solve(Mat::Identity(dim_, dim_));
}

VectorField::VectorField(int dim, ValueFn value, JacFn jac, DiffKernel kern)
    : dim_(dim), value_(std::move(value)), jac_(std::move(jac)), kern_(kern) {}

Mat VectorField::jacobian(const Vec& x) const {
    if (jac_) return jac_(x);
    Mat j(dim_, dim_);
    for (int b = 0; b < dim_; ++b) {
        double h = kern_.scaled(x[b]);
        Vec xp = x, xm = x;
        xp[b] += h;
        xm[b] -= h;
        j.col(b) = (value_(xp) - value_(xm)) / (2 * h);
    }
    return j;
}

VectorField VectorField::zero(int dim) {
    return VectorField(
        dim, [dim](const Vec&) { return Vec(Vec::Zero(dim)); },
        [dim](const Vec&) { return Mat(Mat::Zero(dim, dim)); });
}

Tensor3 christoffel(const MetricField& metric, const Vec& x) {
    const int m = metric.dim();
    Mat h = metric.value(x);
    Mat hinv = metric.inverse_of(h, x);
    Tensor3 dh = metric.first_deriv(x);
    Tensor3 gamma(m, m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = b; c < m; ++c) {
                double s = 0;
                for (int d = 0; d < m; ++d)
                    s += hinv(a, d) * (dh(d, c, b) + dh(d, b, c) - dh(b, c, d));
                gamma(a, b, c) = 0.5 * s;
                gamma(a, c, b) = 0.5 * s;
            }
    return gamma;
}

CovariantDeriv covariant_deriv(const MetricField& metric, const VectorField& w, const Vec& x) {
    const int m = metric.dim();
    Tensor3 gamma = christoffel(metric, x);
    Vec wv = w.value(x);
    Mat jw = w.jacobian(x);
    CovariantDeriv cd;
    cd.up = Mat(m, m);
    for (int b = 0; b < m; ++b)
        for (int e = 0; e < m; ++e) {
            double s = jw(b, e);
            for (int g = 0; g < m; ++g) s += gamma(b, e, g) * wv[g];
            cd.up(b, e) = s;
        }
    cd.low = metric.value(x) * cd.up;
    return cd;
}

Vec grad_norm_sq(const MetricField& metric, const VectorField& w, const Vec& x) {
    const int m = metric.dim();
    CovariantDeriv cd = covariant_deriv(metric, w, x);
    Vec wv = w.value(x);
    // 2 h^{ab} W_{a|c} W_b = 2 W^a W_{a|c}
    Vec g(m);
    for (int c = 0; c < m; ++c) {
        double s = 0;
        for (int a = 0; a < m; ++a) s += wv[a] * cd.low(a, c);
        g[c] = 2 * s;
    }
    return g;
}

KillingResult is_killing(const MetricField& metric, const VectorField& w, const Vec& x,
                         double tol) {
    CovariantDeriv cd = covariant_deriv(metric, w, x);
    double res = (cd.low + cd.low.transpose()).cwiseAbs().maxCoeff();
    return {res <= tol, res};
}

double sectional_curvature(const MetricField& metric, const Vec& x, const Vec& u, const Vec& v) {
    const int m = metric.dim();
    Mat h = metric.value(x);
    double gram = (u.dot(h * u)) * (v.dot(h * v)) - std::pow(u.dot(h * v), 2);
    if (gram < 1e-12) fail("degenerate plane at point [", x.transpose(), "], Gram det ", gram);

    Tensor3 gamma = christoffel(metric, x);
    // dGamma(a,b,c,e) = d_e Gamma^a_{bc}, Richardson central differences
    Tensor4 dg(m, m, m, m);
    const DiffKernel& kern = metric.kernel();
    for (int e = 0; e < m; ++e) {
        double hstep = kern.scaled(x[e]);
        auto diff = [&](double hh) {
            Vec xp = x, xm = x;
            xp[e] += hh;
            xm[e] -= hh;
            Tensor3 gp = christoffel(metric, xp), gm = christoffel(metric, xm);
            Tensor3 r(m, m, m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    for (int c = 0; c < m; ++c) r(a, b, c) = (gp(a, b, c) - gm(a, b, c)) / (2 * hh);
            return r;
        };
        Tensor3 g1 = diff(hstep), g2 = diff(hstep / 2);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    dg(a, b, c, e) = (4 * g2(a, b, c) - g1(a, b, c)) / 3;
    }

    // R^a_{bcd} = d_c G^a_{db} - d_d G^a_{cb} + G^a_{ce} G^e_{db} - G^a_{de} G^e_{cb}
    // K(u,v) = h_{af} u^f R^a_{bcd} v^b u^c v^d / gram
    double num = 0;
    for (int a = 0; a < m; ++a) {
        double ra = 0;
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    double r = dg(a, d, b, c) - dg(a, c, b, d);
                    for (int e = 0; e < m; ++e)
                        r += gamma(a, c, e) * gamma(e, d, b) - gamma(a, d, e) * gamma(e, c, b);
                    ra += r * v[b] * u[c] * v[d];
                }
        double hu = 0;
        for (int f = 0; f < m; ++f) hu += h(a, f) * u[f];
        num += hu * ra;
    }
    return num / gram;
}

}  // namespace randers
