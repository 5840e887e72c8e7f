#include "randersgeo/randers_measure.hpp"

#include <cmath>

#include "randersgeo/error.hpp"
#include "randersgeo/immersion_geometry.hpp"

namespace randers {

MeasureSpec MeasureSpec::bh(int n) {
    MeasureSpec m;
    m.kind_ = MeasureKind::BH;
    m.n_ = n;
    double ex = -n / 2.0;
    m.rho_ = [ex](double s) { return std::pow(s, ex); };
    m.rho_p_ = [ex](double s) { return ex * std::pow(s, ex - 1); };
    m.rho_pp_ = [ex](double s) { return ex * (ex - 1) * std::pow(s, ex - 2); };
    m.chi_ = [](double) { return 1.0; };
    m.log_chi_p_ = [](double) { return 0.0; };
    return m;
}

MeasureSpec MeasureSpec::ht(int n) {
    MeasureSpec m;
    m.kind_ = MeasureKind::HT;
    m.n_ = n;
    m.rho_ = [](double s) { return std::sqrt(s); };
    m.rho_p_ = [](double s) { return 0.5 / std::sqrt(s); };
    m.rho_pp_ = [](double s) { return -0.25 * std::pow(s, -1.5); };
    double ex = (n + 1) / 2.0;
    m.chi_ = [ex](double wn2) { return std::pow(1 - wn2, ex); };
    m.log_chi_p_ = [ex](double wn2) { return -ex / (1 - wn2); };
    return m;
}

MeasureSpec MeasureSpec::custom(int n, Fn rho, Fn rho_p, Fn rho_pp, Fn chi, Fn log_chi_p) {
    MeasureSpec m;
    m.kind_ = MeasureKind::Custom;
    m.n_ = n;
    m.rho_ = std::move(rho);
    m.rho_p_ = std::move(rho_p);
    m.rho_pp_ = std::move(rho_pp);
    m.chi_ = std::move(chi);
    m.log_chi_p_ = std::move(log_chi_p);
    return m;
}

double MeasureSpec::rho(double s) const { return rho_(s); }
double MeasureSpec::rho_p(double s) const { return rho_p_(s); }

double MeasureSpec::rho_pp(double s) const {
    if (rho_pp_) return rho_pp_(s);
    const double h = 1e-6;  // custom handles may lack analytic second derivatives
    return (rho_p_(s + h) - rho_p_(s - h)) / (2 * h);
}

double MeasureSpec::chi(double wn2) const { return chi_ ? chi_(wn2) : 1.0; }

double MeasureSpec::log_chi_p(double wn2) const {
    if (log_chi_p_) return log_chi_p_(wn2);
    if (!chi_) return 0.0;
    const double h = 1e-6;
    return (std::log(chi_(wn2 + h)) - std::log(chi_(wn2 - h))) / (2 * h);
}

std::pair<double, double> MeasureSpec::phi(double s) const {
    if (!(s > 0)) fail("invalid s = ", s, " (must be positive)");
    double value = 2 * rho_p(s) * (1 - s) + rho(s);
    double deriv = 2 * rho_pp(s) * (1 - s) - rho_p(s);
    return {value, deriv};
}

double frak_s(const InducedGeometry& geom) { return 1.0 - geom.wind_norm2 + geom.w_norm2; }

double density(const NavigationData& nav, const Vec& x, const Mat& z) {
    const int n = static_cast<int>(z.cols());
    Mat ht = nav.metric.value(x);
    Mat h = z.transpose() * ht * z;
    Eigen::LLT<Mat> llt(h);
    if (llt.info() != Eigen::Success)
        fail("degenerate immersion jet at point [", x.transpose(), "] (rank < ", n, ")");
    double sqrt_det = 1.0;
    for (int i = 0; i < n; ++i) sqrt_det *= llt.matrixL()(i, i);

    Vec wv = nav.wind.value(x);
    Vec w_low = ht * wv;
    double wn2 = wv.dot(w_low);
    if (wn2 >= 1.0) fail("outside Randers domain at point [", x.transpose(), "], ||W||^2 = ", wn2);
    Vec w_cov = z.transpose() * w_low;  // W_i
    double wtan2 = w_cov.dot(llt.solve(w_cov));
    double s = 1.0 - wn2 + wtan2;
    if (!(s > 0)) fail("invalid s = ", s, " at point [", x.transpose(), "]");
    return nav.measure.rho(s) / nav.measure.chi(wn2) * sqrt_det;
}

double randers_norm(const NavigationData& nav, const Vec& x, const Vec& y) {
    if (y.norm() == 0) fail("zero vector in randers_norm");
    Mat ht = nav.metric.value(x);
    Vec wv = nav.wind.value(x);
    double wn2 = wv.dot(ht * wv);
    if (wn2 >= 1.0) fail("outside Randers domain at point [", x.transpose(), "], ||W||^2 = ", wn2);
    double lambda = 1.0 - wn2;
    double wy = wv.dot(ht * y);
    double yy = y.dot(ht * y);
    return (std::sqrt(lambda * yy + wy * wy) - wy) / lambda;
}

}  // namespace randers
