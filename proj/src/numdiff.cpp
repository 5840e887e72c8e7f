#include "randersgeo/numdiff.hpp"

#include <cmath>

namespace randers {

double DiffKernel::scaled(double coord) const { return step * std::max(1.0, std::abs(coord)); }

namespace {

double central(const ScalarFn& f, const Vec& x, int j, double h) {
    Vec xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    return (f(xp) - f(xm)) / (2 * h);
}

double central2(const ScalarFn& f, const Vec& x, int j, int k, double h, double f0) {
    if (j == k) {
        Vec xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        return (f(xp) - 2 * f0 + f(xm)) / (h * h);
    }
    Vec xpp = x, xpm = x, xmp = x, xmm = x;
    xpp[j] += h; xpp[k] += h;
    xpm[j] += h; xpm[k] -= h;
    xmp[j] -= h; xmp[k] += h;
    xmm[j] -= h; xmm[k] -= h;
    return (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4 * h * h);
}

}  // namespace

double partial(const ScalarFn& f, const Vec& x, int j, double h, bool richardson) {
    double d_h = central(f, x, j, h);
    if (!richardson) return d_h;
    double d_h2 = central(f, x, j, h / 2);
    return (4 * d_h2 - d_h) / 3;
}

double partial2(const ScalarFn& f, const Vec& x, int j, int k, double h, bool richardson) {
    double f0 = (j == k) ? f(x) : 0.0;
    double d_h = central2(f, x, j, k, h, f0);
    if (!richardson) return d_h;
    double d_h2 = central2(f, x, j, k, h / 2, f0);
    return (4 * d_h2 - d_h) / 3;
}

Vec gradient(const ScalarFn& f, const Vec& x, const DiffKernel& kern) {
    Vec g(x.size());
    for (int j = 0; j < x.size(); ++j)
        g[j] = partial(f, x, j, kern.scaled(x[j]), kern.richardson);
    return g;
}

}  // namespace randers
