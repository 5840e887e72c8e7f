#pragma once

#include <functional>

#include "randersgeo/geometry_core.hpp"

namespace randers {

enum class MeasureKind { BH, HT, Custom };

/**
 * Volume density pair (rho, chi). rho is a function of the navigation
 * scalar s; chi is a function of ||W||^2 (log_chi_p is d log(chi) / d ||W||^2).
 * BH:  rho = s^(-n/2), chi = 1.
 * HT:  rho = s^(1/2),  chi = (1 - ||W||^2)^((n+1)/2).
 * The built-in kinds route through the same generic callables as custom
 * specs, so a custom spec fed the BH/HT formulas reproduces them bit for bit.
 */
class MeasureSpec {
public:
    using Fn = std::function<double(double)>;

    static MeasureSpec bh(int n);
    static MeasureSpec ht(int n);
    static MeasureSpec custom(int n, Fn rho, Fn rho_p, Fn rho_pp = nullptr, Fn chi = nullptr,
                              Fn log_chi_p = nullptr);

    MeasureKind kind() const { return kind_; }
    int n() const { return n_; }

    double rho(double s) const;
    double rho_p(double s) const;
    double rho_pp(double s) const;  // central difference of rho_p if not supplied
    double chi(double wn2) const;
    double log_chi_p(double wn2) const;

    /// Volume ratio function: Phi = 2 rho'(s)(1-s) + rho(s) and its s-derivative.
    /// Throws "invalid s" for s <= 0.
    std::pair<double, double> phi(double s) const;

private:
    MeasureSpec() = default;
    MeasureKind kind_ = MeasureKind::Custom;
    int n_ = 0;
    Fn rho_, rho_p_, rho_pp_, chi_, log_chi_p_;
};

struct NavigationData {
    MetricField metric;
    VectorField wind;
    MeasureSpec measure;

    int ambient_dim() const { return metric.dim(); }
};

struct InducedGeometry;  // immersion_geometry.hpp

/// s = 1 - ||W~||^2 + ||W||^2 from an already-populated induced geometry.
double frak_s(const InducedGeometry& geom);

/// Volume density F(x, z) = rho(s)/chi * sqrt(det h_ij), h_ij = h~_{ab} z^a_i z^b_j.
/// Throws on rank-deficient z and on s outside (0, ...].
double density(const NavigationData& nav, const Vec& x, const Mat& z);

/// Randers norm F(x, y) solving || y/F - W~ ||_h~ = 1 (Zermelo navigation).
double randers_norm(const NavigationData& nav, const Vec& x, const Vec& y);

}  // namespace randers
