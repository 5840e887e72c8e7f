#pragma once

#include <functional>
#include <utility>

#include "randersgeo/numdiff.hpp"
#include "randersgeo/tensor.hpp"

namespace randers {

/**
 * Chart-based Riemannian metric h_{ab}(x). Coordinate derivatives come from
 * user-supplied analytic callbacks when available and fall back to central
 * differences of the next lower derivative level otherwise.
 */
class MetricField {
public:
    using ValueFn = std::function<Mat(const Vec&)>;
    using D1Fn = std::function<Tensor3(const Vec&)>;  // (a,b,c) -> d_c h_{ab}
    using D2Fn = std::function<Tensor4(const Vec&)>;  // (a,b,c,d) -> d_d d_c h_{ab}

    MetricField(int dim, ValueFn value, D1Fn d1 = nullptr, D2Fn d2 = nullptr,
                DiffKernel kern = {});

    int dim() const { return dim_; }
    const DiffKernel& kernel() const { return kern_; }
    bool analytic_first() const { return static_cast<bool>(d1_); }

    /// Metric matrix at x; validates symmetry.
    Mat value(const Vec& x) const;
    /// d_c h_{ab}; analytic or central-difference of value().
    Tensor3 first_deriv(const Vec& x) const;
    /// d_d d_c h_{ab}; analytic, or differences of the best available level.
    Tensor4 second_deriv(const Vec& x) const;
    /// SPD inverse; throws "degenerate metric" with the point and the
    /// smallest eigenvalue on failure.
    Mat inverse(const Vec& x) const;
    Mat inverse_of(const Mat& h, const Vec& x) const;

private:
    int dim_;
    ValueFn value_;
    D1Fn d1_;
    D2Fn d2_;
    DiffKernel kern_;
};

class VectorField {
public:
    using ValueFn = std::function<Vec(const Vec&)>;
    using JacFn = std::function<Mat(const Vec&)>;  // (a,b) -> d W^a / d x^b

    VectorField(int dim, ValueFn value, JacFn jac = nullptr, DiffKernel kern = {});

    int dim() const { return dim_; }
    Vec value(const Vec& x) const { return value_(x); }
    Mat jacobian(const Vec& x) const;

    static VectorField zero(int dim);

private:
    int dim_;
    ValueFn value_;
    JacFn jac_;
    DiffKernel kern_;
};

/// Christoffel symbols G^a_{bc} of the Levi-Civita connection, symmetric in (b,c).
Tensor3 christoffel(const MetricField& h, const Vec& x);

struct CovariantDeriv {
    Mat up;   // W^b_{|e}  (row b, col e)
    Mat low;  // W_{a|e} = h_{ab} W^b_{|e}
};
CovariantDeriv covariant_deriv(const MetricField& h, const VectorField& w, const Vec& x);

/// d_c ||W||_h^2 = 2 h^{ab} W_{a|c} W_b.
Vec grad_norm_sq(const MetricField& h, const VectorField& w, const Vec& x);

struct KillingResult {
    bool killing;
    double residual;  // max |W_{a|b} + W_{b|a}|
};
KillingResult is_killing(const MetricField& h, const VectorField& w, const Vec& x, double tol);

/// Sectional curvature of the plane span{u, v}; throws on a degenerate plane.
double sectional_curvature(const MetricField& h, const Vec& x, const Vec& u, const Vec& v);

}  // namespace randers
