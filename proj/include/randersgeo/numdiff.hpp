#pragma once

#include <functional>

#include "randersgeo/tensor.hpp"

namespace randers {

/// Central-difference kernel shared by all numeric-derivative fallbacks.
/// `step` is scaled by max(1, |coordinate|); `richardson` enables one
/// extrapolation level (always applied to second derivatives by default).
struct DiffKernel {
    double step = 1e-5;
    bool richardson = true;

    double scaled(double coord) const;
};

using ScalarFn = std::function<double(const Vec&)>;

/// d f / d x_j by central differences; one Richardson level if requested.
double partial(const ScalarFn& f, const Vec& x, int j, double h, bool richardson);

/// d^2 f / d x_j d x_k (central, 4-point for j != k); Richardson optional.
double partial2(const ScalarFn& f, const Vec& x, int j, int k, double h, bool richardson);

/// Gradient of f at x with per-coordinate scaled steps.
Vec gradient(const ScalarFn& f, const Vec& x, const DiffKernel& kern);

}  // namespace randers
