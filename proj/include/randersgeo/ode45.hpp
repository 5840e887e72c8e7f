#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "randersgeo/tensor.hpp"

namespace randers {

using OdeRhs = std::function<Vec(double, const Vec&)>;
// Returns a stop reason when the state leaves the admissible region.
using OdeEvent = std::function<std::optional<std::string>(double, const Vec&)>;

struct OdeOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double h_init = 1e-3;
    double h_max = 0.05;
    int max_steps = 500000;
};

struct OdeResult {
    std::vector<double> t;
    std::vector<Vec> y;
    bool event_triggered = false;
    std::string stop_reason;

    double t_end() const { return t.back(); }
    const Vec& y_end() const { return y.back(); }
};

/// Adaptive Dormand-Prince RK45 with event bisection: integration stops just
/// before the first accepted state for which `event` fires, and the reason
/// plus final state are reported.
OdeResult ode45(const OdeRhs& rhs, double t0, double t1, Vec y0, const OdeOptions& opts = {},
                const OdeEvent& event = nullptr);

}  // namespace randers
