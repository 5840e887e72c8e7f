#include "randersgeo/ode45.hpp"

#include <algorithm>
#include <cmath>

#include "randersgeo/error.hpp"

namespace randers {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
    Vec y;
    Vec err;
};

StepResult dp_step(const OdeRhs& f, double t, const Vec& y, double h) {
    Vec k1 = f(t, y);
    Vec k2 = f(t + c2 * h, y + h * (a21 * k1));
    Vec k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    Vec k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    Vec k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    Vec k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    Vec y1 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    Vec k7 = f(t + h, y1);
    Vec err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    return {y1, err};
}

}  // namespace

OdeResult ode45(const OdeRhs& rhs, double t0, double t1, Vec y0, const OdeOptions& opts,
                const OdeEvent& event) {
    OdeResult out;
    out.t.push_back(t0);
    out.y.push_back(y0);
    if (event) {
        if (auto reason = event(t0, y0)) {
            out.event_triggered = true;
            out.stop_reason = *reason;
            return out;
        }
    }

    double dir = (t1 >= t0) ? 1.0 : -1.0;
    double t = t0;
    Vec y = y0;
    double h = std::min(opts.h_init, std::abs(t1 - t0)) * dir;

    for (int step = 0; step < opts.max_steps; ++step) {
        if (dir * (t - t1) >= 0) break;
        if (dir * (t + h - t1) > 0) h = t1 - t;

        StepResult sr = dp_step(rhs, t, y, h);
        double err_norm = 0;
        for (int i = 0; i < y.size(); ++i) {
            double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(sr.y[i]));
            err_norm = std::max(err_norm, std::abs(sr.err[i]) / sc);
        }
        if (err_norm <= 1.0) {
            // accepted; check events, bisect the step to the boundary if one fires
            if (event) {
                if (auto reason = event(t + h, sr.y)) {
                    double lo = 0, hi = 1;
                    Vec y_lo = y;
                    for (int it = 0; it < 60; ++it) {
                        double mid = 0.5 * (lo + hi);
                        StepResult sm = dp_step(rhs, t, y, h * mid);
                        if (event(t + h * mid, sm.y)) {
                            hi = mid;
                        } else {
                            lo = mid;
                            y_lo = sm.y;
                        }
                    }
                    if (lo > 0) {
                        out.t.push_back(t + h * lo);
                        out.y.push_back(y_lo);
                    }
                    out.event_triggered = true;
                    out.stop_reason = *reason;
                    return out;
                }
            }
            t += h;
            y = sr.y;
            out.t.push_back(t);
            out.y.push_back(y);
            double factor = (err_norm > 0) ? 0.9 * std::pow(err_norm, -0.2) : 5.0;
            h *= std::clamp(factor, 0.2, 5.0);
            if (std::abs(h) > opts.h_max) h = opts.h_max * dir;
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
            if (std::abs(h) < 1e-14) fail("ode45 step underflow at t = ", t);
        }
    }
    return out;
}

}  // namespace randers
