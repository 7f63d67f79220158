// Deterministic scalar optimization and quadrature helpers.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace mzerase {

struct ScanOptimum {
    double x = 0.0;
    double value = 0.0;
    bool flat = false;  // grid spread below flat_tol; x tie-broken to the interval start
};

namespace detail {

inline constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5)-1)/2

// Dense grid over [lo, hi) followed by golden-section refinement of the best
// bracket. `sign` +1 maximizes, -1 minimizes. With `periodic` set, f is
// treated as (hi-lo)-periodic: the refinement bracket may cross the interval
// edges and the result is wrapped back into [lo, hi).
template <typename F>
ScanOptimum grid_golden_scan(F&& f, double lo, double hi, std::size_t grid_points, double x_tol,
                             bool periodic, int sign, double flat_tol) {
    if (!(hi > lo) || grid_points < 2) {
        throw std::invalid_argument("bad scan interval");
    }
    const double span = hi - lo;
    const double step = span / static_cast<double>(grid_points);

    std::size_t best_idx = 0;
    double best = sign * f(lo);
    double worst = best;
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double v = sign * f(lo + step * static_cast<double>(i));
        if (v > best) {
            best = v;
            best_idx = i;
        }
        if (v < worst) worst = v;
    }
    if (best - worst <= flat_tol) {
        return {lo, sign * best, true};
    }

    double a = lo + step * (static_cast<double>(best_idx) - 1.0);
    double b = lo + step * (static_cast<double>(best_idx) + 1.0);
    if (!periodic) {
        a = std::max(a, lo);
        b = std::min(b, hi);
    }
    double c = b - kGoldenRatio * (b - a);
    double d = a + kGoldenRatio * (b - a);
    double fc = sign * f(c);
    double fd = sign * f(d);
    while (b - a > x_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGoldenRatio * (b - a);
            fc = sign * f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGoldenRatio * (b - a);
            fd = sign * f(d);
        }
    }
    double x = 0.5 * (a + b);
    if (periodic) {
        x = lo + std::fmod(std::fmod(x - lo, span) + span, span);
    }
    return {x, f(x), false};
}

}  // namespace detail

template <typename F>
ScanOptimum grid_golden_maximize(F&& f, double lo, double hi, std::size_t grid_points,
                                 double x_tol, bool periodic = false, double flat_tol = 1e-12) {
    return detail::grid_golden_scan(std::forward<F>(f), lo, hi, grid_points, x_tol, periodic, +1,
                                    flat_tol);
}

template <typename F>
ScanOptimum grid_golden_minimize(F&& f, double lo, double hi, std::size_t grid_points,
                                 double x_tol, bool periodic = false, double flat_tol = 1e-12) {
    return detail::grid_golden_scan(std::forward<F>(f), lo, hi, grid_points, x_tol, periodic, -1,
                                    flat_tol);
}

// Composite Simpson rule on [a, b]; panels must be even and >= 2.
template <typename F>
double simpson(F&& f, double a, double b, std::size_t panels) {
    if (panels < 2 || panels % 2 != 0) {
        throw std::invalid_argument("Simpson rule needs an even panel count >= 2");
    }
    const double h = (b - a) / static_cast<double>(panels);
    double acc = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        acc += w * f(a + h * static_cast<double>(i));
    }
    return acc * h / 3.0;
}

}  // namespace mzerase
