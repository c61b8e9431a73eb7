#pragma once

// Bracketing helpers shared by the solvers: uniform sign-change scan plus
// bisection, and a fallback for tangential (even-multiplicity) zeros.

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/math/tools/roots.hpp>

namespace srs::detail {

struct Bracket {
    double lo;
    double hi;
};

/// Cells [x_i, x_{i+1}] across which g changes sign, and degenerate
/// brackets at nodes where g is exactly zero.
inline std::vector<Bracket> sign_changes(std::span<const double> xs, std::span<const double> gs) {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (gs[i] == 0.0) {
            out.push_back({xs[i], xs[i]});
            continue;
        }
        if (i + 1 < xs.size() && gs[i + 1] != 0.0 && std::signbit(gs[i]) != std::signbit(gs[i + 1])) {
            out.push_back({xs[i], xs[i + 1]});
        }
    }
    return out;
}

/// Bisection down to an interval of width tol; returns the midpoint.
template <class F>
double bisect(F&& f, Bracket b, double tol) {
    if (b.lo == b.hi) return b.lo;
    auto stop = [tol](double lo, double hi) { return hi - lo <= tol; };
    std::uintmax_t max_iter = 400;
    const auto r = boost::math::tools::bisect(f, b.lo, b.hi, stop, max_iter);
    return 0.5 * (r.first + r.second);
}

/// Interior nodes where |g| has a local minimum without a sign change and
/// |g| < threshold: g may dip through zero between grid points.
inline std::vector<std::size_t> touch_candidates(std::span<const double> gs, double threshold) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < gs.size(); ++i) {
        const double a = std::abs(gs[i - 1]);
        const double b = std::abs(gs[i]);
        const double c = std::abs(gs[i + 1]);
        const bool same_sign = std::signbit(gs[i - 1]) == std::signbit(gs[i]) &&
                               std::signbit(gs[i]) == std::signbit(gs[i + 1]);
        if (same_sign && b < a && b <= c && b < threshold) out.push_back(i);
    }
    return out;
}

/// Golden-section minimization of f on [lo, hi].
template <class F>
double minimize(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

/// Roots of g in [lo, hi] when g has the same sign at both ends and a single
/// turning point inside: either a pair straddling the turning point or a
/// double root at it (|g| < touch_tol there).
template <class F>
std::vector<double> touch_roots(F&& g, double lo, double hi, double tol, double touch_tol) {
    const double side = std::signbit(g(lo)) ? -1.0 : 1.0;
    const double t = minimize([&](double x) { return side * g(x); }, lo, hi, tol);
    const double gt = g(t);
    if (side * gt < 0.0) {
        return {bisect(g, {lo, t}, tol), bisect(g, {t, hi}, tol)};
    }
    if (std::abs(gt) < touch_tol) return {t};
    return {};
}

}  // namespace srs::detail
