#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/core.h>

#include "srsphere/errors.hpp"
#include "srsphere/geodesic.hpp"

namespace srs {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * kPi;
}  // namespace

double ratio_from_vf(double vf) {
    if (!(vf >= 0.0) || !std::isfinite(vf)) throw InvalidRatio("vf must be finite and >= 0");
    return vf / std::hypot(1.0, vf);
}

ClassificationReport classify_closed(int p, int q) {
    if (q < 1 || p < 0 || p >= q) {
        throw InvalidRatio(fmt::format("need 0 <= p < q, got {}/{}", p, q));
    }
    if (std::gcd(p, q) != 1) {
        throw InvalidRatio(fmt::format("{}/{} is not in lowest terms", p, q));
    }
    const double root = std::sqrt(static_cast<double>(q) * q - static_cast<double>(p) * p);

    ClassificationReport report;
    report.closed = true;
    report.p = p;
    report.q = q;
    report.ratio = static_cast<double>(p) / q;
    report.vf = p / root;
    report.minimal_period = kTau * root;
    report.loop_length = kTau * root;
    report.segment_length = kPi * root / q;
    // Phases pi n (q - p)/q reduced mod 2pi in integer arithmetic: the
    // multiple of pi/q is n (q - p) mod 2q.
    for (int n = 1; n <= 2 * q; ++n) {
        const long long k = (static_cast<long long>(n) * (q - p)) % (2LL * q);
        report.fiber_hits.push_back({kPi * root * n / q, kPi * static_cast<double>(k) / q});
    }
    return report;
}

ClassificationReport classify_open(double c, int hit_count) {
    if (!(c >= 0.0 && c < 1.0)) throw InvalidRatio(fmt::format("ratio {} outside [0, 1)", c));
    if (hit_count < 0) throw InvalidArgument("hit_count must be nonnegative");
    const double r = std::sqrt((1.0 - c) * (1.0 + c));

    ClassificationReport report;
    report.closed = false;
    report.ratio = c;
    report.vf = c / r;
    report.segment_length = kPi * r;
    for (int n = 1; n <= hit_count; ++n) {
        double phase = std::fmod(kPi * n * (1.0 - c), kTau);
        if (phase < 0.0) phase += kTau;
        report.fiber_hits.push_back({kPi * r * n, phase});
    }
    return report;
}

std::optional<RationalApprox> detect_rational(double c, int q_max, double tol) {
    if (!std::isfinite(c)) return std::nullopt;
    for (int q = 1; q <= q_max; ++q) {
        const double p = std::round(c * q);
        const double err = std::abs(c - p / q);
        if (err <= tol) return RationalApprox{static_cast<int>(p), q, err};
    }
    return std::nullopt;
}

}  // namespace srs
