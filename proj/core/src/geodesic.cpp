#include "srsphere/geodesic.hpp"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "srsphere/errors.hpp"

namespace srs {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTau = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
    double w = std::fmod(a, kTau);
    if (w < 0.0) w += kTau;
    if (w >= kTau) w = 0.0;
    return w;
}

}  // namespace

GeneralGeodesic::GeneralGeodesic(SpherePoint start, std::span<const Complex> velocity)
    : start_(std::move(start)), velocity_(decompose(start_, velocity)) {
    speed_ = norm(velocity_.components());
    if (!(speed_ > 0.0) || !std::isfinite(speed_)) {
        throw InvalidArgument("geodesic needs a nonzero finite initial velocity");
    }
}

SpherePoint eval_great_circle(const GeneralGeodesic& g, double s) {
    const double c = std::cos(g.speed() * s);
    const double sn = std::sin(g.speed() * s);
    const auto a = g.start().coords();
    const auto v = g.velocity().components();
    ComplexVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * c + v[k] * (sn / g.speed());
    return SpherePoint(std::move(out));
}

SpherePoint eval_general(const GeneralGeodesic& g, double s) {
    const Complex phase = std::exp(-kI * (s * g.vf()));
    const auto great = eval_great_circle(g, s);
    ComplexVector out(great.coords().begin(), great.coords().end());
    for (auto& c : out) c *= phase;
    return SpherePoint(std::move(out));
}

ComplexVector velocity_general(const GeneralGeodesic& g, double s) {
    const double w = g.speed();
    const double c = std::cos(w * s);
    const double sn = std::sin(w * s);
    const Complex phase = std::exp(-kI * (s * g.vf()));
    const auto a = g.start().coords();
    const auto v = g.velocity().components();
    ComplexVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Complex great = a[k] * c + v[k] * (sn / w);
        const Complex great_dot = -a[k] * (w * sn) + v[k] * c;
        out[k] = phase * (great_dot - kI * g.vf() * great);
    }
    return out;
}

GeneralGeodesic arc_length_geodesic(const SpherePoint& a, std::span<const Complex> horizontal,
                                    double vf) {
    if (horizontal.size() != a.dim()) throw DimensionMismatch("horizontal velocity dimension");
    const double h = norm(horizontal);
    if (std::abs(h - 1.0) > kUnitNormTolerance) {
        throw InvalidArgument("arc-length geodesic needs a unit horizontal velocity");
    }
    if (std::abs(hermitian(horizontal, a.coords())) > kTangencyTolerance) {
        throw NotTangent("velocity is not horizontal at the start point");
    }
    ComplexVector v(a.dim());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = horizontal[k] + vf * kI * a[k];
    return GeneralGeodesic(a, v);
}

S3GeodesicParams::S3GeodesicParams(double u, double rho, double alpha) {
    if (!std::isfinite(u) || !(std::abs(u) < 1.0)) {
        throw InvalidArgument(fmt::format("u = {} must lie in (-1, 1)", u));
    }
    if (!std::isfinite(rho) || !(rho > 0.0)) {
        throw InvalidArgument(fmt::format("rho = {} must be positive", rho));
    }
    if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
    u_ = u;
    rho_ = rho;
    alpha_ = reduce_angle(alpha);
    r_ = std::sqrt((1.0 - u) * (1.0 + u));
}

C2 S3GeodesicParams::initial_velocity() const {
    return {kI * (u_ * rho_), r_ * rho_ * std::exp(-kI * alpha_)};
}

C2 s3_point(double u, double rho, double alpha, double s) noexcept {
    const double r = std::sqrt((1.0 - u) * (1.0 + u));
    const double c = std::cos(rho * s);
    const double sn = std::sin(rho * s);
    const double vphase = u * rho * s;
    return {std::polar(1.0, -vphase) * Complex(c, u * sn),
            std::polar(r * sn, -(vphase + alpha))};
}

SpherePoint eval_s3(const S3GeodesicParams& p, double s) {
    const auto z = s3_point(p.u(), p.rho(), p.alpha(), s);
    return SpherePoint(z[0], z[1]);
}

C2 velocity_s3(const S3GeodesicParams& p, double s) {
    const double u = p.u();
    const double rho = p.rho();
    const double c = std::cos(rho * s);
    const double sn = std::sin(rho * s);
    const Complex e1 = std::polar(1.0, -u * rho * s);
    const Complex e2 = std::polar(1.0, -(u * rho * s + p.alpha()));
    const Complex z1 = e1 * Complex(c, u * sn);
    const Complex z2 = p.r() * sn * e2;
    const Complex dz1 = -kI * (u * rho) * z1 + e1 * Complex(-rho * sn, u * rho * c);
    const Complex dz2 = -kI * (u * rho) * z2 + p.r() * rho * c * e2;
    return {dz1, dz2};
}

double arc_length(const S3GeodesicParams& p) { return p.r() * p.rho(); }

S3GeodesicParams params_for_length(double u, double length, double alpha) {
    if (!(std::abs(u) < 1.0)) throw InvalidArgument("u must lie in (-1, 1)");
    const double r = std::sqrt((1.0 - u) * (1.0 + u));
    return S3GeodesicParams(u, length / r, alpha);
}

HorizontalityReport check_horizontal(const std::function<CurveSample(double)>& sampler,
                                     int grid_size, double s0, double s1) {
    if (grid_size < 2) throw InvalidArgument("horizontality grid needs at least 2 points");
    HorizontalityReport report;
    for (int k = 0; k < grid_size; ++k) {
        const double s = s0 + (s1 - s0) * k / (grid_size - 1);
        const auto sample = sampler(s);
        const double violation = std::abs(hermitian(sample.velocity, sample.point.coords()));
        if (violation > report.max_violation || k == 0) {
            report.max_violation = violation;
            report.worst_s = s;
        }
    }
    report.passed = report.max_violation < kHorizontalityTolerance;
    return report;
}

double clifford_torus_level(double vf) {
    if (!(vf >= 0.0) || std::isnan(vf)) throw InvalidArgument("vf must be nonnegative");
    // sqrt(1 + vf^2) - vf, written without cancellation.
    const double gap = 1.0 / (std::hypot(1.0, vf) + vf);
    return 1.0 / (1.0 + gap * gap);
}

SU2Element clifford_translation(double vf, double alpha) {
    const double level = clifford_torus_level(vf);
    const double rho = std::sqrt(level);
    const double rest = std::sqrt(1.0 - level);
    return {Complex(rho, 0.0), kI * std::polar(rest, alpha)};
}

std::vector<std::pair<double, C2>> sample_s3(const S3GeodesicParams& p, int n) {
    if (n < 2) throw InvalidArgument("need at least 2 samples");
    std::vector<std::pair<double, C2>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double s = (k == n - 1) ? 1.0 : static_cast<double>(k) / (n - 1);
        out.emplace_back(s, s3_point(p.u(), p.rho(), p.alpha(), s));
    }
    return out;
}

}  // namespace srs
