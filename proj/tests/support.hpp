#pragma once

// Test-side helpers. The geodesic evaluator here is written out directly
// from the great-circle-times-phase form so solver results can be checked
// without going through the library's own evaluation code.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "srsphere/sphere.hpp"

namespace srs::test {

using C = std::complex<double>;
using P2 = std::array<C, 2>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTau = 2.0 * kPi;

/// gamma(s) from a = (1, 0) with velocity v = (i u rho, r rho e^{-i alpha}):
/// (a cos(|v| s) + v/|v| sin(|v| s)) e^{-i s vf} with vf = Re<v | i a>.
inline P2 reference_point(double u, double rho, double alpha, double s) {
    const double r = std::sqrt((1.0 - u) * (1.0 + u));
    const P2 v{C(0.0, u * rho), std::polar(r * rho, -alpha)};
    const double speed = rho;  // |v|^2 = u^2 rho^2 + r^2 rho^2
    // Vertical scalar: Re<v | i a> = Re(v1 * conj(i)) = u rho.
    const double vf = (v[0] * std::conj(C(0.0, 1.0))).real();
    const C phase = std::polar(1.0, -s * vf);
    const double c = std::cos(speed * s);
    const double sn = std::sin(speed * s);
    return {(c + v[0] / speed * sn) * phase, (v[1] / speed * sn) * phase};
}

inline double distance2(const P2& a, C z1, C z2) {
    return std::sqrt(std::norm(a[0] - z1) + std::norm(a[1] - z2));
}

inline double angle_diff(double a, double b) { return std::abs(std::remainder(a - b, kTau)); }

inline P2 random_s3(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    P2 z{C(n(rng), n(rng)), C(n(rng), n(rng))};
    const double len = std::sqrt(std::norm(z[0]) + std::norm(z[1]));
    return {z[0] / len, z[1] / len};
}

inline SpherePoint random_point(std::mt19937_64& rng) {
    const auto z = random_s3(rng);
    return SpherePoint(z[0], z[1]);
}

inline SU2Element random_su2(std::mt19937_64& rng) {
    const auto z = random_s3(rng);
    return SU2Element(z[0], z[1]);
}

}  // namespace srs::test
