#include "srsphere/sphere.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/core.h>

#include "srsphere/errors.hpp"

namespace srs {

namespace {

constexpr Complex kI{0.0, 1.0};

void normalize_or_throw(ComplexVector& v) {
    const double n = norm(v);
    if (!(std::abs(n - 1.0) <= kUnitNormTolerance)) {
        throw NotUnitNorm(fmt::format("point has norm {:.17g}, expected 1", n));
    }
    for (auto& c : v) c /= n;
}

void require_s3(std::size_t n) {
    if (n != 2) {
        throw DimensionMismatch(fmt::format("SU(2) acts on C^2, got dimension {}", n));
    }
}

}  // namespace

Complex hermitian(std::span<const Complex> u, std::span<const Complex> w) {
    if (u.size() != w.size()) throw DimensionMismatch("vectors of different dimension");
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * std::conj(w[k]);
    return acc;
}

double real_inner(std::span<const Complex> u, std::span<const Complex> w) {
    return hermitian(u, w).real();
}

double norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto& c : v) acc += std::norm(c);
    return std::sqrt(acc);
}

SpherePoint::SpherePoint(ComplexVector coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) {
        throw DimensionMismatch(
            fmt::format("sphere point needs n >= 2 coordinates, got {}", coords_.size()));
    }
    normalize_or_throw(coords_);
}

SpherePoint::SpherePoint(Complex z1, Complex z2) : SpherePoint(ComplexVector{z1, z2}) {}

FiberPhase::FiberPhase(double omega) {
    if (!std::isfinite(omega)) throw InvalidArgument("fiber phase must be finite");
    constexpr double tau = 2.0 * std::numbers::pi;
    double w = std::fmod(omega, tau);
    if (w < 0.0) w += tau;
    if (w >= tau) w = 0.0;
    omega_ = w;
}

SU2Element::SU2Element(Complex phi1, Complex phi2) {
    const double n = std::sqrt(std::norm(phi1) + std::norm(phi2));
    if (!(std::abs(n - 1.0) <= kUnitNormTolerance)) {
        throw NotUnitNorm(fmt::format("SU(2) element has norm {:.17g}", n));
    }
    phi1_ = phi1 / n;
    phi2_ = phi2 / n;
}

SU2Element SU2Element::operator*(const SU2Element& rhs) const {
    const Complex c1 = phi1_ * rhs.phi1_ - std::conj(phi2_) * rhs.phi2_;
    const Complex c2 = phi2_ * rhs.phi1_ + std::conj(phi1_) * rhs.phi2_;
    return {c1, c2};
}

ComplexVector normal_field(const SpherePoint& z) {
    return {z.coords().begin(), z.coords().end()};
}

TangentVector vertical_field(const SpherePoint& z) {
    ComplexVector v;
    v.reserve(z.dim());
    for (const auto& c : z.coords()) v.push_back(kI * c);
    return decompose(z, v);
}

TangentVector decompose(const SpherePoint& z, std::span<const Complex> v) {
    if (v.size() != z.dim()) {
        throw DimensionMismatch(
            fmt::format("tangent vector has {} components, point has {}", v.size(), z.dim()));
    }
    const double normal = real_inner(v, z.coords());
    if (std::abs(normal) > kTangencyTolerance) {
        throw NotTangent(fmt::format("Re<v|z> = {:.3e} exceeds tolerance", normal));
    }
    // Re<v|iz> = Re(v conj(i z)) = Im<v|z>.
    const double vertical = hermitian(v, z.coords()).imag();

    ComplexVector tangent(v.size());
    ComplexVector horizontal(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        tangent[k] = v[k] - normal * z[k];
        horizontal[k] = tangent[k] - vertical * kI * z[k];
    }
    return TangentVector(z, std::move(tangent), std::move(horizontal), vertical);
}

ProjectivePoint hopf_project(const SpherePoint& z) {
    ProjectivePoint out;
    out.representative.assign(z.coords().begin(), z.coords().end());
    for (const auto& c : z.coords()) {
        if (std::abs(c) > 1e-12) {
            const Complex phase = std::conj(c) / std::abs(c);
            for (auto& r : out.representative) r *= phase;
            break;
        }
    }
    if (z.dim() == 2) {
        const Complex w = z[0] * std::conj(z[1]);
        out.bloch = std::array<double, 3>{2.0 * w.real(), 2.0 * w.imag(),
                                          std::norm(z[0]) - std::norm(z[1])};
    }
    return out;
}

ComplexVector su2_act(const SU2Element& phi, std::span<const Complex> v) {
    require_s3(v.size());
    const Complex a = phi.phi1();
    const Complex b = phi.phi2();
    return {a * v[0] - std::conj(b) * v[1], b * v[0] + std::conj(a) * v[1]};
}

SpherePoint su2_act(const SU2Element& phi, const SpherePoint& z) {
    return SpherePoint(su2_act(phi, z.coords()));
}

}  // namespace srs
