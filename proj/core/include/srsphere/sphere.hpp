#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace srs {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kUnitNormTolerance = 1e-9;
inline constexpr double kTangencyTolerance = 1e-9;

/// Hermitian product <u|w> = sum_k u_k conj(w_k).
Complex hermitian(std::span<const Complex> u, std::span<const Complex> w);

/// Real (Euclidean R^{2n}) inner product, Re <u|w>.
double real_inner(std::span<const Complex> u, std::span<const Complex> w);

double norm(std::span<const Complex> v);

/// A point of S^{2n-1} in C^n, n >= 2.
///
/// Inputs whose norm lies within 1e-9 of one are renormalized; anything
/// further away is rejected with NotUnitNorm.
class SpherePoint {
public:
    explicit SpherePoint(ComplexVector coords);
    SpherePoint(Complex z1, Complex z2);

    std::size_t dim() const noexcept { return coords_.size(); }
    std::span<const Complex> coords() const noexcept { return coords_; }
    const Complex& operator[](std::size_t k) const { return coords_[k]; }

private:
    ComplexVector coords_;
};

/// Real tangent vector at a sphere point, split into its horizontal part and
/// a signed multiple of the vertical field V(base) = i*base.
class TangentVector {
public:
    const SpherePoint& base() const noexcept { return base_; }
    std::span<const Complex> components() const noexcept { return components_; }
    std::span<const Complex> horizontal() const noexcept { return horizontal_; }
    /// Signed vertical component Re<v|V(base)>.
    double vertical() const noexcept { return vertical_; }

private:
    friend TangentVector decompose(const SpherePoint& z, std::span<const Complex> v);

    TangentVector(SpherePoint base, ComplexVector components, ComplexVector horizontal,
                  double vertical)
        : base_(std::move(base)),
          components_(std::move(components)),
          horizontal_(std::move(horizontal)),
          vertical_(vertical) {}

    SpherePoint base_;
    ComplexVector components_;
    ComplexVector horizontal_;
    double vertical_;
};

/// Phase along a Hopf fiber, reduced to [0, 2pi).
class FiberPhase {
public:
    explicit FiberPhase(double omega);
    double omega() const noexcept { return omega_; }

private:
    double omega_;
};

/// Unit quaternion written as a pair (phi1, phi2), |phi1|^2 + |phi2|^2 = 1.
///
/// Acts on C^2 through the unitary matrix [[phi1, -conj(phi2)], [phi2, conj(phi1)]].
class SU2Element {
public:
    SU2Element(Complex phi1, Complex phi2);
    static SU2Element identity() { return {1.0, 0.0}; }

    Complex phi1() const noexcept { return phi1_; }
    Complex phi2() const noexcept { return phi2_; }

    SU2Element inverse() const { return {std::conj(phi1_), -phi2_}; }
    /// Group product, (a * b).act(z) == a.act(b.act(z)).
    SU2Element operator*(const SU2Element& rhs) const;

private:
    Complex phi1_;
    Complex phi2_;
};

/// Outward unit normal N(z); in complex coordinates this is z itself.
ComplexVector normal_field(const SpherePoint& z);

/// Vertical field V(z) = i N(z), the unit tangent to the Hopf fiber.
TangentVector vertical_field(const SpherePoint& z);

/// Split a tangent vector into horizontal and signed vertical parts.
/// Throws NotTangent when |Re<v|z>| > 1e-9. A normal component below that
/// threshold is projected away.
TangentVector decompose(const SpherePoint& z, std::span<const Complex> v);

struct ProjectivePoint {
    /// Phase-normalized representative: first coordinate with modulus > 1e-12
    /// is made real and positive.
    ComplexVector representative;
    /// Bloch-sphere coordinates, present only for n = 2.
    std::optional<std::array<double, 3>> bloch;
};

ProjectivePoint hopf_project(const SpherePoint& z);

/// Complex-linear SU(2) action on S^3. Throws DimensionMismatch if n != 2.
SpherePoint su2_act(const SU2Element& phi, const SpherePoint& z);

/// The same linear map applied to a raw vector of C^2 (e.g. a velocity).
ComplexVector su2_act(const SU2Element& phi, std::span<const Complex> v);

}  // namespace srs
