#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "srsphere/sphere.hpp"

namespace srs {

/// Point of S^3 without validation; used in hot loops.
using C2 = std::array<Complex, 2>;

/// Normal geodesic on S^{2n-1} determined by its start point and initial
/// velocity. The velocity may carry a vertical component; the curve is the
/// great circle with that velocity compensated by the phase exp(-i s vf).
class GeneralGeodesic {
public:
    GeneralGeodesic(SpherePoint start, std::span<const Complex> velocity);

    const SpherePoint& start() const noexcept { return start_; }
    const TangentVector& velocity() const noexcept { return velocity_; }
    /// Euclidean speed of the initial velocity, ||v||.
    double speed() const noexcept { return speed_; }
    /// Signed vertical scalar of the initial velocity.
    double vf() const noexcept { return velocity_.vertical(); }

private:
    SpherePoint start_;
    TangentVector velocity_;
    double speed_;
};

SpherePoint eval_general(const GeneralGeodesic& g, double s);
ComplexVector velocity_general(const GeneralGeodesic& g, double s);

/// The great circle through the same start point and velocity, i.e. the
/// geodesic without its compensating fiber phase.
SpherePoint eval_great_circle(const GeneralGeodesic& g, double s);

/// Arc-length geodesic from `a` with unit horizontal velocity `horizontal`
/// (Hermitian-orthogonal to a) and vertical speed `vf`.
GeneralGeodesic arc_length_geodesic(const SpherePoint& a, std::span<const Complex> horizontal,
                                    double vf);

/// (u, rho, alpha) form of geodesics on S^3 leaving (1, 0), clock s in [0, 1].
///
/// u is the vertical fraction of the velocity, rho = ||v|| and alpha the
/// argument of the horizontal part, stored as written in
/// z2(s) = r exp(-i(u rho s + alpha)) sin(rho s).
class S3GeodesicParams {
public:
    S3GeodesicParams(double u, double rho, double alpha);

    double u() const noexcept { return u_; }
    double rho() const noexcept { return rho_; }
    double alpha() const noexcept { return alpha_; }
    double r() const noexcept { return r_; }

    /// Initial velocity (i u rho, r rho exp(-i alpha)) at (1, 0).
    C2 initial_velocity() const;

private:
    double u_;
    double rho_;
    double alpha_;
    double r_;
};

/// Unchecked closed-form evaluation; no validation or allocation.
C2 s3_point(double u, double rho, double alpha, double s) noexcept;

SpherePoint eval_s3(const S3GeodesicParams& p, double s);
/// Analytic derivative d/ds of eval_s3.
C2 velocity_s3(const S3GeodesicParams& p, double s);
/// Length r*rho of the curve traversed over s in [0, 1].
double arc_length(const S3GeodesicParams& p);

/// Returns the S^3 parameters matching an arc-length clock of total length L:
/// the same curve re-clocked so that s in [0, 1] covers length L.
S3GeodesicParams params_for_length(double u, double length, double alpha);

struct CurveSample {
    SpherePoint point;
    ComplexVector velocity;
};

struct HorizontalityReport {
    double max_violation = 0.0;
    double worst_s = 0.0;
    bool passed = false;
};

inline constexpr double kHorizontalityTolerance = 1e-9;

/// Max over a uniform grid on [s0, s1] of |<gamma', gamma>|.
HorizontalityReport check_horizontal(const std::function<CurveSample(double)>& sampler,
                                     int grid_size, double s0 = 0.0, double s1 = 1.0);

struct FiberHit {
    double s;      ///< arc-length time of the hit
    double phase;  ///< theta with gamma(s) = a exp(i theta), in [0, 2pi)

    bool operator==(const FiberHit&) const = default;
};

struct ClassificationReport {
    bool closed = false;
    std::optional<int> p;
    std::optional<int> q;
    double ratio = 0.0;  ///< c = vf / sqrt(1 + vf^2)
    double vf = 0.0;
    std::optional<double> minimal_period;
    std::optional<double> loop_length;
    std::vector<FiberHit> fiber_hits;
    double segment_length = 0.0;

    bool operator==(const ClassificationReport&) const = default;
};

/// Closed geodesic with c = p/q (coprime, 0 <= p < q). Fiber hits cover one
/// period (2q entries).
ClassificationReport classify_closed(int p, int q);

/// Open geodesic with real ratio c in [0, 1); reports the first `hit_count`
/// fiber intersections.
ClassificationReport classify_open(double c, int hit_count = 8);

/// c = vf / sqrt(1 + vf^2) for vertical speed vf >= 0 of an arc-length geodesic.
double ratio_from_vf(double vf);

struct RationalApprox {
    int p;
    int q;
    double error;
};

/// Smallest-denominator fraction p/q, q <= q_max, within tol of c.
std::optional<RationalApprox> detect_rational(double c, int q_max = 64, double tol = 1e-9);

/// Squared modulus rho^2 of the first coordinate on the Clifford torus that
/// contains the translated arc-length geodesic with vertical speed vf >= 0.
double clifford_torus_level(double vf);

/// The SU(2) element (rho, i e^{i alpha} sqrt(1 - rho^2)) that carries the
/// geodesic with horizontal velocity e^{i alpha} onto that torus.
SU2Element clifford_translation(double vf, double alpha);

/// Uniform samples s_k = k/(n-1), k = 0..n-1, of eval_s3.
std::vector<std::pair<double, C2>> sample_s3(const S3GeodesicParams& p, int n);

}  // namespace srs
