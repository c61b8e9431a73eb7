#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srsphere/geodesic.hpp"
#include "srsphere/sphere.hpp"

namespace srs {

enum class EndpointCase { Fiber, Antipodal, HorizontalSphere, General };

std::string_view to_string(EndpointCase c);
EndpointCase endpoint_case_from_string(std::string_view s);

inline constexpr double kDefaultCaseEps = 1e-10;

/// Target point (z1, z2) of a geodesic leaving (1, 0), tagged by which
/// solver family handles it.
class Endpoint {
public:
    Endpoint(Complex z1, Complex z2, double case_eps = kDefaultCaseEps);
    explicit Endpoint(const SpherePoint& p, double case_eps = kDefaultCaseEps);

    Complex z1() const noexcept { return z1_; }
    Complex z2() const noexcept { return z2_; }
    double abs1() const noexcept { return std::abs(z1_); }
    double abs2() const noexcept { return std::abs(z2_); }
    /// arg z1 in [-pi, pi).
    double theta1() const noexcept;
    /// arg z2 in [-pi, pi).
    double theta2() const noexcept;
    EndpointCase tag() const noexcept { return tag_; }
    double case_eps() const noexcept { return case_eps_; }

private:
    Complex z1_;
    Complex z2_;
    double case_eps_;
    EndpointCase tag_;
};

enum class Family {
    Isolated,  ///< a single geodesic
    Circle,    ///< one member of a family; alpha (horizontal direction) is free
};

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

/// One solution of the boundary value problem from (1, 0).
///
/// sigma1 = sgn cos(rho), sigma2 = sgn sin(rho) (+1 where they vanish).
/// For isolated solutions rho = base + 2 pi q with base in (0, 2pi) and p is
/// the winding integer of the arg z1 equation in the convention of the
/// corresponding sigma system. Fiber families store (p, q) = (k, n) and
/// antipodal families (p, m).
struct BranchSolution {
    int sigma1 = 1;
    int sigma2 = 1;
    int p = 0;
    int q = 0;
    double u = 0.0;
    double rho = 0.0;
    double alpha = 0.0;
    double length = 0.0;
    double residual = 0.0;
    Family family = Family::Isolated;

    bool operator==(const BranchSolution&) const = default;
};

struct SolverConfig {
    int q_max = 8;
    double root_tol = 1e-12;
    int scan_points = 2048;
    int max_fiber_n = 16;

    void validate() const;
};

/// Solutions plus non-fatal diagnostics (rejected roots, empty intervals,
/// reflections).
struct SolveResult {
    std::vector<BranchSolution> solutions;
    std::vector<std::string> notes;
};

inline constexpr double kResidualTolerance = 1e-9;
inline constexpr double kDedupTolerance = 1e-9;

/// Complex 2-norm distance between eval_s3(u, rho, alpha, 1) and (z1, z2).
double endpoint_residual(double u, double rho, double alpha, Complex z1, Complex z2);

// ---------------------------------------------------------------- fiber

struct FiberSolution {
    int n = 1;            ///< number of half turns, rho = pi n
    int k = 0;            ///< extra winding; k = 0 is the principal family
    double u = 0.0;       ///< signed vertical fraction, u = 1 - (omega + 2 pi k)/(pi n)
    double vf = 0.0;      ///< signed vertical speed of the arc-length geodesic
    double length = 0.0;  ///< pi n sqrt(1 - u^2)
    bool reflected = false;  ///< omega in (pi, 2pi), solved through 2pi - omega
    int horizontal_family_dim = 1;  ///< horizontal directions form a (2n-3)-sphere
};

/// All geodesics from a to a e^{i omega} with rho = pi n, n <= n_max, sorted
/// by length. The principal family (k = 0) has length sqrt(omega(2 pi n - omega)).
std::vector<FiberSolution> solve_fiber(double omega, int n_max, int complex_dim = 2);
std::vector<FiberSolution> solve_fiber(const FiberPhase& omega, int n_max, int complex_dim = 2);

/// Fiber solutions on S^3 in BranchSolution form (canonical alpha = 0).
std::vector<BranchSolution> fiber_branches(double omega, int n_max);

// ------------------------------------------------------------ antipodal

/// Geodesics from (1, 0) to (-1, 0) with rho = pi m, m = 1..config.q_max.
std::vector<BranchSolution> solve_antipodal(const SolverConfig& config);

// ----------------------------------------------------- horizontal sphere

/// Phi(rho) = cos(rho) / cos(Psi(rho)). Throws DomainError where
/// z1^2 < cos^2 rho or sin rho = 0.
double phi_function(double rho, double z1);
/// Psi(rho) = rho sqrt(z1^2 - cos^2 rho) / |sin rho|.
double psi_function(double rho, double z1);
/// B(u) = atan(u|z2| / sqrt(|z1|^2 - u^2)) - u arccot(sqrt(|z1|^2 - u^2)/|z2|),
/// odd in u, with B(+-|z1|) = +-(pi/2)(1 - |z1|). Domain |u| <= |z1|.
double b_function(double u, double z1_abs, double z2_abs);

/// Endpoint (z1, |z2| e^{i theta2}) with real z1 in (-1, 1), z1 != 0.
/// Returns the minimizer u = 0, rho = arccos z1 followed by every verified
/// root of Phi(rho) = z1 in the intervals D_1..D_{q_max}.
SolveResult solve_horizontal_sphere(double z1, double theta2, const SolverConfig& config);
/// Same for a tagged endpoint; throws NotOnHorizontalSphere when
/// |Im z1| >= case_eps.
SolveResult solve_horizontal_sphere(const Endpoint& endpoint, const SolverConfig& config);

/// Endpoint (0, e^{i theta2}): u = 0, rho = pi/2 + pi k for rho < 2 pi (q_max + 1).
SolveResult solve_equator(double theta2, const SolverConfig& config);

// --------------------------------------------------------------- general

/// Scan-and-bisect over all sigma systems for q in [q_min, q_max].
/// Requires |z1| > 0 and |z2| > 0; valid on and off the horizontal sphere.
std::vector<BranchSolution> enumerate_branches(Complex z1, Complex z2, int q_min, int q_max,
                                               const SolverConfig& config,
                                               std::vector<std::string>* notes = nullptr);

/// General endpoints only; throws EndpointOnSpecialLocus otherwise and
/// NoSolutionWithinQmax when nothing is found.
SolveResult solve_general(const Endpoint& endpoint, const SolverConfig& config);

/// Dispatch on the endpoint tag.
SolveResult solve(const Endpoint& endpoint, const SolverConfig& config);

/// Merge solutions closer than kDedupTolerance in (u, rho) and sort by
/// (length, q, p, sign u).
void normalize_solutions(std::vector<BranchSolution>& solutions);

}  // namespace srs
