#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srsphere/bvp.hpp"
#include "srsphere/sphere.hpp"

namespace srs {

struct DistanceResult {
    double distance = 0.0;
    /// Shortest geodesic found; empty only when the endpoint is the base point.
    std::optional<BranchSolution> minimizer;
    EndpointCase endpoint_case = EndpointCase::General;
    /// Lengths of every candidate examined, ascending.
    std::vector<double> all_lengths;
    /// Largest q whose branches were enumerated.
    int q_used = 0;
    /// Smallest q with at least one solution (general endpoints), else q_used.
    int q_min = 0;
    /// |theta1| sits on the bound (pi/2)(1 - |z1|) of the single-root regime.
    bool boundary_case = false;
    /// The q search stopped because 2 pi q |z2| exceeded the best length,
    /// so no larger q can produce a shorter geodesic.
    bool certified = true;

    bool operator==(const DistanceResult&) const = default;
};

/// Sub-Riemannian distance from (1, 0) to the endpoint.
DistanceResult cc_distance(const Endpoint& endpoint, const SolverConfig& config = {});

/// Distance between two points of S^3, through the SU(2) reduction.
DistanceResult cc_distance(const SpherePoint& a, const SpherePoint& b,
                           const SolverConfig& config = {}, double case_eps = kDefaultCaseEps);

/// phi with phi a = (1, 0), and the endpoint phi b.
std::pair<SU2Element, Endpoint> reduce_pair(const SpherePoint& a, const SpherePoint& b,
                                            double case_eps = kDefaultCaseEps);

/// Length ρ√(1−u₀²) of the q = 0, (+,+) branch where B(u₀) = θ₁.
/// Requires 0 < |θ₁| <= (π/2)(1 − |z₁|); returns the branch as well.
BranchSolution single_root_branch(const Endpoint& endpoint);

struct OracleConfig {
    int grid_u = 401;
    int grid_rho = 2000;
    double rho_max = 4.0 * 3.14159265358979323846;
    int grid_alpha = 256;
    int refine_iters = 60;
    double accept_residual = 1e-6;

    void validate() const;
};

struct OracleResult {
    double length = 0.0;
    double u = 0.0;
    double rho = 0.0;
    double alpha = 0.0;
    double residual = 0.0;
    int candidates = 0;  ///< coarse cells refined
    int accepted = 0;    ///< refinements below accept_residual
};

/// Brute-force shooting: coarse grid over (u, rho), local refinement of
/// (u, rho, alpha) on the endpoint error, minimum length over accepted
/// candidates. Throws OracleNoCandidate when nothing is accepted.
OracleResult shooting_oracle(const Endpoint& endpoint, const OracleConfig& config = {});

}  // namespace srs
