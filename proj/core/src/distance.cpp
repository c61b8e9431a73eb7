#include "srsphere/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/core.h>

#include "scan.hpp"
#include "solution_util.hpp"
#include "srsphere/errors.hpp"

namespace srs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * kPi;
constexpr double kConsistencyTolerance = 1e-9;

struct Search {
    std::vector<BranchSolution> solutions;
    int q_used = 0;
    int q_min = -1;
    bool certified = false;
};

// Enumerate q = 0, 1, ... until 2 pi q |z2| reaches the best length found:
// every geodesic with rho >= 2 pi q has length >= 2 pi q sqrt(1 - u^2) >= 2 pi q |z2|.
Search certified_search(Complex z1, Complex z2, const SolverConfig& config) {
    const double a2 = std::abs(z2);
    Search s;
    double best = std::numeric_limits<double>::infinity();
    for (int q = 0; q <= config.q_max; ++q) {
        if (kTau * q * a2 >= best) {
            s.certified = true;
            break;
        }
        auto found = enumerate_branches(z1, z2, q, q, config);
        if (!found.empty() && s.q_min < 0) s.q_min = q;
        for (const auto& b : found) best = std::min(best, b.length);
        s.solutions.insert(s.solutions.end(), found.begin(), found.end());
        s.q_used = q;
    }
    if (s.solutions.empty()) {
        throw NoSolutionWithinQmax(
            fmt::format("no branch admits a root for q <= {}; raise q_max", config.q_max));
    }
    normalize_solutions(s.solutions);
    return s;
}

std::vector<double> lengths_of(const std::vector<BranchSolution>& sols) {
    std::vector<double> out;
    out.reserve(sols.size());
    for (const auto& s : sols) out.push_back(s.length);
    std::sort(out.begin(), out.end());
    return out;
}

void check_consistent(double formula, double enumerated, std::string_view what) {
    if (!(std::abs(formula - enumerated) <= kConsistencyTolerance)) {
        throw InconsistentMinimizer(fmt::format(
            "{}: closed form gives {:.17g} but the enumerated minimum is {:.17g}", what, formula,
            enumerated));
    }
}

void fill_from_search(DistanceResult& r, const Search& s) {
    r.all_lengths = lengths_of(s.solutions);
    r.q_used = s.q_used;
    r.q_min = s.q_min;
    r.certified = s.certified;
}

DistanceResult fiber_distance(const Endpoint& e, const SolverConfig& config) {
    DistanceResult r;
    r.endpoint_case = EndpointCase::Fiber;
    const double omega = detail::reduce_angle(std::arg(e.z1()));
    if (omega == 0.0) {
        r.all_lengths = {0.0};
        return r;
    }
    auto sols = fiber_branches(omega, config.max_fiber_n);
    for (auto& s : sols) s.residual = endpoint_residual(s.u, s.rho, s.alpha, e.z1(), e.z2());
    r.distance = std::sqrt(omega * (kTau - omega));
    check_consistent(r.distance, sols.front().length, "fiber endpoint");
    r.minimizer = sols.front();
    r.all_lengths = lengths_of(sols);
    r.q_used = r.q_min = config.max_fiber_n;
    return r;
}

DistanceResult antipodal_distance(const Endpoint& e, SolverConfig config) {
    DistanceResult r;
    r.endpoint_case = EndpointCase::Antipodal;
    config.q_max = std::max(config.q_max, 1);
    auto sols = solve_antipodal(config);
    for (auto& s : sols) s.residual = endpoint_residual(s.u, s.rho, s.alpha, e.z1(), e.z2());
    r.distance = kPi;
    check_consistent(r.distance, sols.front().length, "antipodal endpoint");
    r.minimizer = sols.front();
    r.all_lengths = lengths_of(sols);
    r.q_used = r.q_min = config.q_max;
    return r;
}

DistanceResult horizontal_distance(const Endpoint& e, const SolverConfig& config) {
    DistanceResult r;
    r.endpoint_case = EndpointCase::HorizontalSphere;
    if (e.abs1() < e.case_eps()) {
        auto res = solve_equator(e.theta2(), config);
        r.distance = kPi / 2;
        r.minimizer = res.solutions.front();
        r.all_lengths = lengths_of(res.solutions);
        r.q_used = r.q_min = config.q_max;
        return r;
    }
    // Project onto Im z1 = 0 so the enumeration sees the same endpoint as
    // the closed form.
    const double x = e.z1().real();
    const Complex z2 = e.z2() * (std::sqrt((1.0 - x) * (1.0 + x)) / e.abs2());
    r.distance = std::acos(x);
    const auto s = certified_search(x, z2, config);
    check_consistent(r.distance, s.solutions.front().length, "horizontal-sphere endpoint");
    auto m = s.solutions.front();
    m.residual = endpoint_residual(m.u, m.rho, m.alpha, e.z1(), e.z2());
    r.minimizer = m;
    fill_from_search(r, s);
    return r;
}

DistanceResult general_distance(const Endpoint& e, const SolverConfig& config) {
    DistanceResult r;
    r.endpoint_case = EndpointCase::General;
    const auto s = certified_search(e.z1(), e.z2(), config);
    fill_from_search(r, s);
    r.minimizer = s.solutions.front();
    r.distance = s.solutions.front().length;

    const double bound = (kPi / 2) * (1.0 - e.abs1());
    const double t1 = std::abs(e.theta1());
    if (t1 > 0.0 && t1 <= bound + 1e-12) {
        const auto b = single_root_branch(e);
        r.boundary_case = std::abs(t1 - bound) <= 1e-12;
        check_consistent(b.length, r.distance, "single-root regime");
        r.distance = b.length;
    }
    return r;
}

}  // namespace

BranchSolution single_root_branch(const Endpoint& e) {
    const double a1 = e.abs1();
    const double a2 = e.abs2();
    const double theta1 = e.theta1();
    const double bound = (kPi / 2) * (1.0 - a1);
    if (!(a1 > 0.0 && a2 > 0.0) || theta1 == 0.0 || std::abs(theta1) > bound + 1e-12) {
        throw DomainError(fmt::format("single-root regime needs 0 < |theta1| <= {:.17g}", bound));
    }
    auto g = [&](double u) { return b_function(u, a1, a2) - theta1; };
    double u0 = 0.0;
    if (std::abs(theta1) >= bound) {
        u0 = theta1 > 0.0 ? a1 : -a1;
    } else {
        u0 = detail::bisect(g, {-a1, a1}, 1e-15);
    }
    const double rho = std::atan2(a2, std::sqrt(std::max(a1 * a1 - u0 * u0, 0.0)));
    return detail::make_solution(u0, rho, e.z1(), e.z2());
}

DistanceResult cc_distance(const Endpoint& endpoint, const SolverConfig& config) {
    config.validate();
    switch (endpoint.tag()) {
        case EndpointCase::Fiber: return fiber_distance(endpoint, config);
        case EndpointCase::Antipodal: return antipodal_distance(endpoint, config);
        case EndpointCase::HorizontalSphere: return horizontal_distance(endpoint, config);
        case EndpointCase::General: return general_distance(endpoint, config);
    }
    return {};
}

DistanceResult cc_distance(const SpherePoint& a, const SpherePoint& b, const SolverConfig& config,
                           double case_eps) {
    return cc_distance(reduce_pair(a, b, case_eps).second, config);
}

std::pair<SU2Element, Endpoint> reduce_pair(const SpherePoint& a, const SpherePoint& b,
                                            double case_eps) {
    if (a.dim() != 2 || b.dim() != 2) throw DimensionMismatch("reduce_pair needs points of S^3");
    const SU2Element phi(std::conj(a[0]), -a[1]);
    const auto moved = su2_act(phi, b);
    return {phi, Endpoint(moved, case_eps)};
}

}  // namespace srs
