#include "doctest.h"

#include <algorithm>
#include <random>

#include "srsphere/bvp.hpp"
#include "srsphere/errors.hpp"
#include "support.hpp"

using namespace srs;
using srs::test::C;
using srs::test::kPi;
using srs::test::kTau;

namespace {

double reference_residual(const BranchSolution& s, C z1, C z2) {
    return srs::test::distance2(srs::test::reference_point(s.u, s.rho, s.alpha, 1.0), z1, z2);
}

bool contains(const std::vector<BranchSolution>& sols, double u, double rho, double alpha, double tol) {
    return std::any_of(sols.begin(), sols.end(), [&](const BranchSolution& s) {
        return std::abs(s.u - u) < tol && std::abs(s.rho - rho) < tol &&
               srs::test::angle_diff(s.alpha, alpha) < tol;
    });
}

}  // namespace

TEST_CASE("endpoint tagging") {
    CHECK(Endpoint(C(-1.0, 0.0), C(0.0, 0.0)).tag() == EndpointCase::Antipodal);
    CHECK(Endpoint(std::polar(1.0, 0.5), C(0.0, 0.0)).tag() == EndpointCase::Fiber);
    CHECK(Endpoint(C(0.7, 0.0), C(0.0, std::sqrt(0.51))).tag() == EndpointCase::HorizontalSphere);
    CHECK(Endpoint(C(0.0, 0.0), C(1.0, 0.0)).tag() == EndpointCase::HorizontalSphere);
    CHECK(Endpoint(C(0.6, 0.3), C(0.0, std::sqrt(0.55))).tag() == EndpointCase::General);
    const Endpoint e(C(-0.7, 0.0), C(0.0, std::sqrt(0.51)));
    CHECK(e.theta1() == doctest::Approx(-kPi));
    CHECK(e.theta2() == doctest::Approx(kPi / 2));
    for (auto c : {EndpointCase::Fiber, EndpointCase::Antipodal, EndpointCase::HorizontalSphere,
                   EndpointCase::General}) {
        CHECK(endpoint_case_from_string(to_string(c)) == c);
    }
}

TEST_CASE("solver config validation") {
    SolverConfig c;
    CHECK_NOTHROW(c.validate());
    c.root_tol = 1e-5;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("fiber solutions") {
    SUBCASE("omega = pi, n = 1 is the great circle of length pi") {
        const auto f = solve_fiber(kPi, 1);
        REQUIRE(f.size() == 1);
        CHECK(f[0].vf == doctest::Approx(0.0));
        CHECK(f[0].length == doctest::Approx(kPi));
    }
    SUBCASE("omega = pi/2: length pi sqrt3/2 and vertical speed 1/sqrt3") {
        const auto f = solve_fiber(kPi / 2, 1);
        REQUIRE_FALSE(f.empty());
        CHECK(f[0].length == doctest::Approx(std::sqrt(3.0) * kPi / 2));
        CHECK(f[0].length == doctest::Approx(2.7207).epsilon(1e-4));
        CHECK(f[0].vf == doctest::Approx(1.0 / std::sqrt(3.0)));
    }
    SUBCASE("principal lengths increase with n and match the closed form") {
        const double omega = 1.3;
        const auto f = solve_fiber(omega, 8);
        double prev = 0.0;
        for (int n = 1; n <= 8; ++n) {
            const auto it = std::find_if(f.begin(), f.end(), [&](const FiberSolution& s) {
                return s.n == n && s.k == 0;
            });
            REQUIRE(it != f.end());
            const double expected = std::sqrt(omega * (kTau * n - omega));
            CHECK(it->length == doctest::Approx(expected).epsilon(1e-14));
            CHECK(it->vf == doctest::Approx((kPi * n - omega) / expected));
            CHECK(it->length > prev);
            prev = it->length;
        }
        CHECK(std::is_sorted(f.begin(), f.end(),
                             [](const auto& a, const auto& b) { return a.length < b.length; }));
    }
    SUBCASE("small omega: speed grows and length shrinks") {
        const auto a = solve_fiber(1e-2, 1).front();
        const auto b = solve_fiber(1e-4, 1).front();
        CHECK(b.vf > a.vf);
        CHECK(b.length < a.length);
        CHECK(b.length < 0.03);
    }
    SUBCASE("every fiber branch reaches a e^{i omega}") {
        for (double omega : {0.3, 2.5, 4.0, 6.0}) {
            const C target = std::polar(1.0, omega);
            const auto sols = fiber_branches(omega, 6);
            CHECK_FALSE(sols.empty());
            for (const auto& s : sols) {
                CHECK(reference_residual(s, target, 0.0) < 1e-9);
                CHECK(s.family == Family::Circle);
            }
            const auto f = solve_fiber(omega, 1);
            CHECK(f.front().reflected == (omega > kPi));
        }
    }
    SUBCASE("higher spheres report the horizontal family dimension") {
        CHECK(solve_fiber(1.0, 1, 3).front().horizontal_family_dim == 3);
    }
    CHECK_THROWS_AS(solve_fiber(0.0, 1), DegenerateOmega);
    CHECK_THROWS_AS(solve_fiber(kTau, 1), OmegaOutOfRange);
    CHECK_THROWS_AS(solve_fiber(-0.1, 1), OmegaOutOfRange);
}

TEST_CASE("antipodal enumeration") {
    SolverConfig c;
    c.q_max = 3;
    const auto sols = solve_antipodal(c);
    REQUIRE(sols.size() == 6);
    CHECK(sols[0].u == 0.0);
    CHECK(sols[0].rho == doctest::Approx(kPi));
    CHECK(sols[0].length == doctest::Approx(kPi));
    CHECK(contains(sols, 0.5, kTau, 0.0, 1e-12));
    CHECK(contains(sols, -0.5, kTau, 0.0, 1e-12));
    CHECK(contains(sols, 2.0 / 3.0, 3 * kPi, 0.0, 1e-12));
    for (const auto& s : sols) {
        CHECK(reference_residual(s, -1.0, 0.0) < 1e-9);
        CHECK(s.family == Family::Circle);
    }
    const auto it = std::find_if(sols.begin(), sols.end(), [](const auto& s) { return s.u > 0.6; });
    CHECK(it->length == doctest::Approx(kPi * std::sqrt(5.0)));
}

TEST_CASE("Phi, Psi and B") {
    const double z1 = 0.7;
    const double ac = std::acos(z1);
    for (int n = 1; n <= 5; ++n) {
        CHECK(std::abs(phi_function(kPi / 2 + kPi * n, z1)) < 1e-12);
        CHECK(psi_function(ac + kPi * n, z1) == doctest::Approx(0.0).epsilon(1e-6));
        CHECK(psi_function(kPi * (n + 1) - ac, z1) == doctest::Approx(0.0).epsilon(1e-6));
        // cos(rho) vanishes at x = pi/2 + pi n, so Phi'(x) = -sin(x)/cos(Psi(x))
        // = (-1)^{n+1}/cos(z1 x): finite, nonzero, with sign (-1)^{n+1} cos(z1 x).
        const double x = kPi / 2 + kPi * n;
        const double h = 1e-6;
        const double numeric = (phi_function(x + h, z1) - phi_function(x - h, z1)) / (2 * h);
        const double sign = (n % 2 == 0) ? -1.0 : 1.0;
        CHECK(numeric == doctest::Approx(sign / std::cos(z1 * x)).epsilon(1e-6));
        CHECK(numeric * sign * std::cos(z1 * x) > 0.0);
    }
    CHECK_THROWS_AS(phi_function(0.1, z1), DomainError);
    CHECK_THROWS_AS(psi_function(kPi, z1), DomainError);
    CHECK_THROWS_AS(psi_function(kPi + 0.1, z1), DomainError);

    for (double a1 : {0.3, 0.7, 0.9}) {
        const double a2 = std::sqrt(1 - a1 * a1);
        CHECK(b_function(a1, a1, a2) == doctest::Approx((kPi / 2) * (1 - a1)).epsilon(1e-13));
        CHECK(b_function(-a1, a1, a2) == doctest::Approx(-(kPi / 2) * (1 - a1)).epsilon(1e-13));
        CHECK(b_function(0.0, a1, a2) == 0.0);
        double worst = 0.0;
        for (int k = 0; k <= 10000; ++k) {
            const double u = -a1 + 2 * a1 * k / 10000.0;
            const double b = b_function(u, a1, a2);
            worst = std::max(worst, std::abs(b + b_function(-u, a1, a2)));
            CHECK(std::abs(b) <= kPi / 2);
        }
        CHECK(worst < 1e-14);
    }
    CHECK_THROWS_AS(b_function(0.8, 0.7, std::sqrt(0.51)), DomainError);
}

TEST_CASE("horizontal sphere z1 = 0.7") {
    SolverConfig c;
    c.q_max = 6;
    const double theta2 = 0.9;
    const C z2 = std::polar(std::sqrt(0.51), theta2);
    const auto res = solve_horizontal_sphere(0.7, theta2, c);
    REQUIRE(res.solutions.size() >= 3);
    CHECK(res.solutions[0].u == 0.0);
    CHECK(res.solutions[0].length == doctest::Approx(std::acos(0.7)).epsilon(1e-14));
    CHECK(res.solutions[0].length == doctest::Approx(0.795399).epsilon(1e-6));
    int extra = 0;
    for (const auto& s : res.solutions) {
        CHECK(reference_residual(s, 0.7, z2) < 1e-9);
        if (s.rho > kPi) ++extra;
    }
    CHECK(extra >= 2);

    const Endpoint off(C(0.7, 0.01), C(0.0, std::sqrt(1 - 0.49 - 1e-4)));
    CHECK_THROWS_AS(solve_horizontal_sphere(off, c), NotOnHorizontalSphere);
}

TEST_CASE("equator endpoints use rho = pi/2 + pi k") {
    SolverConfig c;
    c.q_max = 1;
    const auto res = solve_equator(0.4, c);
    REQUIRE(res.solutions.size() == 4);
    CHECK(res.solutions[0].rho == doctest::Approx(kPi / 2));
    for (const auto& s : res.solutions) CHECK(reference_residual(s, 0.0, std::polar(1.0, 0.4)) < 1e-9);
}

TEST_CASE("general round trip recovers the generating parameters") {
    const auto z = srs::test::reference_point(0.3, 2.0, 1.0, 1.0);
    const Endpoint e(z[0], z[1]);
    REQUIRE(e.tag() == EndpointCase::General);
    const auto res = solve_general(e, SolverConfig{});
    CHECK(contains(res.solutions, 0.3, 2.0, 1.0, 1e-9));

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> U(-0.98, 0.98), R(0.05, 5 * kTau), A(0.0, kTau);
    for (int k = 0; k < 60; ++k) {
        const double u = U(rng), rho = R(rng), alpha = A(rng);
        const auto w = srs::test::reference_point(u, rho, alpha, 1.0);
        const auto sols = solve(Endpoint(w[0], w[1]), SolverConfig{}).solutions;
        CHECK(contains(sols, u, rho, alpha, 1e-8));
        for (const auto& s : sols) CHECK(reference_residual(s, w[0], w[1]) < 1e-9);
    }
}

TEST_CASE("general solutions satisfy the per-system arg z1 equations") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        const auto z = srs::test::random_s3(rng);
        const Endpoint e(z[0], z[1]);
        const double a1 = e.abs1(), a2 = e.abs2(), t1 = e.theta1();
        SolverConfig c;
        c.q_max = 3;
        for (const auto& s : solve_general(e, c).solutions) {
            CHECK(s.sigma1 == (std::cos(s.rho) < 0 ? -1 : 1));
            CHECK(s.sigma2 == (std::sin(s.rho) < 0 ? -1 : 1));
            CHECK(s.q == static_cast<int>(std::floor(s.rho / kTau)));
            const double b = b_function(std::clamp(s.u, -a1, a1), a1, a2);
            double rhs = 0.0;
            if (s.sigma1 > 0 && s.sigma2 > 0) {
                rhs = b + kTau * (s.p - s.u * s.q);
                CHECK(std::abs(s.p) <= s.q);
            } else if (s.sigma1 < 0 && s.sigma2 < 0) {
                rhs = b + kPi * ((2 * s.p + 1) - s.u * (2 * s.q + 1));
                CHECK(std::abs(s.p) <= s.q + 1);
            } else if (s.sigma1 < 0) {
                rhs = -b + kPi * ((2 * s.p + 1) - s.u * (2 * s.q + 1));
            } else {
                rhs = -b + kTau * (s.p - s.u * (s.q + 1));
            }
            CHECK(std::abs(rhs - t1) < 1e-8);
        }
    }
}

TEST_CASE("raising q_max never removes solutions") {
    const auto z = srs::test::reference_point(-0.2, 9.0, 4.0, 1.0);
    const Endpoint e(z[0], z[1]);
    std::vector<BranchSolution> prev;
    for (int k = 0; k <= 4; ++k) {
        SolverConfig c;
        c.q_max = k;
        std::vector<BranchSolution> sols;
        try {
            sols = solve_general(e, c).solutions;
        } catch (const NoSolutionWithinQmax&) {
        }
        for (const auto& s : prev) CHECK(contains(sols, s.u, s.rho, s.alpha, 1e-9));
        prev = sols;
    }
    CHECK_FALSE(prev.empty());
}

TEST_CASE("general solver rejects special endpoints") {
    CHECK_THROWS_AS(solve_general(Endpoint(C(-1.0, 0.0), 0.0), SolverConfig{}), EndpointOnSpecialLocus);
    CHECK_THROWS_AS(solve_general(Endpoint(C(0.7, 0.0), C(0.0, std::sqrt(0.51))), SolverConfig{}),
                    EndpointOnSpecialLocus);
}

TEST_CASE("normalize merges near-duplicates and sorts by length") {
    BranchSolution a;
    a.u = 0.1;
    a.rho = 2.0;
    a.length = 3.0;
    BranchSolution b = a;
    b.u += 1e-12;
    BranchSolution c = a;
    c.u = -0.4;
    c.length = 1.0;
    std::vector<BranchSolution> v{a, b, c};
    normalize_solutions(v);
    REQUIRE(v.size() == 2);
    CHECK(v[0].length == 1.0);
    CHECK(family_from_string(to_string(Family::Circle)) == Family::Circle);
}
