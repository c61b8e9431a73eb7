#include "doctest.h"

#include <random>

#include "srsphere/distance.hpp"
#include "srsphere/errors.hpp"
#include "support.hpp"

using namespace srs;
using srs::test::C;
using srs::test::kPi;
using srs::test::kTau;

TEST_CASE("closed-form distances per endpoint class") {
    CHECK(cc_distance(Endpoint(std::polar(1.0, kPi / 2), 0.0)).distance ==
          doctest::Approx(std::sqrt(3.0) * kPi / 2).epsilon(1e-14));
    CHECK(cc_distance(Endpoint(-1.0, 0.0)).distance == doctest::Approx(kPi).epsilon(1e-15));

    const auto hs = cc_distance(Endpoint(0.7, std::sqrt(0.51)));
    CHECK(hs.endpoint_case == EndpointCase::HorizontalSphere);
    CHECK(hs.distance == doctest::Approx(0.795399).epsilon(1e-6));

    const auto neg = cc_distance(Endpoint(-0.7, C(0.0, std::sqrt(0.51))));
    CHECK(neg.distance == doctest::Approx(std::acos(-0.7)).epsilon(1e-14));

    const auto eq = cc_distance(Endpoint(0.0, std::polar(1.0, 2.0)));
    CHECK(eq.distance == doctest::Approx(kPi / 2));

    // Reflected fiber phase: same distance as 2 pi - omega.
    CHECK(cc_distance(Endpoint(std::polar(1.0, 5.0), 0.0)).distance ==
          doctest::Approx(std::sqrt(5.0 * (kTau - 5.0))));
}

TEST_CASE("fiber distance shrinks to zero with omega") {
    double prev = 1e9;
    for (int k = 1; k <= 6; ++k) {
        const double omega = std::pow(10.0, -k);
        const double d = cc_distance(Endpoint(std::polar(1.0, omega), 0.0)).distance;
        CHECK(d == doctest::Approx(std::sqrt(omega * (kTau - omega))).epsilon(1e-12));
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("reduce_pair moves the first point to (1, 0)") {
    const SpherePoint base(1.0, 0.0);
    const SpherePoint b(C(0.6, 0.0), C(0.0, 0.8));
    const auto [phi, e] = reduce_pair(base, b);
    CHECK(phi.phi1() == C(1.0, 0.0));
    CHECK(std::abs(phi.phi2()) == 0.0);
    CHECK(std::abs(e.z1() - b[0]) + std::abs(e.z2() - b[1]) == 0.0);

    const auto [phi2, e2] = reduce_pair(SpherePoint(0.0, 1.0), base);
    CHECK(std::norm(e2.z1()) + std::norm(e2.z2()) == doctest::Approx(1.0));
    const auto moved = su2_act(phi2, SpherePoint(0.0, 1.0));
    CHECK(std::abs(moved[0] - 1.0) + std::abs(moved[1]) < 1e-15);

    const SpherePoint big(ComplexVector{1.0, 0.0, 0.0});
    CHECK_THROWS_AS(reduce_pair(big, big), DimensionMismatch);
}

TEST_CASE("distance is SU(2) invariant") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 15; ++k) {
        const auto a = srs::test::random_point(rng);
        const auto b = srs::test::random_point(rng);
        const auto g = srs::test::random_su2(rng);
        const double d1 = cc_distance(a, b).distance;
        const double d2 = cc_distance(su2_act(g, a), su2_act(g, b)).distance;
        CHECK(std::abs(d1 - d2) < 1e-8);
    }
}

TEST_CASE("distance never exceeds any solution length") {
    std::mt19937_64 rng(123);
    for (int k = 0; k < 15; ++k) {
        const auto z = srs::test::random_s3(rng);
        const Endpoint e(z[0], z[1]);
        const auto d = cc_distance(e);
        for (const auto& s : solve(e, SolverConfig{}).solutions) CHECK(d.distance <= s.length + 1e-12);
        CHECK(d.distance == doctest::Approx(d.all_lengths.front()));
        REQUIRE(d.minimizer);
        CHECK(d.minimizer->residual < 1e-9);
    }
}

TEST_CASE("single-root regime has exactly one q = 0 (+,+) root") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int tested = 0;
    for (int k = 0; k < 40; ++k) {
        const double a1 = 0.05 + 0.9 * unit(rng);
        const double bound = (kPi / 2) * (1 - a1);
        const double t1 = (unit(rng) < 0.5 ? -1.0 : 1.0) * bound * (0.01 + 0.99 * unit(rng));
        const double a2 = std::sqrt(1 - a1 * a1);
        const Endpoint e(std::polar(a1, t1), std::polar(a2, kTau * unit(rng)));
        if (e.tag() != EndpointCase::General) continue;
        ++tested;
        const auto branch = single_root_branch(e);
        CHECK(branch.residual < 1e-9);
        SolverConfig c;
        c.q_max = 0;
        int count = 0;
        double best = 1e9;
        for (const auto& s : enumerate_branches(e.z1(), e.z2(), 0, 3, c)) {
            if (s.q == 0 && s.sigma1 > 0 && s.sigma2 > 0) ++count;
            best = std::min(best, s.length);
        }
        CHECK(count == 1);
        CHECK(std::abs(best - branch.length) < 1e-9);
        CHECK(std::abs(cc_distance(e).distance - branch.length) < 1e-9);
    }
    CHECK(tested > 30);
}

TEST_CASE("q = 1 is solvable for |z1| >= 3/4 beyond the single-root regime") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SolverConfig c;
    for (int k = 0; k < 30; ++k) {
        const double a1 = 0.75 + 0.24 * unit(rng);
        const double bound = (kPi / 2) * (1 - a1);
        const double t1 = (unit(rng) < 0.5 ? -1.0 : 1.0) * (bound + (kPi - bound) * (0.02 + 0.97 * unit(rng)));
        const Endpoint e(std::polar(a1, t1), std::polar(std::sqrt(1 - a1 * a1), kTau * unit(rng)));
        CHECK_FALSE(enumerate_branches(e.z1(), e.z2(), 1, 1, c).empty());
    }
}

TEST_CASE("shooting oracle") {
    const OracleConfig oc;
    const auto anti = shooting_oracle(Endpoint(-1.0, 0.0), oc);
    CHECK(std::abs(anti.length - kPi) < 1e-3);

    const auto fib = shooting_oracle(Endpoint(std::polar(1.0, 1.0), 0.0), oc);
    CHECK(std::abs(fib.length - std::sqrt(kTau - 1.0)) < 1e-3);
    CHECK(fib.length == doctest::Approx(2.2981).epsilon(1e-3));

    const auto z = srs::test::reference_point(0.3, 2.0, 1.0, 1.0);
    const auto fwd = shooting_oracle(Endpoint(z[0], z[1]), oc);
    CHECK(fwd.length <= 2.0 * std::sqrt(0.91) + 1e-3);
    CHECK(fwd.residual < 1e-6);

    const auto hs = shooting_oracle(Endpoint(0.7, std::sqrt(0.51)), oc);
    CHECK(std::abs(hs.length - std::acos(0.7)) < 1e-3);

    OracleConfig bad;
    bad.grid_u = 0;
    CHECK_THROWS_AS(shooting_oracle(Endpoint(-1.0, 0.0), bad), InvalidArgument);
}
