#include "srsphere/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include <fmt/core.h>

#include "scan.hpp"
#include "solution_util.hpp"
#include "srsphere/errors.hpp"

namespace srs {

using detail::alpha_from;
using detail::arg_half_open;
using detail::make_solution;
using detail::reduce_angle;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * kPi;
// |g| below which a same-sign local minimum is inspected for a root pair.
constexpr double kTouchThreshold = 0.5;

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

// Winding integer p of the arg z1 equation written per sigma system:
//   (+,+)  theta1 =  B + 2 pi (p - u q)
//   (-,-)  theta1 =  B + pi ((2p + 1) - u (2q + 1))
//   (-,+)  theta1 = -B + pi ((2p + 1) - u (2q + 1))
//   (+,-)  theta1 = -B + 2 pi (p - u (q + 1))
int winding_p(int sigma1, int sigma2, int q, double u, double theta1, double a1, double a2) {
    const double b = (a1 > 0.0 && a2 > 0.0) ? b_function(std::clamp(u, -a1, a1), a1, a2) : 0.0;
    double p = 0.0;
    if (sigma1 > 0 && sigma2 > 0) {
        p = (theta1 - b) / kTau + u * q;
    } else if (sigma1 < 0 && sigma2 < 0) {
        p = ((theta1 - b) / kPi + u * (2 * q + 1) - 1.0) / 2.0;
    } else if (sigma1 < 0 && sigma2 > 0) {
        p = ((theta1 + b) / kPi + u * (2 * q + 1) - 1.0) / 2.0;
    } else {
        p = (theta1 + b) / kTau + u * (q + 1);
    }
    return static_cast<int>(std::lround(p));
}

// One half turn of rho, (2 pi q, 2 pi q + pi) for sigma2 = +1 and
// (2 pi q + pi, 2 pi q + 2 pi) for sigma2 = -1, parametrized by
// u = |z1| sin t, t in [-pi/2, 3pi/2]. cos t >= 0 is the sigma1 = +1 half.
// The arg z1 equation becomes H(t) + 2 pi p = 0 with H smooth in t.
struct HalfTurn {
    double a1;
    double a2;
    double theta1;
    int q;
    int sigma2;

    struct Value {
        double h;
        double u;
        double rho;
    };

    Value operator()(double t) const {
        const double ct = std::cos(t);
        const double st = std::sin(t);
        const double u = a1 * st;
        const double base = std::atan2(a2, a1 * ct);  // (0, pi)
        // Continuous lift of arg(cos t + i |z2| sin t); stays within pi/2 of t.
        const double lift = t + std::remainder(std::atan2(a2 * st, ct) - t, kTau);
        double rho = 0.0;
        double phase = 0.0;
        if (sigma2 > 0) {
            rho = base + kTau * q;
            phase = lift;
        } else {
            rho = kTau - base + kTau * q;
            phase = -lift;
        }
        return {phase - u * rho - theta1, u, rho};
    }
};

}  // namespace

namespace detail {

double reduce_angle(double a) {
    double w = std::fmod(a, kTau);
    if (w < 0.0) w += kTau;
    if (w >= kTau) w = 0.0;
    return w;
}

double arg_half_open(Complex z) {
    const double a = std::arg(z);
    return a >= kPi ? a - kTau : a;
}

double alpha_from(double u, double rho, double theta2) {
    const double flip = std::sin(rho) < 0.0 ? kPi : 0.0;
    return reduce_angle(-u * rho - theta2 + flip);
}

BranchSolution make_solution(double u, double rho, Complex z1, Complex z2, Family family) {
    BranchSolution s;
    s.u = u;
    s.rho = rho;
    s.alpha = alpha_from(u, rho, arg_half_open(z2));
    s.sigma1 = sign_of(std::cos(rho));
    s.sigma2 = sign_of(std::sin(rho));
    s.q = static_cast<int>(std::floor(rho / kTau));
    s.p = winding_p(s.sigma1, s.sigma2, s.q, u, arg_half_open(z1), std::abs(z1), std::abs(z2));
    s.length = rho * std::sqrt((1.0 - u) * (1.0 + u));
    s.residual = endpoint_residual(u, rho, s.alpha, z1, z2);
    s.family = family;
    return s;
}

}  // namespace detail

std::string_view to_string(EndpointCase c) {
    switch (c) {
        case EndpointCase::Fiber: return "fiber";
        case EndpointCase::Antipodal: return "antipodal";
        case EndpointCase::HorizontalSphere: return "horizontal_sphere";
        case EndpointCase::General: return "general";
    }
    return "general";
}

EndpointCase endpoint_case_from_string(std::string_view s) {
    if (s == "fiber") return EndpointCase::Fiber;
    if (s == "antipodal") return EndpointCase::Antipodal;
    if (s == "horizontal_sphere") return EndpointCase::HorizontalSphere;
    if (s == "general") return EndpointCase::General;
    throw InvalidArgument(fmt::format("unknown endpoint case '{}'", s));
}

std::string_view to_string(Family f) { return f == Family::Circle ? "circle" : "isolated"; }

Family family_from_string(std::string_view s) {
    if (s == "circle") return Family::Circle;
    if (s == "isolated") return Family::Isolated;
    throw InvalidArgument(fmt::format("unknown family '{}'", s));
}

Endpoint::Endpoint(Complex z1, Complex z2, double case_eps) : case_eps_(case_eps) {
    if (!(case_eps > 0.0)) throw InvalidArgument("case_eps must be positive");
    const SpherePoint p(z1, z2);
    z1_ = p[0];
    z2_ = p[1];
    if (std::abs(z1_ + 1.0) < case_eps) {
        tag_ = EndpointCase::Antipodal;
    } else if (std::abs(z2_) < case_eps) {
        tag_ = EndpointCase::Fiber;
    } else if (std::abs(z1_.imag()) < case_eps) {
        tag_ = EndpointCase::HorizontalSphere;
    } else {
        tag_ = EndpointCase::General;
    }
}

Endpoint::Endpoint(const SpherePoint& p, double case_eps)
    : Endpoint(p.dim() == 2 ? p[0] : throw DimensionMismatch("endpoint must lie on S^3"), p[1],
               case_eps) {}

double Endpoint::theta1() const noexcept { return arg_half_open(z1_); }
double Endpoint::theta2() const noexcept { return arg_half_open(z2_); }

void SolverConfig::validate() const {
    if (q_max < 0) throw InvalidArgument("q_max must be nonnegative");
    if (!(root_tol > 0.0 && root_tol < 1e-6)) throw InvalidArgument("root_tol must be in (0, 1e-6)");
    if (scan_points < 8) throw InvalidArgument("scan_points must be at least 8");
    if (max_fiber_n < 1) throw InvalidArgument("max_fiber_n must be positive");
}

double endpoint_residual(double u, double rho, double alpha, Complex z1, Complex z2) {
    const auto z = s3_point(u, rho, alpha, 1.0);
    return std::sqrt(std::norm(z[0] - z1) + std::norm(z[1] - z2));
}

void normalize_solutions(std::vector<BranchSolution>& solutions) {
    auto key = [](const BranchSolution& s) {
        return std::make_tuple(s.length, s.q, s.p, sign_of(s.u) * (s.u != 0.0));
    };
    std::stable_sort(solutions.begin(), solutions.end(),
                     [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::vector<BranchSolution> kept;
    kept.reserve(solutions.size());
    for (const auto& s : solutions) {
        const bool dup = std::any_of(kept.begin(), kept.end(), [&](const BranchSolution& k) {
            return std::abs(k.u - s.u) < kDedupTolerance && std::abs(k.rho - s.rho) < kDedupTolerance;
        });
        if (!dup) kept.push_back(s);
    }
    solutions = std::move(kept);
}

// ---------------------------------------------------------------- fiber

std::vector<FiberSolution> solve_fiber(double omega, int n_max, int complex_dim) {
    if (!std::isfinite(omega) || omega < 0.0 || omega >= kTau) {
        throw OmegaOutOfRange(fmt::format("omega = {} outside [0, 2pi)", omega));
    }
    if (omega == 0.0) throw DegenerateOmega("omega = 0: endpoint equals the start point");
    if (n_max < 1) throw InvalidArgument("n_max must be positive");
    if (complex_dim < 2) throw DimensionMismatch("sphere S^{2n-1} needs n >= 2");

    const bool reflected = omega > kPi;
    const double reduced = reflected ? kTau - omega : omega;

    std::vector<FiberSolution> out;
    for (int n = 1; n <= n_max; ++n) {
        // pi n (1 - u) = omega + 2 pi k with |u| < 1.
        const int k_lo = static_cast<int>(std::ceil(-omega / kTau - 1e-12));
        const int k_hi = static_cast<int>(std::floor(n - omega / kTau + 1e-12));
        for (int k = k_lo; k <= k_hi; ++k) {
            const double u = 1.0 - (omega + kTau * k) / (kPi * n);
            if (!(std::abs(u) < 1.0)) continue;
            FiberSolution f;
            f.n = n;
            f.k = k;
            f.u = u;
            const double r = std::sqrt((1.0 - u) * (1.0 + u));
            f.vf = u / r;
            f.length = kPi * n * r;
            f.reflected = reflected;
            f.horizontal_family_dim = 2 * complex_dim - 3;
            out.push_back(f);
        }
    }
    // Principal family uses the closed form, which is exact at n = 1.
    for (auto& f : out) {
        const double principal_u = 1.0 - reduced / (kPi * f.n);
        if (std::abs(std::abs(f.u) - principal_u) < 1e-12 && (f.u < 0.0) == reflected) {
            f.length = std::sqrt(reduced * (kTau * f.n - reduced));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.length, a.n, a.k) < std::tie(b.length, b.n, b.k);
    });
    return out;
}

std::vector<FiberSolution> solve_fiber(const FiberPhase& omega, int n_max, int complex_dim) {
    return solve_fiber(omega.omega(), n_max, complex_dim);
}

std::vector<BranchSolution> fiber_branches(double omega, int n_max) {
    const Complex target = std::polar(1.0, omega);
    std::vector<BranchSolution> out;
    for (const auto& f : solve_fiber(omega, n_max)) {
        BranchSolution s;
        s.u = f.u;
        s.rho = kPi * f.n;
        s.alpha = 0.0;
        s.sigma1 = (f.n % 2 == 0) ? 1 : -1;
        s.sigma2 = 1;
        s.p = f.k;
        s.q = f.n;
        s.length = f.length;
        s.residual = endpoint_residual(s.u, s.rho, 0.0, target, 0.0);
        s.family = Family::Circle;
        out.push_back(s);
    }
    normalize_solutions(out);
    return out;
}

// ------------------------------------------------------------ antipodal

std::vector<BranchSolution> solve_antipodal(const SolverConfig& config) {
    config.validate();
    std::vector<BranchSolution> out;
    for (int m = 1; m <= config.q_max; ++m) {
        const bool even = m % 2 == 0;
        const int p_lo = even ? -m / 2 : -(m - 1) / 2;
        const int p_hi = even ? m / 2 - 1 : (m - 1) / 2;
        for (int p = p_lo; p <= p_hi; ++p) {
            const int numerator = even ? 2 * p + 1 : 2 * p;
            BranchSolution s;
            s.u = static_cast<double>(numerator) / m;
            s.rho = kPi * m;
            s.alpha = 0.0;
            s.sigma1 = even ? 1 : -1;
            s.sigma2 = 1;
            s.p = p;
            s.q = m;
            s.length = kPi * std::sqrt(static_cast<double>(m * m - numerator * numerator));
            s.residual = endpoint_residual(s.u, s.rho, 0.0, -1.0, 0.0);
            s.family = Family::Circle;
            out.push_back(s);
        }
    }
    normalize_solutions(out);
    return out;
}

// ----------------------------------------------------- horizontal sphere

SolveResult solve_horizontal_sphere(double z1, double theta2, const SolverConfig& config) {
    config.validate();
    if (!(std::abs(z1) < 1.0) || z1 == 0.0) {
        throw DomainError(fmt::format("horizontal-sphere solver needs z1 in (-1, 1) \\ {{0}}, got {}", z1));
    }
    const double a2 = std::sqrt((1.0 - z1) * (1.0 + z1));
    const Complex zz1(z1, 0.0);
    const Complex zz2 = std::polar(a2, theta2);

    SolveResult result;
    result.solutions.push_back(make_solution(0.0, std::acos(z1), zz1, zz2));

    // Roots of Phi(rho) = z1, scanned in the pole-free form
    // cos(rho) - z1 cos(rho u(rho)) with u(rho)^2 = (z1^2 - cos^2 rho)/sin^2 rho.
    auto u_of = [z1](double rho) {
        const double c = std::cos(rho);
        return std::sqrt(std::max(z1 * z1 - c * c, 0.0)) / std::abs(std::sin(rho));
    };
    auto f = [&](double rho) { return std::cos(rho) - z1 * std::cos(rho * u_of(rho)); };

    const double ac = std::acos(std::abs(z1));
    const int n_points = config.scan_points;
    int roots_found = 0;
    for (int n = 1; n <= config.q_max; ++n) {
        const double lo = ac + kPi * n;
        const double hi = kPi * (n + 1) - ac;
        std::vector<double> xs;
        std::vector<double> gs;
        xs.reserve(static_cast<std::size_t>(n_points));
        for (int i = 1; i < n_points; ++i) {
            const double x = lo + (hi - lo) * i / n_points;
            xs.push_back(x);
            gs.push_back(f(x));
        }
        std::vector<double> rhos;
        for (const auto& b : detail::sign_changes(xs, gs)) rhos.push_back(detail::bisect(f, b, config.root_tol));
        for (const auto i : detail::touch_candidates(gs, kTouchThreshold)) {
            for (const double r : detail::touch_roots(f, xs[i - 1], xs[i + 1], config.root_tol, 1e-12)) {
                rhos.push_back(r);
            }
        }
        for (const double rho : rhos) {
            const double u = u_of(rho);
            for (const double us : {u, -u}) {
                if (!(std::abs(us) < 1.0)) continue;
                auto s = make_solution(us, rho, zz1, zz2);
                if (s.residual < kResidualTolerance) {
                    result.solutions.push_back(s);
                    ++roots_found;
                } else {
                    result.notes.push_back(fmt::format(
                        "D_{}: rho = {:.17g}, u = {:.17g} solves Phi = z1 but not the endpoint "
                        "(residual {:.3e}); discarded",
                        n, rho, us, s.residual));
                }
            }
        }
    }
    if (roots_found == 0) {
        result.notes.push_back(fmt::format("no roots of Phi(rho) = z1 in D_1..D_{}", config.q_max));
    }
    normalize_solutions(result.solutions);
    return result;
}

SolveResult solve_horizontal_sphere(const Endpoint& endpoint, const SolverConfig& config) {
    if (!(std::abs(endpoint.z1().imag()) < endpoint.case_eps())) {
        throw NotOnHorizontalSphere(
            fmt::format("Im z1 = {:.3e} is not below {:.3e}", endpoint.z1().imag(), endpoint.case_eps()));
    }
    auto result = solve_horizontal_sphere(endpoint.z1().real(), endpoint.theta2(), config);
    for (auto& s : result.solutions) {
        s.residual = endpoint_residual(s.u, s.rho, s.alpha, endpoint.z1(), endpoint.z2());
    }
    return result;
}

SolveResult solve_equator(double theta2, const SolverConfig& config) {
    config.validate();
    SolveResult result;
    const Complex zz2 = std::polar(1.0, theta2);
    const double rho_limit = kTau * (config.q_max + 1);
    for (int k = 0; kPi / 2 + kPi * k < rho_limit; ++k) {
        const double rho = kPi / 2 + kPi * k;
        BranchSolution s;
        s.u = 0.0;
        s.rho = rho;
        s.alpha = alpha_from(0.0, rho, theta2);
        s.sigma1 = 1;
        s.sigma2 = (k % 2 == 0) ? 1 : -1;
        s.q = static_cast<int>(std::floor(rho / kTau));
        s.p = 0;
        s.length = rho;
        s.residual = endpoint_residual(0.0, rho, s.alpha, 0.0, zz2);
        result.solutions.push_back(s);
    }
    normalize_solutions(result.solutions);
    return result;
}

// --------------------------------------------------------------- general

std::vector<BranchSolution> enumerate_branches(Complex z1, Complex z2, int q_min, int q_max,
                                               const SolverConfig& config,
                                               std::vector<std::string>* notes) {
    config.validate();
    const double a1 = std::abs(z1);
    const double a2 = std::abs(z2);
    if (!(a1 > 0.0) || !(a2 > 0.0)) {
        throw DomainError("branch enumeration needs z1 != 0 and z2 != 0");
    }
    const double theta1 = arg_half_open(z1);
    const int n = config.scan_points;
    const double t0 = -kPi / 2;

    std::vector<BranchSolution> out;
    std::vector<double> ts(static_cast<std::size_t>(n) + 1);
    std::vector<double> hs(ts.size());
    std::vector<double> gs(ts.size());
    for (int i = 0; i <= n; ++i) ts[static_cast<std::size_t>(i)] = t0 + kTau * i / n;

    for (int q = std::max(q_min, 0); q <= q_max; ++q) {
        for (const int sigma2 : {1, -1}) {
            const HalfTurn half{a1, a2, theta1, q, sigma2};
            for (std::size_t i = 0; i < ts.size(); ++i) hs[i] = half(ts[i]).h;
            const auto [hmin, hmax] = std::minmax_element(hs.begin(), hs.end());
            const int p_lo = static_cast<int>(std::ceil(-*hmax / kTau)) - 1;
            const int p_hi = static_cast<int>(std::floor(-*hmin / kTau)) + 1;

            for (int p = p_lo; p <= p_hi; ++p) {
                const double shift = kTau * p;
                for (std::size_t i = 0; i < ts.size(); ++i) gs[i] = hs[i] + shift;
                auto g = [&](double t) { return half(t).h + shift; };

                std::vector<double> roots;
                for (const auto& b : detail::sign_changes(ts, gs)) {
                    roots.push_back(detail::bisect(g, b, config.root_tol));
                }
                for (const auto i : detail::touch_candidates(gs, kTouchThreshold)) {
                    for (const double t :
                         detail::touch_roots(g, ts[i - 1], ts[i + 1], config.root_tol, 1e-10)) {
                        roots.push_back(t);
                    }
                }
                for (const double t : roots) {
                    const auto v = half(t);
                    if (!(std::abs(v.u) < 1.0)) continue;
                    auto s = make_solution(v.u, v.rho, z1, z2);
                    if (s.residual < kResidualTolerance) {
                        out.push_back(s);
                    } else if (notes != nullptr) {
                        notes->push_back(fmt::format(
                            "q = {}, sigma2 = {}: root t = {:.17g} rejected (residual {:.3e})", q,
                            sigma2, t, s.residual));
                    }
                }
            }
        }
    }
    normalize_solutions(out);
    return out;
}

SolveResult solve_general(const Endpoint& endpoint, const SolverConfig& config) {
    if (endpoint.tag() != EndpointCase::General) {
        throw EndpointOnSpecialLocus(fmt::format("endpoint is tagged {}; use the dedicated solver",
                                                 to_string(endpoint.tag())));
    }
    SolveResult result;
    result.solutions =
        enumerate_branches(endpoint.z1(), endpoint.z2(), 0, config.q_max, config, &result.notes);
    if (result.solutions.empty()) {
        throw NoSolutionWithinQmax(
            fmt::format("no branch admits a root for q <= {}; raise q_max", config.q_max));
    }
    return result;
}

SolveResult solve(const Endpoint& endpoint, const SolverConfig& config) {
    config.validate();
    switch (endpoint.tag()) {
        case EndpointCase::Fiber: {
            const double omega = reduce_angle(std::arg(endpoint.z1()));
            SolveResult result;
            result.solutions = fiber_branches(omega, config.max_fiber_n);
            for (auto& s : result.solutions) {
                s.residual = endpoint_residual(s.u, s.rho, s.alpha, endpoint.z1(), endpoint.z2());
            }
            if (omega > kPi) {
                result.notes.push_back(
                    fmt::format("omega = {:.17g} > pi: solved as 2pi - omega and reflected", omega));
            }
            return result;
        }
        case EndpointCase::Antipodal: {
            SolveResult result;
            result.solutions = solve_antipodal(config);
            for (auto& s : result.solutions) {
                s.residual = endpoint_residual(s.u, s.rho, s.alpha, endpoint.z1(), endpoint.z2());
            }
            return result;
        }
        case EndpointCase::HorizontalSphere: {
            if (endpoint.abs1() < endpoint.case_eps()) {
                auto result = solve_equator(endpoint.theta2(), config);
                for (auto& s : result.solutions) {
                    s.residual = endpoint_residual(s.u, s.rho, s.alpha, endpoint.z1(), endpoint.z2());
                }
                return result;
            }
            return solve_horizontal_sphere(endpoint, config);
        }
        case EndpointCase::General:
            return solve_general(endpoint, config);
    }
    return {};
}

}  // namespace srs
