#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <fmt/core.h>

#include "srsphere/distance.hpp"
#include "srsphere/errors.hpp"
#include "srsphere/geodesic.hpp"

namespace srs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * kPi;

// First coordinate at s = 1; alpha only rotates the second coordinate.
Complex first_coord(double u, double rho) {
    return std::polar(1.0, -u * rho) * Complex(std::cos(rho), u * std::sin(rho));
}

double error2(const std::array<double, 3>& x, Complex z1, Complex z2) {
    const auto z = s3_point(x[0], x[1], x[2], 1.0);
    return std::norm(z[0] - z1) + std::norm(z[1] - z2);
}

}  // namespace

void OracleConfig::validate() const {
    if (grid_u < 3 || grid_rho < 3 || grid_alpha < 1 || refine_iters < 1 || !(rho_max > 0.0) ||
        !(accept_residual > 0.0)) {
        throw InvalidArgument("oracle configuration values must be positive");
    }
}

OracleResult shooting_oracle(const Endpoint& endpoint, const OracleConfig& config) {
    config.validate();
    const Complex z1 = endpoint.z1();
    const Complex z2 = endpoint.z2();
    const double a2 = endpoint.abs2();

    const int nu = config.grid_u;
    const int nr = config.grid_rho;
    const double du = 2.0 / (nu + 1);
    const double dr = config.rho_max / nr;
    auto u_at = [&](int i) { return -1.0 + du * (i + 1); };
    auto rho_at = [&](int j) { return dr * (j + 1); };

    // Coarse pass in (u, rho) with alpha minimized out: the best alpha
    // matches the phase of z2 exactly, leaving the modulus mismatch.
    std::vector<double> e(static_cast<std::size_t>(nu) * nr);
    auto at = [&](int i, int j) -> double& { return e[static_cast<std::size_t>(i) * nr + j]; };
    for (int i = 0; i < nu; ++i) {
        const double u = u_at(i);
        const double r = std::sqrt((1.0 - u) * (1.0 + u));
        for (int j = 0; j < nr; ++j) {
            const double rho = rho_at(j);
            const double m = r * std::abs(std::sin(rho)) - a2;
            at(i, j) = std::norm(first_coord(u, rho) - z1) + m * m;
        }
    }

    OracleResult best;
    best.length = std::numeric_limits<double>::infinity();
    const double accept2 = config.accept_residual * config.accept_residual;

    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nr; ++j) {
            const double v = at(i, j);
            const double rho = rho_at(j);
            const double reach = (rho + 2.0) * du + 2.0 * dr;
            if (v > reach * reach) continue;
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if ((di == 0 && dj == 0) || i + di < 0 || i + di >= nu || j + dj < 0 || j + dj >= nr) {
                        continue;
                    }
                    if (at(i + di, j + dj) < v) {
                        is_min = false;
                        break;
                    }
                }
            }
            if (!is_min) continue;
            ++best.candidates;

            std::array<double, 3> x{u_at(i), rho, 0.0};
            double fx = std::numeric_limits<double>::infinity();
            for (int k = 0; k < config.grid_alpha; ++k) {
                const std::array<double, 3> y{x[0], x[1], kTau * k / config.grid_alpha};
                const double fy = error2(y, z1, z2);
                if (fy < fx) {
                    fx = fy;
                    x = y;
                }
            }

            // Coordinate pattern search with step halving.
            std::array<double, 3> step{du, dr, kTau / config.grid_alpha};
            for (int level = 0; level < config.refine_iters; ++level) {
                for (int sweep = 0; sweep < 200; ++sweep) {
                    bool moved = false;
                    for (int c = 0; c < 3; ++c) {
                        for (const double sgn : {1.0, -1.0}) {
                            auto y = x;
                            y[c] += sgn * step[c];
                            if (!(std::abs(y[0]) < 1.0) || !(y[1] > 0.0)) continue;
                            const double fy = error2(y, z1, z2);
                            if (fy < fx) {
                                x = y;
                                fx = fy;
                                moved = true;
                            }
                        }
                    }
                    if (!moved) break;
                }
                for (auto& s : step) s *= 0.5;
            }
            if (!(fx < accept2)) continue;
            ++best.accepted;
            const double length = x[1] * std::sqrt((1.0 - x[0]) * (1.0 + x[0]));
            if (length < best.length) {
                best.length = length;
                best.u = x[0];
                best.rho = x[1];
                best.alpha = std::fmod(std::fmod(x[2], kTau) + kTau, kTau);
                best.residual = std::sqrt(fx);
            }
        }
    }
    if (best.accepted == 0) {
        throw OracleNoCandidate(fmt::format("no candidate among {} refined below {:.1e}",
                                            best.candidates, config.accept_residual));
    }
    return best;
}

}  // namespace srs
