#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "srsphere/bvp.hpp"
#include "srsphere/errors.hpp"

namespace srs {

namespace {

double psi_radicand(double rho, double z1) {
    const double c = std::cos(rho);
    const double sn = std::sin(rho);
    const double radicand = z1 * z1 - c * c;
    // Rounding at the ends of D_n can leave a radicand of order -1e-16.
    if (!std::isfinite(rho) || radicand < -1e-12 || sn == 0.0) {
        throw DomainError(fmt::format("rho = {} outside the domain of Phi/Psi for z1 = {}", rho, z1));
    }
    return std::max(radicand, 0.0);
}

}  // namespace

double psi_function(double rho, double z1) {
    const double radicand = psi_radicand(rho, z1);
    return rho * std::sqrt(radicand) / std::abs(std::sin(rho));
}

double phi_function(double rho, double z1) {
    return std::cos(rho) / std::cos(psi_function(rho, z1));
}

double b_function(double u, double z1_abs, double z2_abs) {
    if (!(z1_abs >= 0.0 && z1_abs <= 1.0) || !(z2_abs > 0.0 && z2_abs <= 1.0)) {
        throw DomainError(fmt::format("B(u) needs |z1| in [0, 1] and |z2| in (0, 1], got {}, {}",
                                      z1_abs, z2_abs));
    }
    if (!(std::abs(u) <= z1_abs * (1.0 + 1e-12))) {
        throw DomainError(fmt::format("B(u) needs |u| <= |z1| = {}, got u = {}", z1_abs, u));
    }
    const double s = std::sqrt(std::max(z1_abs * z1_abs - u * u, 0.0));
    if (u == 0.0) return 0.0;
    // arccot(x / y) with y > 0 is atan2(y, x); the first term keeps the sign
    // of u so that B is odd and continuous through u = 0.
    return std::atan2(u * z2_abs, s) - u * std::atan2(z2_abs, s);
}

}  // namespace srs
