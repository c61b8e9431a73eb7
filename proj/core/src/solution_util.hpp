#pragma once

// Helpers shared by the BVP and distance translation units.

#include "srsphere/bvp.hpp"

namespace srs::detail {

/// Angle reduced to [0, 2pi).
double reduce_angle(double a);
/// arg z in [-pi, pi).
double arg_half_open(Complex z);
/// Alpha from arg z2 = -(u rho + alpha), shifted by pi when sin rho < 0.
double alpha_from(double u, double rho, double theta2);
/// Fill every BranchSolution field from (u, rho) and the target endpoint.
BranchSolution make_solution(double u, double rho, Complex z1, Complex z2,
                             Family family = Family::Isolated);

}  // namespace srs::detail
