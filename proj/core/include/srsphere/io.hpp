#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "srsphere/bvp.hpp"
#include "srsphere/distance.hpp"
#include "srsphere/geodesic.hpp"

namespace srs {

/// Shortest round-trip representation: 17 significant digits. Non-finite
/// values become "nan", "inf" or "-inf".
std::string format_number(double x);

/// Compact JSON, numbers at 17 significant digits, non-finite numbers as null.
std::string to_json(const BranchSolution& s);
std::string to_json(const std::vector<BranchSolution>& solutions);
std::string to_json(const DistanceResult& r);
std::string to_json(const ClassificationReport& r);

/// Inverses of to_json. Throw InvalidArgument on malformed input.
BranchSolution parse_solution(std::string_view json);
std::vector<BranchSolution> parse_solutions(std::string_view json);
DistanceResult parse_distance(std::string_view json);
ClassificationReport parse_classification(std::string_view json);

/// CSV with a header row, ',' separators and '\n' line endings.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace srs
