#include "srsphere/io.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/core.h>

#include "json.hpp"
#include "srsphere/errors.hpp"

namespace srs {

namespace {

using nlohmann::json;

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

template <class T>
std::string json_optional(const std::optional<T>& v) {
    if (!v) return "null";
    if constexpr (std::is_same_v<T, double>) {
        return json_number(*v);
    } else {
        return fmt::format("{}", *v);
    }
}

std::string quoted(std::string_view s) { return json(std::string(s)).dump(); }

json parse_or_throw(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw InvalidArgument(fmt::format("malformed JSON: {}", e.what()));
    }
}

double number_of(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

template <class T>
std::optional<T> optional_of(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

BranchSolution solution_from(const json& j) {
    BranchSolution s;
    s.sigma1 = j.at("sigma1").get<int>();
    s.sigma2 = j.at("sigma2").get<int>();
    s.p = j.at("p").get<int>();
    s.q = j.at("q").get<int>();
    s.u = number_of(j.at("u"));
    s.rho = number_of(j.at("rho"));
    s.alpha = number_of(j.at("alpha"));
    s.length = number_of(j.at("length"));
    s.residual = number_of(j.at("residual"));
    s.family = family_from_string(j.at("family").get<std::string>());
    return s;
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InvalidArgument(fmt::format("unexpected JSON layout: {}", e.what()));
    }
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    return fmt::format("{:.17g}", x);
}

std::string to_json(const BranchSolution& s) {
    return fmt::format(
        R"({{"sigma1":{},"sigma2":{},"p":{},"q":{},"u":{},"rho":{},"alpha":{},"length":{},"residual":{},"family":{}}})",
        s.sigma1, s.sigma2, s.p, s.q, json_number(s.u), json_number(s.rho), json_number(s.alpha),
        json_number(s.length), json_number(s.residual), quoted(to_string(s.family)));
}

std::string to_json(const std::vector<BranchSolution>& solutions) {
    std::string out = "[";
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        if (i > 0) out += ',';
        out += to_json(solutions[i]);
    }
    out += ']';
    return out;
}

std::string to_json(const DistanceResult& r) {
    std::string lengths = "[";
    for (std::size_t i = 0; i < r.all_lengths.size(); ++i) {
        if (i > 0) lengths += ',';
        lengths += json_number(r.all_lengths[i]);
    }
    lengths += ']';
    return fmt::format(
        R"({{"distance":{},"case":{},"q_used":{},"q_min":{},"boundary_case":{},"certified":{},"minimizer":{},"all_lengths":{}}})",
        json_number(r.distance), quoted(to_string(r.endpoint_case)), r.q_used, r.q_min,
        r.boundary_case, r.certified, r.minimizer ? to_json(*r.minimizer) : "null", lengths);
}

std::string to_json(const ClassificationReport& r) {
    std::string hits = "[";
    for (std::size_t i = 0; i < r.fiber_hits.size(); ++i) {
        if (i > 0) hits += ',';
        hits += fmt::format(R"({{"s":{},"phase":{}}})", json_number(r.fiber_hits[i].s),
                            json_number(r.fiber_hits[i].phase));
    }
    hits += ']';
    return fmt::format(
        R"({{"closed":{},"p":{},"q":{},"ratio":{},"vf":{},"minimal_period":{},"loop_length":{},"segment_length":{},"fiber_hits":{}}})",
        r.closed, json_optional(r.p), json_optional(r.q), json_number(r.ratio), json_number(r.vf),
        json_optional(r.minimal_period), json_optional(r.loop_length), json_number(r.segment_length),
        hits);
}

BranchSolution parse_solution(std::string_view text) {
    const auto j = parse_or_throw(text);
    return guarded([&] { return solution_from(j); });
}

std::vector<BranchSolution> parse_solutions(std::string_view text) {
    const auto j = parse_or_throw(text);
    return guarded([&] {
        std::vector<BranchSolution> out;
        for (const auto& item : j) out.push_back(solution_from(item));
        return out;
    });
}

DistanceResult parse_distance(std::string_view text) {
    const auto j = parse_or_throw(text);
    return guarded([&] {
        DistanceResult r;
        r.distance = number_of(j.at("distance"));
        r.endpoint_case = endpoint_case_from_string(j.at("case").get<std::string>());
        r.q_used = j.at("q_used").get<int>();
        r.q_min = j.at("q_min").get<int>();
        r.boundary_case = j.at("boundary_case").get<bool>();
        r.certified = j.at("certified").get<bool>();
        if (!j.at("minimizer").is_null()) r.minimizer = solution_from(j.at("minimizer"));
        for (const auto& x : j.at("all_lengths")) r.all_lengths.push_back(number_of(x));
        return r;
    });
}

ClassificationReport parse_classification(std::string_view text) {
    const auto j = parse_or_throw(text);
    return guarded([&] {
        ClassificationReport r;
        r.closed = j.at("closed").get<bool>();
        r.p = optional_of<int>(j.at("p"));
        r.q = optional_of<int>(j.at("q"));
        r.ratio = number_of(j.at("ratio"));
        r.vf = number_of(j.at("vf"));
        r.minimal_period = optional_of<double>(j.at("minimal_period"));
        r.loop_length = optional_of<double>(j.at("loop_length"));
        r.segment_length = number_of(j.at("segment_length"));
        for (const auto& h : j.at("fiber_hits")) {
            r.fiber_hits.push_back({number_of(h.at("s")), number_of(h.at("phase"))});
        }
        return r;
    });
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << format_number(row[i]);
        }
        out << '\n';
    }
}

}  // namespace srs
