// srsphere: evaluate, classify and solve sub-Riemannian geodesics on S^3.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "srsphere/bvp.hpp"
#include "srsphere/distance.hpp"
#include "srsphere/errors.hpp"
#include "srsphere/geodesic.hpp"
#include "srsphere/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoSolution = 4;
constexpr double kInputNormTolerance = 1e-6;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size()) throw srs::InvalidArgument(fmt::format("'{}' is not a number", s));
    return v;
}

srs::Complex parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw srs::InvalidArgument(fmt::format("expected re,im but got '{}'", s));
    }
    return {parse_double(s.substr(0, comma)), parse_double(s.substr(comma + 1))};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw IoError("failed to write to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path));
    out << text;
    out.close();
    if (!out) throw IoError(fmt::format("failed to write '{}'", path));
}

struct EndpointArgs {
    std::string z1;
    std::string z2;
    int qmax = 8;
    double case_eps = srs::kDefaultCaseEps;
    std::string out;
};

void add_endpoint_flags(CLI::App* cmd, EndpointArgs& a) {
    cmd->add_option("--z1", a.z1, "first coordinate as re,im")->required();
    cmd->add_option("--z2", a.z2, "second coordinate as re,im")->required();
    cmd->add_option("--qmax", a.qmax, "largest winding number q searched")->check(CLI::NonNegativeNumber);
    cmd->add_option("--case-eps", a.case_eps, "tolerance of the endpoint case tagging")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", a.out, "output path (default stdout)");
}

srs::Endpoint endpoint_from(const EndpointArgs& a) {
    srs::Complex z1 = parse_complex(a.z1);
    srs::Complex z2 = parse_complex(a.z2);
    const double n2 = std::norm(z1) + std::norm(z2);
    if (!(std::abs(n2 - 1.0) <= kInputNormTolerance)) {
        throw srs::NotUnitNorm(fmt::format("|z1|^2 + |z2|^2 = {:.17g} is not 1 within {:.0e}", n2,
                                           kInputNormTolerance));
    }
    const double n = std::sqrt(n2);
    z1 /= n;
    z2 /= n;
    return srs::Endpoint(z1, z2, a.case_eps);
}

srs::SolverConfig solver_config(const EndpointArgs& a) {
    srs::SolverConfig c;
    c.q_max = a.qmax;
    return c;
}

int cmd_eval(double u, double rho, double alpha, int samples, const std::string& format,
             const std::string& out) {
    if (samples < 2) throw srs::InvalidArgument("--samples must be at least 2");
    const srs::S3GeodesicParams params(u, rho, alpha);
    const auto pts = srs::sample_s3(params, samples);
    std::string text;
    if (format == "json") {
        text = "[";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& [s, z] = pts[i];
            if (i > 0) text += ',';
            text += fmt::format(R"({{"s":{},"re_z1":{},"im_z1":{},"re_z2":{},"im_z2":{}}})",
                                srs::format_number(s), srs::format_number(z[0].real()),
                                srs::format_number(z[0].imag()), srs::format_number(z[1].real()),
                                srs::format_number(z[1].imag()));
        }
        text += "]\n";
    } else {
        std::vector<std::vector<double>> rows;
        for (const auto& [s, z] : pts) rows.push_back({s, z[0].real(), z[0].imag(), z[1].real(), z[1].imag()});
        std::ostringstream os;
        srs::write_csv(os, {"s", "re_z1", "im_z1", "re_z2", "im_z2"}, rows);
        text = os.str();
    }
    emit(text, out);
    return kExitOk;
}

int cmd_classify(const std::optional<double>& vf, const std::string& ratio, int hits,
                 const std::string& out) {
    srs::ClassificationReport report;
    if (!ratio.empty()) {
        const auto slash = ratio.find('/');
        if (slash == std::string::npos) throw srs::InvalidRatio("--ratio expects p/q");
        int p = 0;
        int q = 0;
        const auto ps = ratio.substr(0, slash);
        const auto qs = ratio.substr(slash + 1);
        const auto rp = std::from_chars(ps.data(), ps.data() + ps.size(), p);
        const auto rq = std::from_chars(qs.data(), qs.data() + qs.size(), q);
        if (rp.ec != std::errc() || rp.ptr != ps.data() + ps.size() || rq.ec != std::errc() ||
            rq.ptr != qs.data() + qs.size()) {
            throw srs::InvalidRatio(fmt::format("'{}' is not of the form p/q", ratio));
        }
        report = srs::classify_closed(p, q);
    } else {
        const double c = srs::ratio_from_vf(*vf);
        report = srs::classify_open(c, hits);
        if (const auto r = srs::detect_rational(c)) {
            std::cerr << fmt::format("note: c = {:.17g} is within {:.1e} of {}/{}; use --ratio {}/{} "
                                     "for the closed-geodesic report\n",
                                     c, r->error, r->p, r->q, r->p, r->q);
        }
    }
    emit(srs::to_json(report) + "\n", out);
    return kExitOk;
}

int cmd_solve(const EndpointArgs& a) {
    const auto e = endpoint_from(a);
    const auto result = srs::solve(e, solver_config(a));
    for (const auto& note : result.notes) std::cerr << "note: " << note << '\n';
    emit(srs::to_json(result.solutions) + "\n", a.out);
    return kExitOk;
}

int cmd_distance(const EndpointArgs& a) {
    const auto e = endpoint_from(a);
    emit(srs::to_json(srs::cc_distance(e, solver_config(a))) + "\n", a.out);
    return kExitOk;
}

int cmd_table(const std::string& function, double z1abs, std::optional<double> z2abs,
              const std::string& range, int samples, const std::string& out) {
    if (samples < 2) throw srs::InvalidArgument("--samples must be at least 2");
    const auto colon = range.find(':');
    if (colon == std::string::npos) throw srs::InvalidArgument("--range expects a:b");
    const double lo = parse_double(range.substr(0, colon));
    const double hi = parse_double(range.substr(colon + 1));
    if (!(lo < hi)) throw srs::InvalidArgument("--range needs a < b");
    if (!(z1abs >= 0.0 && z1abs <= 1.0)) throw srs::DomainError("--z1abs must lie in [0, 1]");
    const double y = z2abs.value_or(std::sqrt((1.0 - z1abs) * (1.0 + z1abs)));

    std::vector<std::vector<double>> rows;
    int defined = 0;
    for (int i = 0; i < samples; ++i) {
        const double x = lo + (hi - lo) * i / (samples - 1);
        double v = std::numeric_limits<double>::quiet_NaN();
        try {
            if (function == "phi") {
                v = srs::phi_function(x, z1abs);
            } else if (function == "psi") {
                v = srs::psi_function(x, z1abs);
            } else {
                v = srs::b_function(x, z1abs, y);
            }
            ++defined;
        } catch (const srs::DomainError&) {
        }
        rows.push_back({x, v});
    }
    if (defined == 0) {
        throw srs::DomainError(fmt::format("{} is undefined everywhere on [{}, {}]", function, lo, hi));
    }
    std::ostringstream os;
    srs::write_csv(os, {function == "b" ? "u" : "rho", function}, rows);
    emit(os.str(), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sub-Riemannian geodesics on the Hopf-fibred 3-sphere"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "sample the geodesic with parameters (u, rho, alpha)");
    double u = 0.0;
    double rho = 0.0;
    double alpha = 0.0;
    int samples = 101;
    std::string format = "csv";
    std::string eval_out;
    eval->add_option("--u", u, "vertical fraction in (-1, 1)")->required();
    eval->add_option("--rho", rho, "great-circle angle, > 0")->required();
    eval->add_option("--alpha", alpha, "horizontal direction angle");
    eval->add_option("--samples", samples, "number of rows, >= 2");
    eval->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    eval->add_option("--out", eval_out, "output path (default stdout)");

    auto* classify = app.add_subcommand("classify", "closed or open geodesic");
    std::optional<double> vf;
    std::string ratio;
    int hits = 8;
    std::string classify_out;
    auto* vf_opt = classify->add_option("--vf", vf, "vertical speed of the arc-length geodesic");
    auto* ratio_opt = classify->add_option("--ratio", ratio, "rational c = p/q");
    vf_opt->excludes(ratio_opt);
    classify->add_option("--hits", hits, "fiber hits listed for open geodesics")
        ->check(CLI::PositiveNumber);
    classify->add_option("--out", classify_out, "output path (default stdout)");

    EndpointArgs solve_args;
    auto* solve = app.add_subcommand("solve", "all geodesics from (1, 0) to the endpoint");
    add_endpoint_flags(solve, solve_args);

    EndpointArgs distance_args;
    auto* distance = app.add_subcommand("distance", "sub-Riemannian distance from (1, 0)");
    add_endpoint_flags(distance, distance_args);

    auto* table = app.add_subcommand("table", "CSV table of Phi, Psi or B");
    std::string function;
    double z1abs = 0.0;
    std::optional<double> z2abs;
    std::string range;
    int table_samples = 1001;
    std::string table_out;
    table->add_option("--function", function, "phi, psi or b")
        ->required()
        ->check(CLI::IsMember({"phi", "psi", "b"}));
    table->add_option("--z1abs", z1abs, "|z1|")->required();
    table->add_option("--z2abs", z2abs, "|z2| (default sqrt(1 - |z1|^2))");
    table->add_option("--range", range, "argument interval a:b")->required();
    table->add_option("--samples", table_samples, "number of rows, >= 2");
    table->add_option("--out", table_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(u, rho, alpha, samples, format, eval_out);
        if (*classify) {
            if (!vf && ratio.empty()) throw srs::InvalidArgument("classify needs --vf or --ratio");
            return cmd_classify(vf, ratio, hits, classify_out);
        }
        if (*solve) return cmd_solve(solve_args);
        if (*distance) return cmd_distance(distance_args);
        if (*table) return cmd_table(function, z1abs, z2abs, range, table_samples, table_out);
    } catch (const srs::NoSolutionWithinQmax& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoSolution;
    } catch (const srs::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const srs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
