#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "srsphere/bvp.hpp"
#include "srsphere/distance.hpp"
#include "srsphere/geodesic.hpp"

namespace {

srs::Endpoint forward_endpoint(double u, double rho, double alpha) {
    const auto z = srs::s3_point(u, rho, alpha, 1.0);
    return srs::Endpoint(z[0], z[1]);
}

void BM_EvalS3(benchmark::State& state) {
    const srs::S3GeodesicParams p(0.3, 5.0, 1.0);
    double s = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(srs::eval_s3(p, s));
        s = s < 1.0 ? s + 1e-3 : 0.0;
    }
}
BENCHMARK(BM_EvalS3);

void BM_SolveGeneral(benchmark::State& state) {
    const auto e = forward_endpoint(0.3, 2.0, 1.0);
    srs::SolverConfig c;
    c.q_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(srs::solve_general(e, c));
}
BENCHMARK(BM_SolveGeneral)->Arg(0)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_HorizontalSphere(benchmark::State& state) {
    srs::SolverConfig c;
    c.q_max = 6;
    for (auto _ : state) benchmark::DoNotOptimize(srs::solve_horizontal_sphere(0.7, 0.0, c));
}
BENCHMARK(BM_HorizontalSphere)->Unit(benchmark::kMillisecond);

void BM_Distance(benchmark::State& state) {
    const auto e = forward_endpoint(-0.6, 4.0, 2.5);
    for (auto _ : state) benchmark::DoNotOptimize(srs::cc_distance(e));
}
BENCHMARK(BM_Distance)->Unit(benchmark::kMillisecond);

void BM_ShootingOracle(benchmark::State& state) {
    const srs::Endpoint e(std::polar(1.0, 1.0), 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(srs::shooting_oracle(e));
}
BENCHMARK(BM_ShootingOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
