// Microbenchmarks for the hot paths: steady-state solves, response
// extraction, Doppler averaging and the closed-form sweep kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <map>

#include "sqz/doppler.hpp"
#include "sqz/quadrature.hpp"
#include "sqz/response.hpp"
#include "sqz/scheme.hpp"
#include "sqz/transitions.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGamma0 = 3.61e7;       // rad/s
constexpr double kGammaTransit = 9.15e5; // rad/s
constexpr double kLambda = 794.98e-7;    // cm

sqz::LevelScheme x_scheme() { return sqz::make_j_scheme(0.5, 0.5, 1e-3, 1.0); }

sqz::LevelScheme rb_scheme() {
  std::map<double, double> fp{{1.0, 0.0}, {2.0, 2.0 * kPi * 814.5e6}};
  return sqz::make_hyperfine_scheme(0.5, 0.5, 1.5, 2.0, fp, kGammaTransit,
                                    kGamma0);
}

sqz::DriveSpec rb_drive() {
  sqz::DriveSpec d;
  d.rabi = 2.48e9;
  d.detuning = 300.0 * kGamma0;
  d.pol_angle = kPi / 2.0;
  return d;
}

void BM_variance_grid(benchmark::State& state) {
  sqz::QuadratureGeometry geom{5.0, 0.05};
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i < 181; ++i) acc += sqz::variance(geom, kPi * i / 181.0);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_variance_grid);

void BM_response_closed_form(benchmark::State& state) {
  sqz::TransitionSpec spec;
  spec.gamma0 = 1.0;
  spec.gamma = 1e-3;
  spec.wavelength = 1.0;
  spec.density = 1.0;
  for (auto _ : state) {
    auto r = sqz::response_x(spec, {1e8, 1666.0});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_response_closed_form);

// 4-state scheme: one steady-state solve plus the ellipse projection.
void BM_envelope_x(benchmark::State& state) {
  auto scheme = x_scheme();
  sqz::DriveSpec drive;
  drive.rabi = 0.1;
  drive.detuning = 2.0;
  double K = sqz::response_scale(1.0, 1.0, 1.0);
  for (auto _ : state) {
    auto d = sqz::envelope_derivatives(scheme, drive, K);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_envelope_x);

// 13-state Rb D1 hyperfine scheme (F=2 ground against F'=1,2).
void BM_envelope_rb(benchmark::State& state) {
  auto scheme = rb_scheme();
  auto drive = rb_drive();
  double K = sqz::response_scale(1e12, kLambda, kGamma0);
  for (auto _ : state) {
    auto d = sqz::envelope_derivatives(scheme, drive, K);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_envelope_rb);

// Probe pair at eps and eps/2: two solves, convergence bookkeeping.
void BM_extract_response_rb(benchmark::State& state) {
  auto scheme = rb_scheme();
  auto drive = rb_drive();
  double K = sqz::response_scale(1e12, kLambda, kGamma0);
  for (auto _ : state) {
    auto r = sqz::extract_response(scheme, drive, K);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_extract_response_rb);

// Full Doppler-averaged point at the given quadrature order (the scan's
// per-row cost). Runs at 2*order plus the doubling check.
void BM_doppler_rb(benchmark::State& state) {
  auto scheme = rb_scheme();
  auto drive = rb_drive();
  double K = sqz::response_scale(1e12, kLambda, kGamma0);
  double width = 2.0 * kPi * 306e6;
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = sqz::doppler_average(scheme, drive, K, width, order);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_doppler_rb)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
