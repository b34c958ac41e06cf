#include <benchmark/benchmark.h>

#include <map>

#include "rdi/rdi.hpp"
#include "rdi/scenarios.hpp"
#include "rdi/verify.hpp"

namespace {

using namespace rdi;

const Scenario& scenario(const std::string& name) {
  static std::map<std::string, Scenario> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make_scenario(name)).first;
  return it->second;
}

Point<double> probe(const Scenario& s) {
  return s.lab_point(Point<double>(0.3 * s.period, 0.4 * s.width, -0.7 * s.width, 0.0));
}

void BM_SpinorProduct(benchmark::State& state) {
  const auto b = boost(std::array{0.3, -0.2, 0.5});
  const auto r = rotor(std::array{0.1, 0.7, -0.4});
  for (auto _ : state) {
    auto m = b * r;
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_SpinorProduct);

void BM_Inversion(benchmark::State& state, const char* name) {
  const Scenario& s = scenario(name);
  const auto x = probe(s);
  for (auto _ : state) benchmark::DoNotOptimize(invert_potential(s.spinor, x));
}
BENCHMARK_CAPTURE(BM_Inversion, ellipse, "ellipse-fig1");
BENCHMARK_CAPTURE(BM_Inversion, redmond, "redmond-fig2");
BENCHMARK_CAPTURE(BM_Inversion, volkov_quadrature, "volkov-inhomogeneous")->Unit(benchmark::kMillisecond);

void BM_DiracResidual(benchmark::State& state, const char* name) {
  const Scenario& s = scenario(name);
  const auto x = probe(s);
  for (auto _ : state) benchmark::DoNotOptimize(dirac_residual(s.column, s.potential, x));
}
BENCHMARK_CAPTURE(BM_DiracResidual, ellipse, "ellipse-fig1");
BENCHMARK_CAPTURE(BM_DiracResidual, redmond, "redmond-fig2");

void BM_MaxwellSources(benchmark::State& state) {
  const Scenario& s = scenario("redmond-fig2");
  const auto x = probe(s);
  for (auto _ : state) benchmark::DoNotOptimize(maxwell_sources(s.fields, x));
}
BENCHMARK(BM_MaxwellSources);

void BM_BorisSteps(benchmark::State& state) {
  const FieldSampler uniform = [](const Point<double>&) {
    EMSample<double> f;
    f.B = {0.0, 0.0, 0.5};
    return f;
  };
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_push({0.0, {0, 0, 0}, {0.6, 0, 0}}, uniform, 0.01, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_BorisSteps)->Arg(1000)->Arg(20000);

void BM_Verification(benchmark::State& state, const char* name) {
  const Scenario& s = scenario(name);
  const GridSpec g = default_grid(s, 3, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(s, g));
}
BENCHMARK_CAPTURE(BM_Verification, ellipse, "ellipse-fig1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verification, redmond, "redmond-fig2")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
