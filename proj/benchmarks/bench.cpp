#include <benchmark/benchmark.h>

#include "gtd/analysis.hpp"
#include "gtd/fundeq.hpp"
#include "gtd/geometry.hpp"
#include "gtd/jets.hpp"
#include "gtd/models.hpp"
#include "gtd/thermo.hpp"

namespace {

using namespace gtd;

void BM_JetMultiply(benchmark::State& state) {
  const Jet4 a = pow(jet_var(1, 1.3), 1.5) + jet_var(2, 0.7);
  const Jet4 b = ln(jet_var(1, 1.3)) * jet_var(2, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetMultiply);

void BM_JetDivide(benchmark::State& state) {
  const Jet4 a = pow(jet_var(1, 1.3), 1.5) + jet_var(2, 0.7);
  const Jet4 b = 1.0 + jet_var(1, 1.3) * jet_var(2, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_JetDivide);

void BM_EvalExplicit(benchmark::State& state) {
  const ModelBundle b = make_model({Family::EMGB, EntropyKind::Area, Ensemble::Mass}, {});
  const StatePoint p{1.2, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(eval_jet(b.eq, p));
}
BENCHMARK(BM_EvalExplicit);

void BM_EvalParametric(benchmark::State& state) {
  const ModelBundle b = make_model(
      {Family::EYMGB, EntropyKind::Modified, Ensemble::Entropy}, {{"alpha", 1.0}});
  const StatePoint p = b.resolve("r", 2.0, {{"Q", 1.0}});
  for (auto _ : state) benchmark::DoNotOptimize(eval_jet(b.eq, p));
}
BENCHMARK(BM_EvalParametric);

void BM_Curvature(benchmark::State& state) {
  const ModelBundle b = make_model({Family::EMGB, EntropyKind::Area, Ensemble::Mass}, {});
  const StatePoint p{1.2, 0.8};
  const Jet4 phi = eval_jet(b.eq, p);
  for (auto _ : state)
    benchmark::DoNotOptimize(scalar_curvature(gtd_metric_from_jet(p, phi)));
}
BENCHMARK(BM_Curvature);

void BM_ThermoReport(benchmark::State& state) {
  const ModelBundle b = make_model({Family::EMGB, EntropyKind::Area, Ensemble::Mass}, {});
  const StatePoint p{1.2, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(thermo_report(b.eq, p));
}
BENCHMARK(BM_ThermoReport);

void BM_LocateTransitions(benchmark::State& state) {
  const ModelBundle b = make_model({Family::EMGB, EntropyKind::Area, Ensemble::Mass}, {});
  const SweepSpec sw{"S", 0.3, 3.0, static_cast<int>(state.range(0)), {{"Q", 1.0}}};
  for (auto _ : state) benchmark::DoNotOptimize(locate_transitions(b, sw));
}
BENCHMARK(BM_LocateTransitions)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
