#include <benchmark/benchmark.h>

#include "helmsens/verify.hpp"

using namespace helmsens;

namespace {

WaveParameters params() {
  WaveParameters p;
  p.kappa = 2.0;
  p.eta = 1.0;
  return p;
}

StarCurve flower(std::size_t n) {
  return StarCurve::make(
      {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.1, 0.0)}, n);
}

void BM_AssembleOperators(benchmark::State& state) {
  const StarCurve c = flower(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_operators(c, 2.0));
}
BENCHMARK(BM_AssembleOperators)->Arg(64)->Arg(128)->Arg(256);

void BM_BieSolve(benchmark::State& state) {
  const StarCurve c = flower(static_cast<std::size_t>(state.range(0)));
  const WaveParameters p = params();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bie_solve(reg::ProblemKind::Dirichlet, c, p, PlaneWave{0.3}));
}
BENCHMARK(BM_BieSolve)->Arg(64)->Arg(128)->Arg(256);

void BM_MieSolveAndTraces(benchmark::State& state) {
  const WaveParameters p = params();
  for (auto _ : state) {
    const SeriesSolution s =
        mie_solve(reg::ProblemKind::Impedance, p, PlaneWave{0.3}, 1.0);
    benchmark::DoNotOptimize(s.traces(256));
  }
}
BENCHMARK(BM_MieSolveAndTraces);

void BM_MieEval(benchmark::State& state) {
  const SeriesSolution s =
      mie_solve(reg::ProblemKind::Dirichlet, params(), PlaneWave{0.3}, 1.0);
  const Vec2 x{1.7, 0.4};
  for (auto _ : state)
    benchmark::DoNotOptimize(s.eval(x, FieldPart::Total));
}
BENCHMARK(BM_MieEval);

void BM_RegularityGrid(benchmark::State& state) {
  using namespace reg;
  for (auto _ : state) {
    for (int r = 1; r <= 6; ++r)
      for (int q2 = 0; q2 <= 13; ++q2)
        for (int k = 1; k <= r; ++k) {
          RegularityQuery q;
          q.r = SobolevIndex::integer(r);
          q.q = SobolevIndex::half(q2);
          q.k = SobolevIndex::integer(k);
          q.mode = ShiftMode::Sharp;
          if (q2 >= 2) benchmark::DoNotOptimize(full_report(q));
        }
  }
}
BENCHMARK(BM_RegularityGrid);

void BM_TaylorLadder(benchmark::State& state) {
  TaylorStudy st;
  st.problem.beta = reg::ProblemKind::Dirichlet;
  st.problem.params = params();
  st.problem.incident.angle = 0.3;
  st.problem.N = 128;
  st.velocity = VelocityField::dilation();
  st.target = StudyTarget::VolumeMd;
  st.ts = {1e-2, 3e-3, 1e-3};
  st.n_radial = 4;
  st.n_angular = 16;
  for (auto _ : state) benchmark::DoNotOptimize(taylor_study(st));
}
BENCHMARK(BM_TaylorLadder);

}  // namespace

BENCHMARK_MAIN();
