#include <benchmark/benchmark.h>

#include "defectforms/defects.hpp"
#include "defectforms/fixtures.hpp"
#include "defectforms/irreducible.hpp"
#include "defectforms/random.hpp"
#include "defectforms/transport.hpp"

using namespace defectforms;

namespace {

Geometry fresh(int seed, FixtureFamily fam) {
  RandomSource rng(seed);
  return random_geometry(rng, fam);
}

void BM_ParseScalar(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(parse_scalar("(x^2*y - 3*z)/(1 + x*y)^2 + z^3/(2 - y)"));
}
BENCHMARK(BM_ParseScalar);

void BM_IsZero(benchmark::State& st) {
  RandomSource rng(3);
  ScalarField a = rng.field(3, 4, true), b = rng.field(3, 4, true);
  ScalarField r = a * b / (ScalarField(1) + a * a);
  ZeroTestConfig cfg;
  cfg.max_expand_degree = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(is_zero(r, cfg));
}
BENCHMARK(BM_IsZero)->Arg(0)->Arg(40);

void BM_Hodge(benchmark::State& st) {
  RandomSource rng(4);
  Coframe fr = rng.coframe(1, true);
  Form w = rng.form(1, 2, 4);
  for (auto _ : st) benchmark::DoNotOptimize(hodge(w, fr));
}
BENCHMARK(BM_Hodge);

void BM_CartanTensors(benchmark::State& st) {
  RandomSource rng(5);
  Coframe fr = rng.coframe(1);
  TensorForm w = random_connection(rng, 2, false);
  for (auto _ : st) benchmark::DoNotOptimize(cartan_tensors(Geometry(fr, w)));
}
BENCHMARK(BM_CartanTensors)->Unit(benchmark::kMillisecond);

void BM_Bianchi(benchmark::State& st) {
  for (auto _ : st) {
    Geometry g = fresh(6, FixtureFamily::MetricAffine);
    benchmark::DoNotOptimize(bianchi_residuals(g));
  }
}
BENCHMARK(BM_Bianchi)->Unit(benchmark::kMillisecond);

void BM_IrreduciblePieces(benchmark::State& st) {
  Geometry g = fresh(7, FixtureFamily::MetricAffine);
  g.cartan();
  for (auto _ : st) {
    benchmark::DoNotOptimize(torsion_pieces(g));
    benchmark::DoNotOptimize(nonmetricity_pieces(g));
  }
}
BENCHMARK(BM_IrreduciblePieces)->Unit(benchmark::kMillisecond);

void BM_ClaimRegistry(benchmark::State& st) {
  for (auto _ : st) {
    Geometry g = fixture_g4();
    benchmark::DoNotOptimize(run_claims(g, {"all"}));
  }
}
BENCHMARK(BM_ClaimRegistry)->Unit(benchmark::kMillisecond);

void BM_Transport(benchmark::State& st) {
  Geometry g = fixture_g4();
  NumericConfig cfg;
  cfg.ode_steps = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(product_drift(g, unit_square_loop(), {1, 0, 0}, {0, 1, 0}, cfg));
}
BENCHMARK(BM_Transport)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Stokes(benchmark::State& st) {
  RandomSource rng(8);
  Form w = rng.form(1, 3, 4);
  Form dw = d(w);
  for (auto _ : st) {
    benchmark::DoNotOptimize(line_integral(w, unit_square_loop()));
    benchmark::DoNotOptimize(surface_integral(dw, unit_square_patch()));
  }
}
BENCHMARK(BM_Stokes);

}  // namespace

BENCHMARK_MAIN();
