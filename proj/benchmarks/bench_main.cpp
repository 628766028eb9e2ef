#include <benchmark/benchmark.h>

#include "chimot/eval.hpp"
#include "chimot/gw.hpp"
#include "chimot/parse.hpp"
#include "chimot/roots.hpp"

namespace {

void BM_GwMul(benchmark::State& state) {
  auto m = chimot::FieldModel::finite(7);
  auto x = chimot::gw_make(3, -2, m);
  auto y = chimot::gw_make(-1, 5, m);
  for (auto _ : state) benchmark::DoNotOptimize(chimot::gw_mul(x, y, m));
}
BENCHMARK(BM_GwMul);

void BM_WeylEnumerate(benchmark::State& state, chimot::CartanType ct) {
  for (auto _ : state) {
    // Bypass the cache: measure the BFS itself.
    benchmark::DoNotOptimize(chimot::weyl_enumerate(*chimot::root_system(ct)));
  }
}
BENCHMARK_CAPTURE(BM_WeylEnumerate, A5, chimot::CartanType{chimot::CartanFamily::A, 5});
BENCHMARK_CAPTURE(BM_WeylEnumerate, D5, chimot::CartanType{chimot::CartanFamily::D, 5});
BENCHMARK_CAPTURE(BM_WeylEnumerate, F4, chimot::CartanType{chimot::CartanFamily::F, 4});

void BM_Eval(benchmark::State& state, const char* text, const char* model) {
  auto m = chimot::FieldModel::parse(model);
  auto expr = chimot::parse(text);
  for (auto _ : state) benchmark::DoNotOptimize(chimot::eval_chi(expr, m));
}
BENCHMARK_CAPTURE(BM_Eval, Torus5, "Torus(5)", "finite:5");
BENCHMARK_CAPTURE(BM_Eval, Projective30, "Projective(30)", "generic");
BENCHMARK_CAPTURE(BM_Eval, FlagB3, "Flag(B, 3)", "generic");

}  // namespace

BENCHMARK_MAIN();
