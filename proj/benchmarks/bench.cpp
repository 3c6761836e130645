#include <benchmark/benchmark.h>

#include <random>

#include "arbor/invariants.hpp"
#include "arbor/oracle.hpp"

namespace {

using namespace arbor;

Code c33() { return Code::validate({"a", "b"}, {{0, 1, 3}, {1, 0, 3}}); }

void BM_LeastRotation(benchmark::State& state) {
  std::mt19937_64 rng(1);
  ColorWord w(static_cast<size_t>(state.range(0)));
  for (auto& c : w) c = static_cast<Color>(rng() % 4);
  for (auto _ : state) benchmark::DoNotOptimize(least_rotation(w));
}
BENCHMARK(BM_LeastRotation)->Arg(64)->Arg(1024)->Arg(16384);

void BM_ISequenceTn(benchmark::State& state) {
  CyclicType t = make_type(gen_tn(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(i_sequence(t, 0));
}
BENCHMARK(BM_ISequenceTn)->Arg(5)->Arg(15)->Arg(30);

void BM_BallBuild(benchmark::State& state) {
  Code c = c33();
  for (auto _ : state) {
    Ball b(c, 0, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_BallBuild)->Arg(6)->Arg(8)->Arg(10);

void BM_RotateComposeClassify(benchmark::State& state) {
  Ball b(c33(), 0, static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto g = compose(random_rotation(b, 0, ++seed),
                     random_rotation(b, b.children(0)[0], ++seed));
    try {
      benchmark::DoNotOptimize(classify(g));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_RotateComposeClassify)->Arg(6)->Arg(8);

void BM_CrosscheckRotRot(benchmark::State& state) {
  Code c = c33();
  CrosscheckOptions o;
  o.radius = 8;
  o.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crosscheck_rot_rot(c, o));
}
BENCHMARK(BM_CrosscheckRotRot)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
