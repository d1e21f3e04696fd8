#include <benchmark/benchmark.h>
#include <omp.h>

#include "nildist/distortion.hpp"

using namespace nildist;

namespace {

HallBasisPtr heisenberg() {
  static HallBasisPtr hall = HallBasis::generate(Presentation::make(2, 2));
  return hall;
}

HallBasisPtr class_three() {
  static HallBasisPtr hall = HallBasis::generate(Presentation::make(2, 3));
  return hall;
}

void BM_BallSerialReference(benchmark::State& state) {
  auto hall = heisenberg();
  auto gens = standard_generators(hall->presentation());
  for (auto _ : state) {
    auto ball = enumerate_ball_serial(hall, gens, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(ball.size());
  }
}

void BM_BallLayered(benchmark::State& state) {
  auto hall = heisenberg();
  auto gens = standard_generators(hall->presentation());
  BallOptions opt;
  opt.parallel = state.range(1) != 0;
  for (auto _ : state) {
    auto ball = enumerate_ball(hall, gens, static_cast<std::size_t>(state.range(0)), opt);
    benchmark::DoNotOptimize(ball.size());
  }
  state.counters["threads"] = opt.parallel ? omp_get_max_threads() : 1;
}

void BM_BallClassThree(benchmark::State& state) {
  auto hall = class_three();
  auto gens = standard_generators(hall->presentation());
  BallOptions opt;
  opt.parallel = state.range(1) != 0;
  for (auto _ : state) {
    auto ball = enumerate_ball(hall, gens, static_cast<std::size_t>(state.range(0)), opt);
    benchmark::DoNotOptimize(ball.size());
  }
}

void BM_MeasureCentral(benchmark::State& state) {
  auto hall = heisenberg();
  const Presentation& p = hall->presentation();
  std::vector<Word> gens{flatten(parse("[a,b]", p))};
  MeasureOptions opt;
  opt.parallel = state.range(1) != 0;
  for (auto _ : state) {
    auto t = measure_distortion(gens, hall, static_cast<std::size_t>(state.range(0)), opt);
    benchmark::DoNotOptimize(t.rows.size());
  }
}

}  // namespace

BENCHMARK(BM_BallSerialReference)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallLayered)->Args({6, 0})->Args({6, 1})->Args({10, 0})->Args({10, 1})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallClassThree)->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeasureCentral)->Args({10, 0})->Args({10, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
