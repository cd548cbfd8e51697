// Copyright 2026 The mtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "mtc/kernels.hpp"
#include "mtc/suite.hpp"

namespace {

using namespace mtc;

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> c(-4, 4);
  Matrix m(n, n);
  for (auto& x : m.data()) x = Scalar(Rational(c(rng), 1 + (rng() % 3)));
  return m;
}

void BM_MatmulSerial(benchmark::State& state) {
  Field::configure(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_serial(a, b));
}
BENCHMARK(BM_MatmulSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_MatmulParallel(benchmark::State& state) {
  Field::configure(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_parallel(a, b));
  state.counters["threads"] = kernels::thread_count();
}
BENCHMARK(BM_MatmulParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_RowReduce(benchmark::State& state) {
  Field::configure(4);
  Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RowReduce)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Simples(benchmark::State& state) {
  HopfAlgebra h = builtin("double_sweedler");
  for (auto _ : state) benchmark::DoNotOptimize(compute_simples(h.algebra()));
}
BENCHMARK(BM_Simples)->Unit(benchmark::kMillisecond);

void BM_CoendStructure(benchmark::State& state) {
  HopfAlgebra h = builtin("double_sweedler");
  h = h.with_ribbon(solve_balancing(h).front());
  RepCat cat(h);
  for (auto _ : state) {
    CoendData cd = build_coend(cat);
    benchmark::DoNotOptimize(solve_structure_morphisms(cd));
  }
}
BENCHMARK(BM_CoendStructure)->Unit(benchmark::kMillisecond);

void BM_SuiteDoubleZ2(benchmark::State& state) {
  HopfAlgebra h = builtin("double_z2");
  SuiteOptions o;
  o.ribbon = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(h, o));
}
BENCHMARK(BM_SuiteDoubleZ2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
