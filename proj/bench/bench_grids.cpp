/*
   Copyright 2026 The tateops Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial against OpenMP runs of the grid and sampling kernels.

#include <benchmark/benchmark.h>

#include "tateops/grid.hpp"
#include "tateops/random.hpp"
#include "tateops/trace.hpp"

using namespace tateops;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_residue_grid(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(residue_grid(Field{}, state.range(1), exec_of(state)));
}
BENCHMARK(BM_residue_grid)->ArgNames({"parallel", "bound"})->ArgsProduct({{0, 1}, {6, 12}});

void BM_kacmoody_grid(benchmark::State& state) {
    static const LieAlgebraData sl2 = LieAlgebraData::sl2();
    for (auto _ : state) benchmark::DoNotOptimize(kacmoody_grid(sl2, state.range(1), exec_of(state)));
}
BENCHMARK(BM_kacmoody_grid)->ArgNames({"parallel", "bound"})->ArgsProduct({{0, 1}, {2, 4}});

void BM_induced_matrix(benchmark::State& state) {
    SampleRng rng(7, 0);
    Op a = random_op(rng, Field{}, OpClass::any, 2);
    const std::int64_t w = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(induced_matrix(a, -w, w, -w, w, exec_of(state)));
}
BENCHMARK(BM_induced_matrix)->ArgNames({"parallel", "width"})->ArgsProduct({{0, 1}, {4, 8}});

void BM_trace_samples(benchmark::State& state) {
    auto check = [](std::size_t k) {
        SampleRng rng(11, k);
        Op a = random_op(rng, Field{}, OpClass::trace_class, 2);
        Op b = random_op(rng, Field{}, OpClass::trace_class, 2);
        return trace(a + b) == trace(a) + trace(b);
    };
    for (auto _ : state) benchmark::DoNotOptimize(run_samples(state.range(1), check, exec_of(state)));
}
BENCHMARK(BM_trace_samples)->ArgNames({"parallel", "samples"})->ArgsProduct({{0, 1}, {64}});

}  // namespace

BENCHMARK_MAIN();
