/*
   Copyright 2026 The qcodes Authors

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

#include <benchmark/benchmark.h>

#include "qcodes/code.hpp"
#include "qcodes/tables.hpp"

using namespace qcodes;

namespace {

void BM_EnumerateParallel(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_optimal(5, m));
}

void BM_EnumerateSerial(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_optimal_serial(5, m));
}

// e = 1875 at m = 5 is optimal, so both searches scan their full range.
void BM_Weight3Tables(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const auto ctx = FieldContext::build(5, m);
    (void)ctx.tables();
    const auto spec = CodeSpec::make(5, m, m == 5 ? 1875 : 63);
    for (auto _ : state) benchmark::DoNotOptimize(weight3_search(ctx, spec));
}

void BM_Weight3Reference(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const auto ctx = FieldContext::build(5, m);
    const auto spec = CodeSpec::make(5, m, m == 5 ? 1875 : 63);
    for (auto _ : state) benchmark::DoNotOptimize(weight3_search_reference(ctx, spec));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Weight3Tables)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Weight3Reference)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
