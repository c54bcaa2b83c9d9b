/*
 * Copyright (c) 2026, The sphbraket Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "sphbraket/angular_momentum.hpp"
#include "sphbraket/braket.hpp"
#include "sphbraket/fourier_driver.hpp"

using namespace sphbraket;

namespace {

void assemble(benchmark::State& state, EvalMethod method, bool cold) {
    const int L = static_cast<int>(state.range(0));
    const TrigTerm op{TrigKind::Cos, 2, 0};
    coupling_matrix(op, L, method);
    for (auto _ : state) {
        if (cold) {
            state.PauseTiming();
            clear_braket_caches();
            state.ResumeTiming();
        }
        benchmark::DoNotOptimize(coupling_matrix(op, L, method));
    }
    const int dim = (L + 1) * (L + 1);
    state.counters["entries"] = dim * dim;
}

void BM_MainCold(benchmark::State& s) { assemble(s, EvalMethod::MainText, true); }
void BM_MainWarm(benchmark::State& s) { assemble(s, EvalMethod::MainText, false); }
void BM_AppendixCold(benchmark::State& s) { assemble(s, EvalMethod::AppendixA, true); }
void BM_Quadrature(benchmark::State& s) { assemble(s, EvalMethod::Quadrature, false); }

void BM_ClebschGordanExact(benchmark::State& state) {
    const int j = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(clebsch_gordan(j, 1, j, -1, j, 0));
    }
}

void BM_EffectiveMass(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(effective_mass_coupling({2, 1.0, 0.5}, L));
    }
}

}  // namespace

BENCHMARK(BM_MainCold)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MainWarm)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AppendixCold)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Quadrature)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClebschGordanExact)->Arg(4)->Arg(16)->Arg(40);
BENCHMARK(BM_EffectiveMass)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
