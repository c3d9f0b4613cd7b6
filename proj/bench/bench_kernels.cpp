// Copyright 2026 The cliff4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "cliff4/kernels.hpp"
#include "cliff4/moments.hpp"

using namespace cliff4;

namespace {

StateVector fixed_state(int n) {
    Rng rng(17);
    return sample_uniform_state(int64_t(1) << n, rng);
}

std::vector<StateVector> fixed_states(int n, int count) {
    Rng rng(18);
    std::vector<StateVector> out;
    for (int i = 0; i < count; i++) {
        out.push_back(sample_uniform_state(int64_t(1) << n, rng));
    }
    return out;
}

void BM_CharacteristicSerial(benchmark::State &state) {
    StateVector psi = fixed_state(int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::characteristic_serial(psi));
    }
}
void BM_CharacteristicOmp(benchmark::State &state) {
    StateVector psi = fixed_state(int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::characteristic_omp(psi));
    }
}
BENCHMARK(BM_CharacteristicSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacteristicOmp)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_HistogramSerial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::sp_fixed_dim_histogram_serial(3));
    }
}
void BM_HistogramOmp(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::sp_fixed_dim_histogram_omp(3));
    }
}
BENCHMARK(BM_HistogramSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramOmp)->Unit(benchmark::kMillisecond);

void BM_FramePotentialSerial(benchmark::State &state) {
    auto s = fixed_states(3, int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::frame_potential_serial(s, 4, {}));
    }
}
void BM_FramePotentialOmp(benchmark::State &state) {
    auto s = fixed_states(3, int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::frame_potential_omp(s, 4, {}));
    }
}
BENCHMARK(BM_FramePotentialSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FramePotentialOmp)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_HaarSerial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::haar_samples_serial(int(state.range(0)), 20000, 1));
    }
}
void BM_HaarOmp(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::haar_samples_omp(int(state.range(0)), 20000, 1));
    }
}
BENCHMARK(BM_HaarSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HaarOmp)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
