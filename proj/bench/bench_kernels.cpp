// Copyright 2026 The stabgeo Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "stabgeo/census.hpp"

using namespace stabgeo;

namespace {

const std::vector<StabilizerMatrix> &states(int n) {
    static std::vector<StabilizerMatrix> cache[5];
    if (cache[n].empty()) cache[n] = enumerate_states(n);
    return cache[n];
}

void BM_HistogramSerial(benchmark::State &st) {
    const auto &s = states(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(angle_histogram_serial(s, s[0]));
}

void BM_HistogramParallel(benchmark::State &st) {
    const auto &s = states(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(angle_histogram_parallel(s, s[0]));
}

void BM_PairsSerial(benchmark::State &st) {
    const auto &s = states(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(pairwise_classes_serial(s));
}

void BM_PairsParallel(benchmark::State &st) {
    const auto &s = states(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(pairwise_classes_parallel(s));
}

void BM_MaxOverlapSerial(benchmark::State &st) {
    DenseState mu = evading_state(2);
    for (auto _ : st) benchmark::DoNotOptimize(max_overlap_serial(mu, states(4)));
}

void BM_MaxOverlapParallel(benchmark::State &st) {
    DenseState mu = evading_state(2);
    for (auto _ : st) benchmark::DoNotOptimize(max_overlap_parallel(mu, states(4)));
}

}  // namespace

BENCHMARK(BM_HistogramSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PairsSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairsParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaxOverlapSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxOverlapParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
