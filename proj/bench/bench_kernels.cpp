// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "bcce/analytics.hpp"
#include "bcce/monte_carlo.hpp"

namespace {

bcce::SystemConfig bench_cfg(long n) {
    bcce::RawConfig r;
    r.n_antennas = n;
    r.network_load = 1.0;
    r.snr_db = 10.0;
    r.eavesdropper_density = 0.1;
    r.seed = 11;
    return bcce::validate_config(r);
}

void BM_TrialsSerial(benchmark::State& state) {
    const bcce::TrialSetup setup = bcce::make_trial_setup(bench_cfg(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(bcce::run_trials_serial(setup, 16));
    state.SetItemsProcessed(state.iterations() * 16);
}

void BM_TrialsParallel(benchmark::State& state) {
    const bcce::TrialSetup setup = bcce::make_trial_setup(bench_cfg(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(bcce::run_trials_parallel(setup, 16, 0));
    state.SetItemsProcessed(state.iterations() * 16);
}

void BM_FixedLinkSerial(benchmark::State& state) {
    const bcce::SystemConfig cfg = bench_cfg(10);
    const bcce::CVector w = bcce::CVector::Constant(10, 0.1);
    const bcce::WindowChoice win{};
    for (auto _ : state) benchmark::DoNotOptimize(bcce::fixed_link_eve_sinr_serial(cfg, w, 0, 256, win));
    state.SetItemsProcessed(state.iterations() * 256);
}

void BM_FixedLinkParallel(benchmark::State& state) {
    const bcce::SystemConfig cfg = bench_cfg(10);
    const bcce::CVector w = bcce::CVector::Constant(10, 0.1);
    const bcce::WindowChoice win{};
    for (auto _ : state) benchmark::DoNotOptimize(bcce::fixed_link_eve_sinr_parallel(cfg, w, 0, 256, win, 0));
    state.SetItemsProcessed(state.iterations() * 256);
}

void BM_MeanRateQuadrature(benchmark::State& state) {
    const bcce::SystemConfig cfg = bench_cfg(34);
    for (auto _ : state)
        benchmark::DoNotOptimize(bcce::mean_secrecy_rate(2.284, 0.2319, cfg, bcce::CollusionMode::Colluding));
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Arg(10)->Arg(34)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Arg(10)->Arg(34)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedLinkSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedLinkParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanRateQuadrature)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
