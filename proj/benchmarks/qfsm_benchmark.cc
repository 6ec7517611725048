// Copyright 2026 The qfsm Authors
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


#include <cstdint>
#include <random>

#include "benchmark/benchmark.h"
#include "commands.h"
#include "qfsm/dynamics.h"
#include "qfsm/generators.h"
#include "qfsm/sylvester.h"

namespace {

using namespace qfsm;

RealMatrix random_antisymmetric(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z;
    RealMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = z(rng);
        }
    }
    const RealMatrix g = a - a.transpose();
    return g * (2.0 / g.norm());
}

void BM_integrate_resonant_gaussian(benchmark::State& state) {
    SimulationConfig cfg;
    cfg.dt = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(cfg).final_state());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(10 * state.range(0)));
}
BENCHMARK(BM_integrate_resonant_gaussian)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_integrate_decoupled(benchmark::State& state) {
    SimulationConfig cfg;
    cfg.pulse = PulseProfile::decoupled(cfg.pulse, 0.37);
    cfg.detuning.delta = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(cfg).final_state());
    }
}
BENCHMARK(BM_integrate_decoupled)->Unit(benchmark::kMillisecond);

void BM_sylvester_expm(benchmark::State& state) {
    const RealMatrix g = random_antisymmetric(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sylvester_expm(g).matrix);
    }
}
BENCHMARK(BM_sylvester_expm)->Arg(3)->Arg(8)->Arg(15);

void BM_superevolution_resonant_gaussian(benchmark::State& state) {
    const SimulationConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(superevolution(cfg).matrix);
    }
}
BENCHMARK(BM_superevolution_resonant_gaussian)->Unit(benchmark::kMicrosecond);

void BM_structure_constants(benchmark::State& state) {
    const GeneratorBasis basis = make_basis(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(structure_constants(basis));
    }
}
BENCHMARK(BM_structure_constants)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_sweep_omega0(benchmark::State& state) {
    cli::SweepSpec spec;
    spec.axis = "omega0";
    for (int i = 1; i <= 8; ++i) {
        spec.values.push_back(0.25 * i);
    }
    spec.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cli::run_sweep(spec));
    }
}
BENCHMARK(BM_sweep_omega0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
