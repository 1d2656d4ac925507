// Copyright 2026 The WS-VQE Authors
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

#include "wsvqe/ansatz.hpp"
#include "wsvqe/clifford.hpp"
#include "wsvqe/experiment.hpp"
#include "wsvqe/optimizer.hpp"
#include "wsvqe/pauli.hpp"
#include "wsvqe/shadows.hpp"

using namespace wsvqe;

namespace {

ProblemInstance bench_instance() {
    ExperimentConfig cfg;
    cfg.master_seed = 7;
    return generate_instance(cfg, 0);
}

void BM_PrepareAnsatz(benchmark::State &state) {
    AnsatzSpec spec;
    Rng rng(1);
    auto params = random_parameters(spec, rng);
    for (auto _ : state) benchmark::DoNotOptimize(prepare_ansatz(spec, params));
}
BENCHMARK(BM_PrepareAnsatz);

void BM_EstimateExpectation(benchmark::State &state) {
    AnsatzSpec spec;
    ProblemInstance inst = bench_instance();
    MeasurementPlan plan = MeasurementPlan::from_matrix(inst.h);
    Rng rng(2);
    auto params = random_parameters(spec, rng);
    StatePreparer prep = [&](std::span<const double> p) { return prepare_ansatz(spec, p); };
    for (auto _ : state) benchmark::DoNotOptimize(estimate_expectation(prep, params, plan, 200, rng));
}
BENCHMARK(BM_EstimateExpectation);

void BM_RandomClifford(benchmark::State &state) {
    Rng rng(3);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(random_clifford(n, rng));
}
BENCHMARK(BM_RandomClifford)->Arg(1)->Arg(3)->Arg(6);

void BM_SynthesizeClifford(benchmark::State &state) {
    Rng rng(4);
    CliffordTableau t = random_clifford(3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(synthesize(t));
}
BENCHMARK(BM_SynthesizeClifford);

void BM_EstimateFidelity(benchmark::State &state) {
    AnsatzSpec spec;
    ProblemInstance inst = bench_instance();
    Rng rng(5);
    auto params = random_parameters(spec, rng);
    auto unitaries = sample_unitaries(3, 400, rng);
    StateVector psi = prepare_ansatz(spec, params);
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_fidelity(take_snapshots(psi, unitaries, rng), inst.approx_vector));
}
BENCHMARK(BM_EstimateFidelity);

void BM_CobylaSphere(benchmark::State &state) {
    for (auto _ : state) {
        OptimizerConfig cfg{0.5, 1e-6, 500};
        auto f = [](std::span<const double> x) {
            double s = 0;
            for (double v : x) s += (v - 0.3) * (v - 0.3);
            return s;
        };
        std::vector<double> x0(18, 0.0);
        benchmark::DoNotOptimize(minimize(f, x0, cfg));
    }
}
BENCHMARK(BM_CobylaSphere);

void BM_VqeRun(benchmark::State &state) {
    AnsatzSpec spec;
    ProblemInstance inst = bench_instance();
    Rng rng(6);
    auto x0 = random_parameters(spec, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_vqe(inst, spec, x0, ShotBudget{}, {kRhobegVqe, 1e-4, 100}, rng));
}
BENCHMARK(BM_VqeRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
