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

#ifndef WSVQE_EXPERIMENT_HPP
#define WSVQE_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wsvqe/ansatz.hpp"
#include "wsvqe/pipeline.hpp"

namespace wsvqe {

/// Library version string, recorded in manifests.
const char *version();

struct ExperimentConfig {
    std::size_t instance_count = 50;
    std::size_t matrix_dim = 8;
    double zero_probability = 0.5;
    double entry_bound = 5.0;
    std::uint64_t master_seed = 0;
    ShotBudget budget;
    std::vector<std::string> strategies;  // labels from standard_strategies(); empty selects all
    std::size_t acae_max_evals = 50;
    std::size_t vqe_max_evals = 100;
    bool reuse_unitaries = true;
    int reps = 2;
    std::size_t workers = 1;
    std::filesystem::path output_dir = "out";

    /// Throws DomainError on a violated invariant.
    void validate() const;

    /// The strategies this config selects, in standard order.
    std::vector<Strategy> selected_strategies() const;

    /// FNV-1a over the canonical JSON of every field that affects results
    /// (workers and output_dir excluded), as 16 hex digits.
    std::string hash() const;

    /// Canonical JSON of the result-affecting fields.
    std::string to_json() const;
};

/// Instance `index` of the config's deterministic stream, id "inst_NNNN".
ProblemInstance generate_instance(const ExperimentConfig &cfg, std::size_t index);

std::vector<ProblemInstance> generate_instances(const ExperimentConfig &cfg);

/// Generates and writes <dir>/<id>.json for every instance; returns the paths.
std::vector<std::filesystem::path> write_instances(const ExperimentConfig &cfg, const std::filesystem::path &dir);

/// Loads every *.json in `dir`, sorted by file name.
std::vector<ProblemInstance> read_instances(const std::filesystem::path &dir);

/// Header line of every trace file.
std::string trace_csv_header(std::size_t param_count);

/// Serializes a trace; doubles use 17 significant digits.
std::string trace_to_csv(const RunTrace &trace);

struct RunFailure {
    std::string strategy;
    std::string instance;
    std::string message;
};

struct TraceEntry {
    std::string strategy;
    std::string instance;
    std::string path;  // relative to the output directory
    double f_final = 0.0;
    bool has_f_final = false;
    std::size_t acae_axis_offset = 0;
    std::uint64_t vqe_shots_per_iteration = 0;
    double vqe_rhobeg = 0.0;
};

/// Measurement cost of one instance: Pauli terms and QWC groups.
struct InstanceSummary {
    std::string id;
    std::size_t term_count = 0;
    std::size_t group_count = 0;
    double approx_ratio_classical = 0.0;
};

struct ExperimentReport {
    std::vector<InstanceSummary> instances;
    std::vector<TraceEntry> traces;
    std::vector<RunFailure> failures;
};

/// Seed of one run: independent of worker count and of which strategies are
/// selected.
std::uint64_t run_seed(std::uint64_t master_seed, std::size_t instance_index, std::size_t strategy_index,
                       std::size_t repetition = 0);

/// Runs every (instance, strategy) pair on a pool of cfg.workers threads,
/// writes <out>/traces/<strategy>/<instance>.csv and <out>/manifest.json.
/// A failing run is recorded and the sweep continues.
ExperimentReport run_experiment(const ExperimentConfig &cfg, const std::vector<ProblemInstance> &instances);

std::string manifest_to_json(const ExperimentConfig &cfg, const ExperimentReport &report);

}  // namespace wsvqe

#endif  // WSVQE_EXPERIMENT_HPP
