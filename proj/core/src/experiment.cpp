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

#include "wsvqe/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cinttypes>
#include <cstdio>
#include <optional>
#include <thread>

#include "json.hpp"
#include "wsvqe/error.hpp"
#include "wsvqe/instance_io.hpp"

#ifndef WSVQE_VERSION
#define WSVQE_VERSION "0.0.0"
#endif

namespace wsvqe {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kGenStream = 0x67656e;
constexpr std::uint64_t kRunStream = 0x72756e;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string instance_id(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "inst_%04zu", index);
    return buf;
}

json config_json(const ExperimentConfig &cfg) {
    json strategies = json::array();
    for (const Strategy &s : cfg.selected_strategies()) strategies.push_back(s.label);
    json j;
    j["instance_count"] = cfg.instance_count;
    j["matrix_dim"] = cfg.matrix_dim;
    j["zero_probability"] = cfg.zero_probability;
    j["entry_bound"] = cfg.entry_bound;
    j["master_seed"] = cfg.master_seed;
    j["n_shots"] = cfg.budget.n_shots;
    j["n_snaps"] = cfg.budget.n_snaps;
    j["strategies"] = std::move(strategies);
    j["acae_max_evals"] = cfg.acae_max_evals;
    j["vqe_max_evals"] = cfg.vqe_max_evals;
    j["reuse_unitaries"] = cfg.reuse_unitaries;
    j["reps"] = cfg.reps;
    return j;
}

}  // namespace

const char *version() { return WSVQE_VERSION; }

void ExperimentConfig::validate() const {
    if (instance_count < 1) throw DomainError("config: instance count must be at least 1");
    if (matrix_dim < 2 || (matrix_dim & (matrix_dim - 1)) != 0) {
        throw DomainError("config: matrix dimension must be a power of two >= 2");
    }
    if (!(zero_probability >= 0.0 && zero_probability <= 1.0)) {
        throw DomainError("config: sparsity must lie in [0, 1]");
    }
    if (!(entry_bound > 0.0)) throw DomainError("config: entry bound must be positive");
    if (budget.n_shots < 1 || budget.n_snaps < 1) throw DomainError("config: shot budgets must be at least 1");
    if (acae_max_evals < 1 || vqe_max_evals < 1) throw DomainError("config: evaluation caps must be at least 1");
    if (reps < 0) throw DomainError("config: reps must be non-negative");
    if (workers < 1) throw DomainError("config: at least one worker is required");
    selected_strategies();
}

std::vector<Strategy> ExperimentConfig::selected_strategies() const {
    std::vector<Strategy> all = standard_strategies();
    if (strategies.empty()) return all;
    for (const std::string &label : strategies) {
        if (std::none_of(all.begin(), all.end(), [&](const Strategy &s) { return s.label == label; })) {
            throw DomainError("config: unknown strategy '" + label + "'");
        }
    }
    std::vector<Strategy> out;
    for (const Strategy &s : all) {
        if (std::find(strategies.begin(), strategies.end(), s.label) != strategies.end()) out.push_back(s);
    }
    return out;
}

std::string ExperimentConfig::to_json() const { return config_json(*this).dump(); }

std::string ExperimentConfig::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

ProblemInstance generate_instance(const ExperimentConfig &cfg, std::size_t index) {
    Rng rng(mix_seed({cfg.master_seed, kGenStream, index}));
    ComplexMatrix h = random_sparse_hermitian(cfg.matrix_dim, cfg.zero_probability, cfg.entry_bound, rng);
    return make_instance(instance_id(index), std::move(h), rng);
}

std::vector<ProblemInstance> generate_instances(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<ProblemInstance> out;
    out.reserve(cfg.instance_count);
    for (std::size_t k = 0; k < cfg.instance_count; ++k) out.push_back(generate_instance(cfg, k));
    return out;
}

std::vector<std::filesystem::path> write_instances(const ExperimentConfig &cfg, const std::filesystem::path &dir) {
    cfg.validate();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string());
    std::vector<std::filesystem::path> paths;
    for (std::size_t k = 0; k < cfg.instance_count; ++k) {
        ProblemInstance inst = generate_instance(cfg, k);
        auto path = dir / (inst.id + ".json");
        write_instance(path, inst);
        paths.push_back(path);
    }
    return paths;
}

std::vector<ProblemInstance> read_instances(const std::filesystem::path &dir) {
    if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<ProblemInstance> out;
    for (const auto &f : files) out.push_back(read_instance(f));
    return out;
}

std::string trace_csv_header(std::size_t param_count) {
    std::string line =
        "phase,eval_index,axis_iteration,cumulative_shots,objective,exact_expectation,ratio_objective,ratio_exact";
    for (std::size_t k = 0; k < param_count; ++k) line += ",theta_" + std::to_string(k);
    return line + "\n";
}

std::string trace_to_csv(const RunTrace &trace) {
    std::size_t params = trace.records.empty() ? 0 : trace.records.front().params.size();
    std::string out = trace_csv_header(params);
    for (const TraceRecord &r : trace.records) {
        out += to_string(r.phase);
        out += ',' + std::to_string(r.eval_index);
        out += ',' + std::to_string(r.axis_iteration);
        out += ',' + std::to_string(r.cumulative_shots);
        out += ',' + format_double(r.objective);
        out += ',' + format_double(r.exact_expectation);
        out += ',';
        if (r.ratio_objective) out += format_double(*r.ratio_objective);
        out += ',' + format_double(r.ratio_exact);
        for (double p : r.params) out += ',' + format_double(p);
        out += '\n';
    }
    return out;
}

std::uint64_t run_seed(std::uint64_t master_seed, std::size_t instance_index, std::size_t strategy_index,
                       std::size_t repetition) {
    return mix_seed({master_seed, kRunStream, instance_index, strategy_index, repetition});
}

ExperimentReport run_experiment(const ExperimentConfig &cfg, const std::vector<ProblemInstance> &instances) {
    cfg.validate();
    if (instances.empty()) throw DomainError("run_experiment: no instances");
    const std::vector<Strategy> all = standard_strategies();
    const std::vector<Strategy> selected = cfg.selected_strategies();
    std::vector<std::size_t> strategy_index;
    for (const Strategy &s : selected) {
        auto it = std::find_if(all.begin(), all.end(), [&](const Strategy &a) { return a.label == s.label; });
        strategy_index.push_back(static_cast<std::size_t>(it - all.begin()));
    }

    const auto &out_dir = cfg.output_dir;
    std::error_code ec;
    for (const Strategy &s : selected) {
        std::filesystem::create_directories(out_dir / "traces" / s.label, ec);
        if (ec) throw IoError("cannot create " + (out_dir / "traces" / s.label).string());
    }

    const AnsatzSpec spec{static_cast<int>(std::countr_zero(cfg.matrix_dim)), cfg.reps};
    const WarmStartConfig ws{cfg.acae_max_evals, cfg.vqe_max_evals, cfg.reuse_unitaries};
    const std::size_t jobs = instances.size() * selected.size();

    struct Slot {
        std::optional<TraceEntry> entry;
        std::optional<RunFailure> failure;
    };
    std::vector<Slot> slots(jobs);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t job = next.fetch_add(1); job < jobs; job = next.fetch_add(1)) {
            const std::size_t i = job / selected.size();
            const std::size_t s = job % selected.size();
            const ProblemInstance &inst = instances[i];
            const Strategy &strategy = selected[s];
            try {
                Rng rng(run_seed(cfg.master_seed, i, strategy_index[s]));
                RunTrace trace = run_strategy(inst, spec, strategy, cfg.budget, ws, rng);
                std::string rel = "traces/" + strategy.label + "/" + inst.id + ".csv";
                write_file_atomic(out_dir / rel, trace_to_csv(trace));
                TraceEntry e;
                e.strategy = strategy.label;
                e.instance = inst.id;
                e.path = rel;
                e.has_f_final = trace.f_final.has_value();
                e.f_final = trace.f_final.value_or(0.0);
                e.acae_axis_offset = trace.acae_axis_offset;
                e.vqe_shots_per_iteration = trace.vqe_shots_per_iteration;
                e.vqe_rhobeg = trace.vqe_rhobeg;
                slots[job].entry = std::move(e);
            } catch (const std::exception &ex) {
                slots[job].failure = RunFailure{strategy.label, inst.id, ex.what()};
            }
        }
    };

    const std::size_t width = std::min(cfg.workers, jobs);
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < width; ++w) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();

    ExperimentReport report;
    for (const ProblemInstance &inst : instances) {
        InstanceSummary summary{inst.id, 0, 0, inst.approx_ratio_classical};
        try {
            MeasurementPlan plan = MeasurementPlan::from_matrix(inst.h);
            summary.term_count = plan.term_count();
            summary.group_count = plan.circuits_per_evaluation();
        } catch (const DomainError &) {
            // The runs on this instance already recorded the failure.
        }
        report.instances.push_back(std::move(summary));
    }
    for (auto &slot : slots) {
        if (slot.entry) report.traces.push_back(std::move(*slot.entry));
        if (slot.failure) report.failures.push_back(std::move(*slot.failure));
    }
    write_file_atomic(out_dir / "manifest.json", manifest_to_json(cfg, report));
    return report;
}

std::string manifest_to_json(const ExperimentConfig &cfg, const ExperimentReport &report) {
    json traces = json::array();
    for (const TraceEntry &e : report.traces) {
        json t;
        t["strategy"] = e.strategy;
        t["instance"] = e.instance;
        t["path"] = e.path;
        t["f_final"] = e.has_f_final ? json(e.f_final) : json(nullptr);
        t["acae_axis_offset"] = e.acae_axis_offset;
        t["vqe_shots_per_iteration"] = e.vqe_shots_per_iteration;
        t["vqe_rhobeg"] = e.vqe_rhobeg;
        traces.push_back(std::move(t));
    }
    json instances = json::array();
    for (const InstanceSummary &i : report.instances) {
        json t;
        t["id"] = i.id;
        t["pauli_terms"] = i.term_count;
        t["qwc_groups"] = i.group_count;
        t["r_classical"] = i.approx_ratio_classical;
        instances.push_back(std::move(t));
    }
    json failures = json::array();
    for (const RunFailure &f : report.failures) {
        failures.push_back({{"strategy", f.strategy}, {"instance", f.instance}, {"message", f.message}});
    }
    json doc;
    doc["format"] = "wsvqe-manifest/1";
    doc["version"] = version();
    doc["config_hash"] = cfg.hash();
    doc["config"] = config_json(cfg);
    doc["master_seed"] = cfg.master_seed;
    doc["instances"] = std::move(instances);
    doc["traces"] = std::move(traces);
    doc["failures"] = std::move(failures);
    return doc.dump(1) + "\n";
}

}  // namespace wsvqe
