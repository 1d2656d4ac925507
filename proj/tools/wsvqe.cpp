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

// Command line front end: gen, run, summarize, landscape, plot.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsvqe/error.hpp"
#include "wsvqe/experiment.hpp"
#include "wsvqe/instance_io.hpp"
#include "wsvqe/landscape.hpp"
#include "wsvqe/plot.hpp"
#include "wsvqe/summary.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

void add_instance_flags(CLI::App &cmd, wsvqe::ExperimentConfig &cfg) {
    cmd.add_option("--count", cfg.instance_count, "Number of instances")->check(CLI::PositiveNumber);
    cmd.add_option("--dim", cfg.matrix_dim, "Matrix dimension (power of two)")->check(CLI::PositiveNumber);
    cmd.add_option("--sparsity", cfg.zero_probability, "Probability that a sampled entry is zero")
        ->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--bound", cfg.entry_bound, "Entries are drawn from [-bound, bound]")->check(CLI::PositiveNumber);
}

void write_output(const std::string &path, const std::string &contents) {
    if (path.empty() || path == "-") {
        std::cout << contents;
        return;
    }
    wsvqe::write_file_atomic(path, contents);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Warm-started VQE experiments on a statevector simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wsvqe::version()));

    wsvqe::ExperimentConfig cfg;
    std::string instances_dir = "instances";

    auto *gen = app.add_subcommand("gen", "Generate random sparse Hermitian instances");
    add_instance_flags(*gen, cfg);
    gen->add_option("--seed", cfg.master_seed, "Master seed")->required();
    gen->add_option("--out", instances_dir, "Output directory");

    std::string run_instances;
    bool no_reuse = false;
    auto *run = app.add_subcommand("run", "Run every strategy on every instance");
    add_instance_flags(*run, cfg);
    run->add_option("--seed", cfg.master_seed, "Master seed")->required();
    run->add_option("--instances", run_instances, "Read instances from this directory instead of generating them")
        ->check(CLI::ExistingDirectory);
    run->add_option("--shots", cfg.budget.n_shots, "Shots per measurement circuit")->check(CLI::PositiveNumber);
    run->add_option("--snaps", cfg.budget.n_snaps, "Snapshots per fidelity estimate")->check(CLI::PositiveNumber);
    run->add_option("--strategies", cfg.strategies, "Subset of strategy labels");
    run->add_option("--acae-evals", cfg.acae_max_evals, "ACAE evaluation cap")->check(CLI::PositiveNumber);
    run->add_option("--vqe-evals", cfg.vqe_max_evals, "VQE evaluation cap")->check(CLI::PositiveNumber);
    run->add_flag("--fresh-cliffords", no_reuse, "Resample the Clifford set at every ACAE evaluation");
    run->add_option("--reps", cfg.reps, "Ansatz repetitions")->check(CLI::NonNegativeNumber);
    run->add_option("--workers", cfg.workers, "Parallel runs")->check(CLI::PositiveNumber);
    std::string run_out = "out";
    run->add_option("--out", run_out, "Output directory");

    std::string summary_dir, summary_out;
    std::size_t first = 20, last = 100;
    auto *summarize = app.add_subcommand("summarize", "Median best-so-far curves over a run directory");
    summarize->add_option("dir", summary_dir, "Directory containing manifest.json")->required();
    summarize->add_option("--out", summary_out, "Output CSV (default stdout)");
    summarize->add_option("--first", first, "First axis iteration");
    summarize->add_option("--last", last, "Last axis iteration");

    std::string land_instance, land_dir, land_out;
    std::optional<double> land_ratio;
    std::size_t axis_i = 0, axis_j = 1;
    std::uint64_t land_seed = 0;
    std::vector<double> frozen;
    wsvqe::LandscapeRequest request;
    auto *land = app.add_subcommand("landscape", "Two-parameter slice of the VQE and ACAE objectives");
    auto *inst_opt = land->add_option("--instance", land_instance, "Instance file")->check(CLI::ExistingFile);
    auto *dir_opt = land->add_option("--instances", land_dir, "Instance directory (use with --ratio)")
                        ->check(CLI::ExistingDirectory);
    land->add_option("--ratio", land_ratio, "Pick the instance whose classical ratio is nearest this value")
        ->needs(dir_opt);
    inst_opt->excludes(dir_opt);
    land->add_option("--axis-i", axis_i, "First parameter index");
    land->add_option("--axis-j", axis_j, "Second parameter index");
    land->add_option("--frozen", frozen, "Full parameter vector; default draws it from [-pi, pi]");
    land->add_option("--step", request.step, "Grid step")->check(CLI::PositiveNumber);
    land->add_option("--shots", request.budget.n_shots, "Shots per measurement circuit")->check(CLI::PositiveNumber);
    land->add_option("--snaps", request.budget.n_snaps, "Snapshots per fidelity estimate")
        ->check(CLI::PositiveNumber);
    land->add_option("--reps", cfg.reps, "Ansatz repetitions")->check(CLI::NonNegativeNumber);
    land->add_option("--seed", land_seed, "Seed");
    land->add_option("--out", land_out, "Output CSV (default stdout)");

    std::string plot_in, plot_out, plot_title;
    auto *plot = app.add_subcommand("plot", "Render a summary or landscape CSV as SVG");
    plot->add_option("csv", plot_in, "Input CSV")->required()->check(CLI::ExistingFile);
    plot->add_option("--out", plot_out, "Output SVG (default stdout)");
    plot->add_option("--title", plot_title, "Chart title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            cfg.validate();
            auto paths = wsvqe::write_instances(cfg, instances_dir);
            std::cerr << "wrote " << paths.size() << " instances to " << instances_dir << "\n";
        } else if (*run) {
            cfg.reuse_unitaries = !no_reuse;
            cfg.output_dir = run_out;
            try {
                cfg.validate();
            } catch (const wsvqe::DomainError &e) {
                std::cerr << "wsvqe run: " << e.what() << "\n";
                return kExitUsage;
            }
            auto instances =
                run_instances.empty() ? wsvqe::generate_instances(cfg) : wsvqe::read_instances(run_instances);
            auto report = wsvqe::run_experiment(cfg, instances);
            std::cerr << "wrote " << report.traces.size() << " traces to " << run_out << "\n";
            for (const auto &f : report.failures) {
                std::cerr << "failed: " << f.strategy << "/" << f.instance << ": " << f.message << "\n";
            }
            if (!report.failures.empty()) return kExitRuntime;
        } else if (*summarize) {
            auto curves = wsvqe::summarize_directory(summary_dir, first, last);
            write_output(summary_out, wsvqe::curves_to_csv(curves));
        } else if (*land) {
            wsvqe::ProblemInstance instance;
            if (!land_instance.empty()) {
                instance = wsvqe::read_instance(land_instance);
            } else if (!land_dir.empty() && land_ratio) {
                auto all = wsvqe::read_instances(land_dir);
                instance = all.at(wsvqe::nearest_by_classical_ratio(all, *land_ratio));
            } else {
                std::cerr << "wsvqe landscape: give --instance, or --instances with --ratio\n";
                return kExitUsage;
            }
            std::cerr << "instance " << instance.id << " (classical ratio " << instance.approx_ratio_classical
                      << ")\n";
            int qubits = 0;
            while ((std::size_t{1} << qubits) < instance.h.rows()) ++qubits;
            request.axis_i = axis_i;
            request.axis_j = axis_j;
            request.frozen = frozen;
            wsvqe::Rng rng(land_seed);
            auto grid = wsvqe::landscape(instance, wsvqe::AnsatzSpec{qubits, cfg.reps}, request, rng);
            write_output(land_out, wsvqe::landscape_to_csv(grid));
        } else if (*plot) {
            write_output(plot_out, wsvqe::render_csv(wsvqe::read_file(plot_in), plot_title));
        }
    } catch (const wsvqe::DomainError &e) {
        std::cerr << "wsvqe: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "wsvqe: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
