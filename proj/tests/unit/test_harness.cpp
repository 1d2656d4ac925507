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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <numbers>
#include <random>
#include <set>

#include "json.hpp"
#include "wsvqe/error.hpp"
#include "wsvqe/experiment.hpp"
#include "wsvqe/instance_io.hpp"
#include "wsvqe/landscape.hpp"
#include "wsvqe/plot.hpp"
#include "wsvqe/summary.hpp"

using namespace wsvqe;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("wsvqe_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

ExperimentConfig small_config(const fs::path &out) {
    ExperimentConfig cfg;
    cfg.instance_count = 3;
    cfg.master_seed = 99;
    cfg.acae_max_evals = 6;
    cfg.vqe_max_evals = 25;
    cfg.output_dir = out;
    return cfg;
}

std::vector<TraceRecord> constant_vqe_trace(double ratio, std::size_t first_axis = 1, std::size_t length = 30) {
    std::vector<TraceRecord> out;
    for (std::size_t k = 0; k < length; ++k) {
        TraceRecord r;
        r.phase = Phase::Vqe;
        r.eval_index = k + 1;
        r.axis_iteration = first_axis + k;
        r.cumulative_shots = (k + 1) * 100;
        r.exact_expectation = -ratio;
        r.ratio_exact = ratio;
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST(Generator, MatricesAreExactlyHermitian) {
    Rng rng(101);
    for (int rep = 0; rep < 100; ++rep) EXPECT_EQ(random_sparse_hermitian(8, 0.5, 5.0, rng).hermitian_defect(), 0.0);
}

TEST(Generator, SparsityAndRange) {
    Rng rng(102);
    std::size_t nonzero = 0, slots = 0;
    for (int rep = 0; rep < 500; ++rep) {
        ComplexMatrix h = random_sparse_hermitian(8, 0.5, 5.0, rng);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i; j < 8; ++j) {
                ++slots;
                Complex z = h(i, j);
                if (z != Complex(0)) ++nonzero;
                EXPECT_LE(std::abs(z.real()), 5.0);
                EXPECT_LE(std::abs(z.imag()), 5.0);
                if (i == j) EXPECT_EQ(z.imag(), 0.0);
            }
    }
    double frac = static_cast<double>(nonzero) / static_cast<double>(slots);
    EXPECT_NEAR(frac, 0.5, 3 * std::sqrt(0.25 / static_cast<double>(slots)));
}

TEST(Generator, ClassicalRatioMeanOverFiveHundred) {
    ExperimentConfig cfg;
    cfg.master_seed = 103;
    cfg.instance_count = 500;
    double sum = 0;
    for (const auto &inst : generate_instances(cfg)) sum += inst.approx_ratio_classical;
    double mean = sum / 500.0;
    EXPECT_GE(mean, 0.75);
    EXPECT_LE(mean, 0.95);
}

TEST(InstanceIo, JsonRoundTripIsExact) {
    ExperimentConfig cfg;
    cfg.master_seed = 104;
    ProblemInstance a = generate_instance(cfg, 7);
    std::string text = instance_to_json(a);
    auto doc = nlohmann::json::parse(text);
    for (const char *key : {"id", "n", "h_re", "h_im", "lambda_ref", "v_opt_re", "v_opt_im", "q3_re", "q3_im",
                            "r_classical"}) {
        EXPECT_TRUE(doc.contains(key)) << key;
    }
    ProblemInstance b = instance_from_json(text);
    EXPECT_EQ(b.id, a.id);
    EXPECT_EQ(b.h, a.h);
    EXPECT_EQ(b.reference.value, a.reference.value);
    EXPECT_EQ(b.reference.vector, a.reference.vector);
    EXPECT_EQ(b.approx_vector, a.approx_vector);
    EXPECT_EQ(b.approx_ratio_classical, a.approx_ratio_classical);
    EXPECT_EQ(instance_to_json(b), text);
}

TEST(InstanceIo, Errors) {
    EXPECT_THROW(instance_from_json("{not json"), ParseError);
    EXPECT_THROW(instance_from_json("{\"id\": \"x\"}"), ParseError);
    ExperimentConfig cfg;
    auto doc = nlohmann::json::parse(instance_to_json(generate_instance(cfg, 0)));
    doc["h_re"][0][1] = 42.0;
    EXPECT_THROW(instance_from_json(doc.dump()), DomainError);
    EXPECT_THROW(write_instance("/nonexistent_dir/x/y.json", generate_instance(cfg, 0)), IoError);
    EXPECT_THROW(read_instance("/nonexistent_dir/y.json"), IoError);
}

TEST(Config, HashCoversResultFieldsOnly) {
    ExperimentConfig a;
    ExperimentConfig b = a;
    b.workers = 7;
    b.output_dir = "elsewhere";
    EXPECT_EQ(a.hash(), b.hash());
    b.master_seed = 1;
    EXPECT_NE(a.hash(), b.hash());
    ExperimentConfig c = a;
    c.budget.n_shots = 100;
    EXPECT_NE(a.hash(), c.hash());
    EXPECT_EQ(a.hash().size(), 16u);
}

TEST(Config, Validation) {
    ExperimentConfig cfg;
    cfg.zero_probability = 1.5;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    cfg.instance_count = 0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    cfg.matrix_dim = 6;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    cfg.strategies = {"nope"};
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    EXPECT_NO_THROW(cfg.validate());
}

TEST(TraceCsv, RoundTrip) {
    ExperimentConfig cfg;
    cfg.master_seed = 105;
    ProblemInstance inst = generate_instance(cfg, 0);
    Rng rng(105);
    RunTrace t = run_ws_vqe(inst, AnsatzSpec{}, RhobegVariant::WsDynamic, ShotBudget{}, WarmStartConfig{5, 10, true},
                            rng);
    std::string csv = trace_to_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n') + 1), trace_csv_header(18));
    auto parsed = parse_trace_csv(csv);
    ASSERT_EQ(parsed.size(), t.records.size());
    for (std::size_t k = 0; k < parsed.size(); ++k) {
        const auto &a = parsed[k], &b = t.records[k];
        EXPECT_EQ(a.phase, b.phase);
        EXPECT_EQ(a.eval_index, b.eval_index);
        EXPECT_EQ(a.axis_iteration, b.axis_iteration);
        EXPECT_EQ(a.cumulative_shots, b.cumulative_shots);
        EXPECT_EQ(a.objective, b.objective);
        EXPECT_EQ(a.exact_expectation, b.exact_expectation);
        EXPECT_EQ(a.ratio_objective, b.ratio_objective);
        EXPECT_EQ(a.ratio_exact, b.ratio_exact);
        EXPECT_EQ(a.params, b.params);
    }
}

TEST(TraceCsv, ParseErrorsCarryLineNumbers) {
    std::string header = trace_csv_header(1);
    try {
        parse_trace_csv(header + "VQE,1,1,100,0.5,0.5,0.1,0.1,0.0\nVQE,2,2,200,0.5\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse_trace_csv(header + "VQE,1,1,100,zero,0.5,0.1,0.1,0.0\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_trace_csv("a,b\n"), ParseError);
}

TEST(Summary, SingleTraceIsItsBestSoFar) {
    ExperimentConfig cfg;
    cfg.master_seed = 106;
    ProblemInstance inst = generate_instance(cfg, 0);
    Rng rng(106);
    auto x0 = random_parameters(AnsatzSpec{}, rng);
    RunTrace t = run_vqe(inst, AnsatzSpec{}, x0, ShotBudget{}, {kRhobegVqe, 1e-4, 100}, rng);
    MedianCurves c = summarize({LabeledTrace{"s", "i", t.records}});
    auto curve = best_so_far_curve(t.records);
    for (std::size_t i = 20; i <= 100; ++i) {
        double best = 1e300, ratio = 0;
        for (const auto &r : t.records)
            if (r.axis_iteration <= i && r.exact_expectation < best) {
                best = r.exact_expectation;
                ratio = r.ratio_exact;
            }
        EXPECT_EQ(c.at("s", i), ratio);
        EXPECT_EQ(curve[i - 20], ratio);
    }
}

TEST(Summary, MedianOfConstantTraces) {
    std::vector<LabeledTrace> traces{{"s", "a", constant_vqe_trace(0.2)},
                                     {"s", "b", constant_vqe_trace(0.5)},
                                     {"s", "c", constant_vqe_trace(0.9)}};
    MedianCurves c = summarize(traces);
    for (std::size_t i = 20; i <= 100; ++i) EXPECT_EQ(c.at("s", i), 0.5);
    EXPECT_EQ(median({1.0, 3.0}), 2.0);
    EXPECT_THROW(median({}), DomainError);
}

TEST(Summary, PretrainingPrefixCarriesFirstVqeRatio) {
    auto records = constant_vqe_trace(0.4, 25, 10);
    records[3].exact_expectation = -0.7;
    records[3].ratio_exact = 0.7;
    TraceRecord acae;
    acae.phase = Phase::Acae;
    acae.axis_iteration = 3;
    acae.ratio_exact = 0.99;
    acae.exact_expectation = -0.99;
    records.insert(records.begin(), acae);
    auto curve = best_so_far_curve(records, 20, 40);
    for (std::size_t i = 20; i < 28; ++i) EXPECT_EQ(curve[i - 20], 0.4) << i;
    for (std::size_t i = 28; i <= 40; ++i) EXPECT_EQ(curve[i - 20], 0.7) << i;
}

TEST(Summary, PermutationInvariant) {
    std::mt19937_64 gen(107);
    std::vector<LabeledTrace> traces;
    for (int k = 0; k < 9; ++k) {
        auto r = constant_vqe_trace(0.1 * k, 1, 40);
        for (std::size_t j = 0; j < r.size(); ++j) {
            r[j].exact_expectation -= 0.01 * static_cast<double>(gen() % 50);
            r[j].ratio_exact = -r[j].exact_expectation;
        }
        traces.push_back({k % 2 ? "odd" : "even", std::to_string(k), r});
    }
    std::string reference = curves_to_csv(summarize(traces));
    for (int rep = 0; rep < 10; ++rep) {
        std::shuffle(traces.begin(), traces.end(), gen);
        EXPECT_EQ(curves_to_csv(summarize(traces)), reference);
    }
}

TEST(Experiment, WritesEveryTraceOnceAndIsReproducible) {
    fs::path a = scratch_dir("exp_a"), b = scratch_dir("exp_b");
    ExperimentConfig cfg = small_config(a);
    auto instances = generate_instances(cfg);
    ExperimentReport ra = run_experiment(cfg, instances);
    EXPECT_TRUE(ra.failures.empty());
    ASSERT_EQ(ra.traces.size(), 15u);

    auto manifest = nlohmann::json::parse(read_file(a / "manifest.json"));
    EXPECT_EQ(manifest["config_hash"], cfg.hash());
    ASSERT_EQ(manifest["instances"].size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        MeasurementPlan plan = MeasurementPlan::from_matrix(instances[i].h);
        EXPECT_EQ(manifest["instances"][i]["id"], instances[i].id);
        EXPECT_EQ(manifest["instances"][i]["pauli_terms"], plan.term_count());
        EXPECT_EQ(manifest["instances"][i]["qwc_groups"], plan.circuits_per_evaluation());
    }
    std::set<std::string> paths;
    for (const auto &t : manifest["traces"]) EXPECT_TRUE(paths.insert(t["path"].get<std::string>()).second);
    std::size_t files = 0;
    for (const auto &e : fs::recursive_directory_iterator(a / "traces")) {
        if (!e.is_regular_file()) continue;
        ++files;
        EXPECT_TRUE(paths.count(fs::relative(e.path(), a).generic_string())) << e.path();
    }
    EXPECT_EQ(files, 15u);

    cfg.output_dir = b;
    cfg.workers = 3;
    run_experiment(cfg, instances);
    for (const auto &p : paths) EXPECT_EQ(read_file(a / p), read_file(b / p)) << p;
    EXPECT_EQ(read_file(a / "manifest.json"), read_file(b / "manifest.json"));
}

TEST(Experiment, StrategySubsetReproducesTheSameRuns) {
    fs::path a = scratch_dir("subset_a"), b = scratch_dir("subset_b");
    ExperimentConfig cfg = small_config(a);
    cfg.instance_count = 2;
    auto instances = generate_instances(cfg);
    run_experiment(cfg, instances);
    cfg.output_dir = b;
    cfg.strategies = {"ws_rho_static"};
    ExperimentReport r = run_experiment(cfg, instances);
    ASSERT_EQ(r.traces.size(), 2u);
    for (const auto &t : r.traces) EXPECT_EQ(read_file(a / t.path), read_file(b / t.path));
}

TEST(Experiment, FailuresAreRecordedAndTheSweepContinues) {
    fs::path dir = scratch_dir("failures");
    ExperimentConfig cfg = small_config(dir);
    cfg.instance_count = 2;
    cfg.strategies = {"vqe_rho_vqe"};
    auto instances = generate_instances(cfg);
    ExperimentConfig small = cfg;
    small.matrix_dim = 4;
    instances.push_back(generate_instance(small, 5));
    ExperimentReport r = run_experiment(cfg, instances);
    EXPECT_EQ(r.traces.size(), 2u);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].instance, "inst_0005");
    auto manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
    EXPECT_EQ(manifest["failures"].size(), 1u);
}

TEST(Experiment, SummarizeDirectoryRefusesMixedConfigs) {
    fs::path root = scratch_dir("mixed");
    ExperimentConfig cfg = small_config(root / "one");
    cfg.instance_count = 1;
    cfg.strategies = {"vqe_rho_vqe"};
    run_experiment(cfg, generate_instances(cfg));
    EXPECT_NO_THROW(summarize_directory(root));
    ExperimentConfig other = cfg;
    other.master_seed = 1234;
    other.output_dir = root / "two";
    run_experiment(other, generate_instances(other));
    EXPECT_THROW(summarize_directory(root), DomainError);
    EXPECT_THROW(summarize_directory(scratch_dir("empty")), IoError);
}

TEST(Landscape, GridSide) {
    EXPECT_EQ(grid_side(std::numbers::pi / 20), 41u);
    EXPECT_EQ(grid_side(std::numbers::pi / 2), 5u);
    EXPECT_THROW(grid_side(0.3), DomainError);
    EXPECT_THROW(grid_side(-1), DomainError);
}

TEST(Landscape, SmallGridColumnsAndFrozenParameters) {
    ExperimentConfig cfg;
    cfg.master_seed = 108;
    ProblemInstance inst = generate_instance(cfg, 0);
    LandscapeRequest req;
    req.axis_i = 2;
    req.axis_j = 9;
    req.step = std::numbers::pi / 4;
    Rng rng(108);
    LandscapeGrid g = landscape(inst, AnsatzSpec{}, req, rng);
    ASSERT_EQ(g.points.size(), 81u);
    ASSERT_EQ(g.frozen.size(), 18u);
    for (const auto &p : g.points) {
        auto params = g.frozen;
        params[2] = p.theta_i;
        params[9] = p.theta_j;
        StateVector psi = prepare_ansatz(AnsatzSpec{}, params);
        EXPECT_NEAR(p.fid_opt, fidelity_exact(psi, inst.reference.vector), 1e-15);
        EXPECT_NEAR(p.fid_approx, fidelity_exact(psi, inst.approx_vector), 1e-15);
        EXPECT_GE(p.fid_opt, 0.0);
        EXPECT_LE(p.fid_opt, 1.0);
        EXPECT_GE(p.expectation, -1e3);
    }
    EXPECT_EQ(g.points.front().theta_i, -std::numbers::pi);
    EXPECT_NEAR(g.points.back().theta_j, std::numbers::pi, 1e-12);
    std::string csv = landscape_to_csv(g);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 82);
}

TEST(Landscape, Errors) {
    ExperimentConfig cfg;
    ProblemInstance inst = generate_instance(cfg, 0);
    Rng rng(1);
    LandscapeRequest req;
    req.axis_i = 18;
    EXPECT_THROW(landscape(inst, AnsatzSpec{}, req, rng), DomainError);
    req.axis_i = 3;
    req.axis_j = 3;
    EXPECT_THROW(landscape(inst, AnsatzSpec{}, req, rng), DomainError);
}

TEST(Landscape, NearestByClassicalRatio) {
    std::vector<ProblemInstance> v(3);
    v[0].approx_ratio_classical = 0.5;
    v[1].approx_ratio_classical = 0.97;
    v[2].approx_ratio_classical = 0.8;
    EXPECT_EQ(nearest_by_classical_ratio(v, 0.99), 1u);
    EXPECT_EQ(nearest_by_classical_ratio(v, 0.76), 2u);
}

TEST(Plot, LineChartPolylinesAndErrors) {
    EXPECT_THROW(line_chart_svg({}), DomainError);
    EXPECT_THROW(line_chart_svg({Series{"a", {}, {}}}), DomainError);
    std::vector<Series> s{{"a", {20, 21}, {0.3, 0.4}}, {"b", {20, 21}, {0.5, 0.45}}, {"c", {20, 21}, {0.1, 0.2}}};
    std::string svg = line_chart_svg(s, ChartLabels{"t"});
    std::size_t polylines = 0;
    for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
    EXPECT_EQ(polylines, 3u);
    EXPECT_EQ(svg, line_chart_svg(s, ChartLabels{"t"}));
}

TEST(Plot, CsvParsingErrors) {
    try {
        parse_numeric_csv("x,y\n1,2\n3\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse_numeric_csv("x,y\n1,2\n3,abc\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_numeric_csv(""), ParseError);
}

TEST(Plot, HeatmapHasFourAnnotatedPanels) {
    ExperimentConfig cfg;
    ProblemInstance inst = generate_instance(cfg, 0);
    LandscapeRequest req;
    req.step = std::numbers::pi / 2;
    Rng rng(109);
    std::string csv = landscape_to_csv(landscape(inst, AnsatzSpec{}, req, rng));
    std::string svg = render_csv(csv, "slice");
    auto count = [&](const std::string &needle) {
        std::size_t n = 0;
        for (std::size_t p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) ++n;
        return n;
    };
    EXPECT_EQ(count("<g>"), 4u);
    EXPECT_EQ(count("class=\"cbar-min\""), 4u);
    EXPECT_EQ(count("class=\"cbar-max\""), 4u);
    EXPECT_EQ(svg, render_csv(csv, "slice"));
    EXPECT_THROW(render_csv("theta_i,theta_j,expectation,est_fidelity,fid_approx,fid_opt\n0,0,0,0,0,0\n1,1,1,1,1,1\n"),
                 ParseError);
}
