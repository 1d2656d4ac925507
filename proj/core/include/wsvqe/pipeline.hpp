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

#ifndef WSVQE_PIPELINE_HPP
#define WSVQE_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsvqe/ansatz.hpp"
#include "wsvqe/numerics.hpp"
#include "wsvqe/optimizer.hpp"
#include "wsvqe/pauli.hpp"
#include "wsvqe/rng.hpp"

namespace wsvqe {

/// A Hermitian problem with its exact reference and classical approximation.
struct ProblemInstance {
    std::string id;
    ComplexMatrix h;
    EigenPair reference;            // lambda_ref and v_opt
    ComplexVector approx_vector;    // q_(3)
    double approx_ratio_classical = 0.0;
};

/// Computes the exact reference pair, q_(k) via Gershgorin + inverse
/// iteration, and its approximation ratio.
ProblemInstance make_instance(std::string id, ComplexMatrix h, Rng &rng, int power_iterations = 3);

/// lambda / lambda_ref.
double approximation_ratio(double value, double lambda_ref);

struct ShotBudget {
    std::uint64_t n_shots = 200;  // per measurement circuit
    std::uint64_t n_snaps = 400;  // single-shot snapshots per fidelity estimate
};

enum class Phase { Acae, Vqe };

std::string to_string(Phase phase);

struct TraceRecord {
    Phase phase = Phase::Vqe;
    std::size_t eval_index = 0;      // 1-based within the phase
    std::size_t axis_iteration = 0;  // VQE-equivalent iteration on the report axis
    std::uint64_t cumulative_shots = 0;
    double objective = 0.0;          // QEE estimate (VQE) or estimated fidelity (ACAE)
    double exact_expectation = 0.0;  // noise-free <H> at params
    std::optional<double> ratio_objective;  // VQE records only
    double ratio_exact = 0.0;
    std::vector<double> params;
};

struct RunTrace {
    std::vector<TraceRecord> records;
    std::optional<double> f_final;
    std::size_t acae_axis_offset = 0;  // axis iterations charged to pretraining
    std::uint64_t vqe_shots_per_iteration = 0;
    double vqe_rhobeg = 0.0;
};

inline constexpr double kRhobegVqe = 3.0 * std::numbers::pi / 8.0;
inline constexpr double kRhobegAcae = std::numbers::pi / 4.0;
inline constexpr double kRhobegWsStatic = kRhobegVqe / 2.0;
inline constexpr double kFidelityClampLow = 0.125;
inline constexpr double kFidelityClampHigh = 1.0;

enum class RhobegVariant { VqeBase, AcaeBase, WsStatic, WsDynamic };

std::string to_string(RhobegVariant variant);

/// (1 / clamp(f_final, 0.125, 1)) * (1/4) * rho_VQE, in [3pi/32, 3pi/4].
double dynamic_rhobeg(double f_final);

/// WsDynamic requires f_final.
double resolve_rhobeg(RhobegVariant variant, std::optional<double> f_final = std::nullopt);

/// Smallest number of VQE iterations whose shots cover the ACAE shot total.
std::size_t rescale_iterations(std::uint64_t acae_total_shots, std::uint64_t vqe_shots_per_iteration);

/// Shot-based VQE. cfg.max_evals == 0 evaluates x0 once and stops.
RunTrace run_vqe(const ProblemInstance &instance, const AnsatzSpec &spec, std::span<const double> x0,
                 const ShotBudget &budget, const OptimizerConfig &cfg, Rng &rng);

struct AcaeResult {
    std::vector<double> params;
    double f_final = 0.0;
    RunTrace trace;
};

/// Maximizes the shadow fidelity estimate to `target`. With reuse_unitaries
/// the n_snaps Cliffords are drawn once; otherwise fresh per evaluation.
/// f_final is the estimate recorded at the returned params. Exact columns
/// are filled when `instance` is given.
AcaeResult run_acae(std::span<const Complex> target, const AnsatzSpec &spec, std::span<const double> x0,
                    const ShotBudget &budget, const OptimizerConfig &cfg, bool reuse_unitaries, Rng &rng,
                    const ProblemInstance *instance = nullptr);

struct WarmStartConfig {
    std::size_t acae_max_evals = 50;
    std::size_t vqe_max_evals = 100;
    bool reuse_unitaries = true;
};

/// ACAE pretraining toward instance.approx_vector from random parameters,
/// then VQE from the pretrained parameters with rhobeg from `variant`.
RunTrace run_ws_vqe(const ProblemInstance &instance, const AnsatzSpec &spec, RhobegVariant variant,
                    const ShotBudget &budget, const WarmStartConfig &config, Rng &rng);

/// One experiment arm: cold or warm start with a rhobeg choice.
struct Strategy {
    std::string label;
    bool warm_start = false;
    RhobegVariant rhobeg = RhobegVariant::VqeBase;
};

/// VQE/rho_VQE, VQE/rho_static, WS/rho_VQE, WS/rho_static, WS/rho_dynamic.
std::vector<Strategy> standard_strategies();

/// Cold strategies draw x0 from rng and run plain VQE; warm ones run
/// run_ws_vqe.
RunTrace run_strategy(const ProblemInstance &instance, const AnsatzSpec &spec, const Strategy &strategy,
                      const ShotBudget &budget, const WarmStartConfig &config, Rng &rng);

}  // namespace wsvqe

#endif  // WSVQE_PIPELINE_HPP
