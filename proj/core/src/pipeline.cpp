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

#include "wsvqe/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "wsvqe/error.hpp"
#include "wsvqe/shadows.hpp"

namespace wsvqe {

ProblemInstance make_instance(std::string id, ComplexMatrix h, Rng &rng, int power_iterations) {
    ProblemInstance inst;
    inst.id = std::move(id);
    inst.reference = eig_hermitian_min(h);
    inst.approx_vector = approximate_min_eigenvector(h, rng, power_iterations);
    inst.approx_ratio_classical =
        approximation_ratio(rayleigh_quotient(h, inst.approx_vector), inst.reference.value);
    inst.h = std::move(h);
    return inst;
}

double approximation_ratio(double value, double lambda_ref) { return value / lambda_ref; }

std::string to_string(Phase phase) { return phase == Phase::Acae ? "ACAE" : "VQE"; }

std::string to_string(RhobegVariant variant) {
    switch (variant) {
        case RhobegVariant::VqeBase:
            return "rho_vqe";
        case RhobegVariant::AcaeBase:
            return "rho_acae";
        case RhobegVariant::WsStatic:
            return "rho_static";
        case RhobegVariant::WsDynamic:
            return "rho_dynamic";
    }
    return "?";
}

double dynamic_rhobeg(double f_final) {
    double f = std::clamp(f_final, kFidelityClampLow, kFidelityClampHigh);
    return (1.0 / f) * 0.25 * kRhobegVqe;
}

double resolve_rhobeg(RhobegVariant variant, std::optional<double> f_final) {
    switch (variant) {
        case RhobegVariant::VqeBase:
            return kRhobegVqe;
        case RhobegVariant::AcaeBase:
            return kRhobegAcae;
        case RhobegVariant::WsStatic:
            return kRhobegWsStatic;
        case RhobegVariant::WsDynamic:
            if (!f_final) {
                throw DomainError("resolve_rhobeg: the dynamic variant needs a final ACAE fidelity");
            }
            return dynamic_rhobeg(*f_final);
    }
    throw DomainError("resolve_rhobeg: unknown variant");
}

std::size_t rescale_iterations(std::uint64_t acae_total_shots, std::uint64_t vqe_shots_per_iteration) {
    if (vqe_shots_per_iteration < 1) {
        throw DomainError("rescale_iterations: VQE shots per iteration must be positive");
    }
    return static_cast<std::size_t>((acae_total_shots + vqe_shots_per_iteration - 1) / vqe_shots_per_iteration);
}

RunTrace run_vqe(const ProblemInstance &instance, const AnsatzSpec &spec, std::span<const double> x0,
                 const ShotBudget &budget, const OptimizerConfig &cfg, Rng &rng) {
    if (x0.size() != spec.parameter_count()) {
        throw DomainError("run_vqe: initial parameters do not match the ansatz");
    }
    if (budget.n_shots < 1) {
        throw DomainError("run_vqe: n_shots must be positive");
    }
    const MeasurementPlan plan = MeasurementPlan::from_matrix(instance.h);
    const double lambda_ref = instance.reference.value;

    RunTrace trace;
    trace.vqe_shots_per_iteration = plan.circuits_per_evaluation() * budget.n_shots;
    trace.vqe_rhobeg = cfg.rhobeg;
    std::uint64_t shots = 0;

    auto objective = [&](std::span<const double> params) {
        StateVector psi = prepare_ansatz(spec, params);
        ExpectationEstimate est = estimate_expectation(psi, plan, budget.n_shots, rng);
        shots += est.total_shots;
        TraceRecord rec;
        rec.phase = Phase::Vqe;
        rec.eval_index = trace.records.size() + 1;
        rec.axis_iteration = rec.eval_index;
        rec.cumulative_shots = shots;
        rec.objective = est.value;
        rec.exact_expectation = exact_expectation(psi, instance.h);
        rec.ratio_objective = approximation_ratio(est.value, lambda_ref);
        rec.ratio_exact = approximation_ratio(rec.exact_expectation, lambda_ref);
        rec.params.assign(params.begin(), params.end());
        trace.records.push_back(std::move(rec));
        return est.value;
    };

    if (cfg.max_evals == 0) {
        objective(x0);
    } else {
        minimize(objective, x0, cfg);
    }
    return trace;
}

AcaeResult run_acae(std::span<const Complex> target, const AnsatzSpec &spec, std::span<const double> x0,
                    const ShotBudget &budget, const OptimizerConfig &cfg, bool reuse_unitaries, Rng &rng,
                    const ProblemInstance *instance) {
    if (std::abs(norm2(target) - 1.0) > kStructuralTolerance * 100) {
        throw DomainError("run_acae: target is not unit norm");
    }
    if (target.size() != (std::size_t{1} << spec.n_qubits)) {
        throw DomainError("run_acae: target dimension does not match the ansatz");
    }
    if (budget.n_snaps < 1) {
        throw DomainError("run_acae: n_snaps must be positive");
    }
    std::vector<UnitaryHandle> unitaries;
    if (reuse_unitaries) {
        unitaries = sample_unitaries(spec.n_qubits, budget.n_snaps, rng);
    }

    AcaeResult result;
    std::uint64_t shots = 0;
    auto objective = [&](std::span<const double> params) {
        if (!reuse_unitaries) {
            unitaries = sample_unitaries(spec.n_qubits, budget.n_snaps, rng);
        }
        StateVector psi = prepare_ansatz(spec, params);
        ShadowSet shadow = take_snapshots(psi, unitaries, rng);
        double fhat = estimate_fidelity(shadow, target);
        shots += shadow.snapshots.size();
        TraceRecord rec;
        rec.phase = Phase::Acae;
        rec.eval_index = result.trace.records.size() + 1;
        rec.axis_iteration = rec.eval_index;
        rec.cumulative_shots = shots;
        rec.objective = fhat;
        if (instance != nullptr) {
            rec.exact_expectation = exact_expectation(psi, instance->h);
            rec.ratio_exact = approximation_ratio(rec.exact_expectation, instance->reference.value);
        }
        rec.params.assign(params.begin(), params.end());
        result.trace.records.push_back(std::move(rec));
        return -fhat;
    };

    OptimizationResult opt = minimize(objective, x0, cfg);
    result.params = opt.best_params;
    result.f_final = -opt.best_value;
    result.trace.f_final = result.f_final;
    return result;
}

RunTrace run_ws_vqe(const ProblemInstance &instance, const AnsatzSpec &spec, RhobegVariant variant,
                    const ShotBudget &budget, const WarmStartConfig &config, Rng &rng) {
    if (variant == RhobegVariant::AcaeBase) {
        throw DomainError("run_ws_vqe: rho_acae is not a VQE-phase variant");
    }
    std::vector<double> x0 = random_parameters(spec, rng);
    OptimizerConfig acae_cfg{kRhobegAcae, 1e-4, config.acae_max_evals};
    AcaeResult acae = run_acae(instance.approx_vector, spec, x0, budget, acae_cfg, config.reuse_unitaries, rng,
                               &instance);

    OptimizerConfig vqe_cfg{resolve_rhobeg(variant, acae.f_final), 1e-4, config.vqe_max_evals};
    RunTrace vqe = run_vqe(instance, spec, acae.params, budget, vqe_cfg, rng);

    const std::uint64_t per_iteration = std::max<std::uint64_t>(vqe.vqe_shots_per_iteration, 1);
    const std::uint64_t acae_shots =
        acae.trace.records.empty() ? 0 : acae.trace.records.back().cumulative_shots;

    RunTrace out;
    out.f_final = acae.f_final;
    out.vqe_shots_per_iteration = vqe.vqe_shots_per_iteration;
    out.vqe_rhobeg = vqe_cfg.rhobeg;
    out.acae_axis_offset = rescale_iterations(acae_shots, per_iteration);
    out.records.reserve(acae.trace.records.size() + vqe.records.size());
    for (auto &rec : acae.trace.records) {
        rec.axis_iteration = rescale_iterations(rec.cumulative_shots, per_iteration);
        out.records.push_back(std::move(rec));
    }
    for (auto &rec : vqe.records) {
        rec.axis_iteration += out.acae_axis_offset;
        rec.cumulative_shots += acae_shots;
        out.records.push_back(std::move(rec));
    }
    return out;
}

std::vector<Strategy> standard_strategies() {
    return {
        {"vqe_rho_vqe", false, RhobegVariant::VqeBase},
        {"vqe_rho_static", false, RhobegVariant::WsStatic},
        {"ws_rho_vqe", true, RhobegVariant::VqeBase},
        {"ws_rho_static", true, RhobegVariant::WsStatic},
        {"ws_rho_dynamic", true, RhobegVariant::WsDynamic},
    };
}

RunTrace run_strategy(const ProblemInstance &instance, const AnsatzSpec &spec, const Strategy &strategy,
                      const ShotBudget &budget, const WarmStartConfig &config, Rng &rng) {
    if (strategy.warm_start) {
        return run_ws_vqe(instance, spec, strategy.rhobeg, budget, config, rng);
    }
    if (strategy.rhobeg == RhobegVariant::WsDynamic) {
        throw DomainError("run_strategy: the dynamic rhobeg needs a warm start");
    }
    std::vector<double> x0 = random_parameters(spec, rng);
    OptimizerConfig cfg{resolve_rhobeg(strategy.rhobeg), 1e-4, config.vqe_max_evals};
    return run_vqe(instance, spec, x0, budget, cfg, rng);
}

}  // namespace wsvqe
