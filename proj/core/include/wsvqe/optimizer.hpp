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

#ifndef WSVQE_OPTIMIZER_HPP
#define WSVQE_OPTIMIZER_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wsvqe {

struct OptimizerConfig {
    double rhobeg = 0.0;   // initial trust-region radius (radians)
    double rhoend = 1e-4;  // final radius
    std::size_t max_evals = 100;
};

enum class OptimizerStatus {
    Converged,      // rho reached rhoend
    MaxEvaluations,
    Roundoff,       // simplex inverse lost accuracy
};

struct Evaluation {
    std::vector<double> params;
    double value = 0.0;
};

struct OptimizationResult {
    std::vector<double> best_params;
    double best_value = 0.0;
    std::size_t evaluations = 0;
    std::vector<Evaluation> trace;
    OptimizerStatus status = OptimizerStatus::Converged;
};

using Objective = std::function<double(std::span<const double>)>;

/// Powell's COBYLA without constraints.
///
/// A linear model is interpolated on a simplex of n + 1 points whose initial
/// edges have length rhobeg along the coordinate axes. Each iteration either
/// takes the trust-region step of length rho along the model's steepest
/// descent or repairs the simplex geometry; rho is halved down to rhoend when
/// neither makes progress. Every objective call is recorded in the trace.
///
/// Throws DomainError for an invalid config and NonFiniteObjectiveError if
/// the objective returns NaN or infinity.
OptimizationResult minimize(const Objective &objective, std::span<const double> x0, const OptimizerConfig &cfg);

}  // namespace wsvqe

#endif  // WSVQE_OPTIMIZER_HPP
