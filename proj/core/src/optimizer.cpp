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

#include "wsvqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wsvqe/error.hpp"

namespace wsvqe {

namespace {

// Powell's constants.
constexpr double kAlpha = 0.25;  // sigma acceptability
constexpr double kBeta = 2.1;    // eta acceptability
constexpr double kGamma = 0.5;   // geometry step scale
constexpr double kDelta = 1.1;   // edge length factor

class Cobyla {
   public:
    Cobyla(const Objective &objective, std::span<const double> x0, const OptimizerConfig &cfg)
        : objective_(objective),
          cfg_(cfg),
          n_(x0.size()),
          x_(x0.begin(), x0.end()),
          pole_(x0.begin(), x0.end()),
          sim_(n_ * n_, 0.0),
          simi_(n_ * n_, 0.0),
          fval_(n_ + 1, 0.0),
          grad_(n_, 0.0),
          vsig_(n_, 0.0),
          veta_(n_, 0.0),
          sigbar_(n_, 0.0),
          dx_(n_, 0.0) {}

    OptimizationResult run();

   private:
    double &sim(std::size_t r, std::size_t c) { return sim_[r * n_ + c]; }
    double &simi(std::size_t r, std::size_t c) { return simi_[r * n_ + c]; }

    bool evaluate(double &f);
    void replace_vertex(std::size_t jdrop);

    const Objective &objective_;
    OptimizerConfig cfg_;
    std::size_t n_;
    std::vector<double> x_;
    std::vector<double> pole_;  // best vertex
    std::vector<double> sim_;   // column j: vertex j minus pole
    std::vector<double> simi_;  // inverse of sim
    std::vector<double> fval_;  // f at vertices; index n is the pole
    std::vector<double> grad_;
    std::vector<double> vsig_;
    std::vector<double> veta_;
    std::vector<double> sigbar_;
    std::vector<double> dx_;
    OptimizationResult result_;
};

bool Cobyla::evaluate(double &f) {
    if (result_.evaluations >= cfg_.max_evals) {
        return false;
    }
    f = objective_(x_);
    if (!std::isfinite(f)) {
        std::ostringstream msg;
        msg << "objective returned " << f << " at params [";
        for (std::size_t i = 0; i < n_; i++) {
            msg << (i ? ", " : "") << x_[i];
        }
        msg << "]";
        throw NonFiniteObjectiveError(msg.str(), x_);
    }
    result_.evaluations++;
    result_.trace.push_back({x_, f});
    return true;
}

/// Makes pole + dx the new vertex jdrop and updates the inverse simplex.
void Cobyla::replace_vertex(std::size_t jdrop) {
    double temp = 0.0;
    for (std::size_t i = 0; i < n_; i++) {
        sim(i, jdrop) = dx_[i];
        temp += simi(jdrop, i) * dx_[i];
    }
    for (std::size_t i = 0; i < n_; i++) {
        simi(jdrop, i) /= temp;
    }
    for (std::size_t j = 0; j < n_; j++) {
        if (j == jdrop) {
            continue;
        }
        temp = 0.0;
        for (std::size_t i = 0; i < n_; i++) {
            temp += simi(j, i) * dx_[i];
        }
        for (std::size_t i = 0; i < n_; i++) {
            simi(j, i) -= temp * simi(jdrop, i);
        }
    }
}

OptimizationResult Cobyla::run() {
    double rho = cfg_.rhobeg;
    for (std::size_t i = 0; i < n_; i++) {
        sim(i, i) = rho;
        simi(i, i) = 1.0 / rho;
    }

    // Initial simplex: x0, then x0 + rho e_j, moving the pole whenever a new
    // vertex improves on it.
    double f = 0.0;
    std::size_t jdrop = n_;
    while (true) {
        if (!evaluate(f)) {
            result_.status = OptimizerStatus::MaxEvaluations;
            return std::move(result_);
        }
        fval_[jdrop] = f;
        if (jdrop < n_) {
            if (fval_[n_] <= f) {
                x_[jdrop] = pole_[jdrop];
            } else {
                pole_[jdrop] = x_[jdrop];
                fval_[jdrop] = fval_[n_];
                fval_[n_] = f;
                for (std::size_t k = 0; k <= jdrop; k++) {
                    sim(jdrop, k) = -rho;
                    double temp = 0.0;
                    for (std::size_t i = k; i <= jdrop; i++) {
                        temp -= simi(i, k);
                    }
                    simi(jdrop, k) = temp;
                }
            }
        }
        if (result_.evaluations <= n_) {
            jdrop = result_.evaluations - 1;
            x_[jdrop] += rho;
            continue;
        }
        break;
    }

    bool ibrnch = true;
    bool iflag = true;
    double parsig = 0.0;
    double prerem = 0.0;

    enum class Next { Iterate, ReduceRho };
    Next next = Next::Iterate;

    while (true) {
        if (next == Next::Iterate) {
            // Move the best vertex into pole position.
            std::size_t nbest = n_;
            double phimin = fval_[n_];
            for (std::size_t j = 0; j < n_; j++) {
                if (fval_[j] < phimin) {
                    nbest = j;
                    phimin = fval_[j];
                }
            }
            if (nbest < n_) {
                std::swap(fval_[n_], fval_[nbest]);
                for (std::size_t i = 0; i < n_; i++) {
                    double temp = sim(i, nbest);
                    sim(i, nbest) = 0.0;
                    pole_[i] += temp;
                    double tempa = 0.0;
                    for (std::size_t k = 0; k < n_; k++) {
                        sim(i, k) -= temp;
                        tempa -= simi(k, i);
                    }
                    simi(nbest, i) = tempa;
                }
            }

            double error = 0.0;
            for (std::size_t i = 0; i < n_; i++) {
                for (std::size_t j = 0; j < n_; j++) {
                    double temp = (i == j) ? -1.0 : 0.0;
                    for (std::size_t k = 0; k < n_; k++) {
                        temp += simi(i, k) * sim(k, j);
                    }
                    error = std::max(error, std::abs(temp));
                }
            }
            if (error > 0.1) {
                result_.status = OptimizerStatus::Roundoff;
                return std::move(result_);
            }

            // Gradient of the linear interpolant.
            for (std::size_t i = 0; i < n_; i++) {
                double temp = 0.0;
                for (std::size_t j = 0; j < n_; j++) {
                    temp += (fval_[j] - fval_[n_]) * simi(j, i);
                }
                grad_[i] = temp;
            }

            iflag = true;
            parsig = kAlpha * rho;
            double pareta = kBeta * rho;
            for (std::size_t j = 0; j < n_; j++) {
                double wsig = 0.0;
                double weta = 0.0;
                for (std::size_t i = 0; i < n_; i++) {
                    wsig += simi(j, i) * simi(j, i);
                    weta += sim(i, j) * sim(i, j);
                }
                vsig_[j] = 1.0 / std::sqrt(wsig);
                veta_[j] = std::sqrt(weta);
                if (vsig_[j] < parsig || veta_[j] > pareta) {
                    iflag = false;
                }
            }

            if (!ibrnch && !iflag) {
                // Geometry step: replace the vertex that spoils acceptability.
                std::size_t drop = n_;
                double temp = pareta;
                for (std::size_t j = 0; j < n_; j++) {
                    if (veta_[j] > temp) {
                        drop = j;
                        temp = veta_[j];
                    }
                }
                if (drop == n_) {
                    for (std::size_t j = 0; j < n_; j++) {
                        if (vsig_[j] < temp) {
                            drop = j;
                            temp = vsig_[j];
                        }
                    }
                }
                temp = kGamma * rho * vsig_[drop];
                double predicted = 0.0;
                for (std::size_t i = 0; i < n_; i++) {
                    dx_[i] = temp * simi(drop, i);
                    predicted -= grad_[i] * dx_[i];
                }
                // Step downhill on the model (no constraint terms).
                double dxsign = (0.0 > predicted + predicted) ? -1.0 : 1.0;
                for (std::size_t i = 0; i < n_; i++) {
                    dx_[i] *= dxsign;
                }
                replace_vertex(drop);
                for (std::size_t i = 0; i < n_; i++) {
                    x_[i] = pole_[i] + dx_[i];
                }
                if (!evaluate(f)) {
                    result_.status = OptimizerStatus::MaxEvaluations;
                    return std::move(result_);
                }
                fval_[drop] = f;
                ibrnch = true;
                continue;
            }

            // Trust-region step. Without constraints the linear program's
            // solution is the steepest-descent step to the region boundary.
            double gnorm = 0.0;
            for (double g : grad_) {
                gnorm += g * g;
            }
            gnorm = std::sqrt(gnorm);
            bool full = gnorm > 0.0;
            for (std::size_t i = 0; i < n_; i++) {
                dx_[i] = full ? -rho * grad_[i] / gnorm : 0.0;
            }
            if (!full) {
                ibrnch = true;
                next = Next::ReduceRho;
                continue;
            }
            double predicted_change = 0.0;
            for (std::size_t i = 0; i < n_; i++) {
                predicted_change += grad_[i] * dx_[i];
            }
            prerem = -predicted_change;
            for (std::size_t i = 0; i < n_; i++) {
                x_[i] = pole_[i] + dx_[i];
            }
            ibrnch = true;
            if (!evaluate(f)) {
                result_.status = OptimizerStatus::MaxEvaluations;
                return std::move(result_);
            }

            // Decide whether x replaces a vertex of the simplex.
            double trured = fval_[n_] - f;
            if (f == fval_[n_]) {
                prerem = 0.0;
                trured = 0.0;
            }
            double ratio = trured <= 0.0 ? 1.0 : 0.0;
            std::size_t drop = n_;
            for (std::size_t j = 0; j < n_; j++) {
                double temp = 0.0;
                for (std::size_t i = 0; i < n_; i++) {
                    temp += simi(j, i) * dx_[i];
                }
                temp = std::abs(temp);
                if (temp > ratio) {
                    drop = j;
                    ratio = temp;
                }
                sigbar_[j] = temp * vsig_[j];
            }
            double edgmax = kDelta * rho;
            std::size_t l = n_;
            for (std::size_t j = 0; j < n_; j++) {
                if (sigbar_[j] >= parsig || sigbar_[j] >= vsig_[j]) {
                    double temp = veta_[j];
                    if (trured > 0.0) {
                        temp = 0.0;
                        for (std::size_t i = 0; i < n_; i++) {
                            double d = dx_[i] - sim(i, j);
                            temp += d * d;
                        }
                        temp = std::sqrt(temp);
                    }
                    if (temp > edgmax) {
                        l = j;
                        edgmax = temp;
                    }
                }
            }
            if (l < n_) {
                drop = l;
            }
            if (drop == n_) {
                next = Next::ReduceRho;
                continue;
            }
            replace_vertex(drop);
            fval_[drop] = f;
            if (trured > 0.0 && trured >= 0.1 * prerem) {
                continue;
            }
            next = Next::ReduceRho;
            continue;
        }

        // Next::ReduceRho
        next = Next::Iterate;
        if (!iflag) {
            ibrnch = false;
            continue;
        }
        if (rho > cfg_.rhoend) {
            rho *= 0.5;
            if (rho <= 1.5 * cfg_.rhoend) {
                rho = cfg_.rhoend;
            }
            continue;
        }
        result_.status = OptimizerStatus::Converged;
        return std::move(result_);
    }
}

}  // namespace

OptimizationResult minimize(const Objective &objective, std::span<const double> x0, const OptimizerConfig &cfg) {
    if (x0.empty()) {
        throw DomainError("minimize: empty parameter vector");
    }
    if (!(cfg.rhoend > 0.0) || !(cfg.rhoend <= cfg.rhobeg)) {
        throw DomainError("minimize: require 0 < rhoend <= rhobeg");
    }
    if (cfg.max_evals < 1) {
        throw DomainError("minimize: max_evals must be at least 1");
    }
    Cobyla solver(objective, x0, cfg);
    OptimizationResult result = solver.run();
    auto best = std::min_element(result.trace.begin(), result.trace.end(),
                                 [](const Evaluation &a, const Evaluation &b) { return a.value < b.value; });
    result.best_params = best->params;
    result.best_value = best->value;
    return result;
}

}  // namespace wsvqe
