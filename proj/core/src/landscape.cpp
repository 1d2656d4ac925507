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

#include "wsvqe/landscape.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "wsvqe/error.hpp"
#include "wsvqe/pauli.hpp"
#include "wsvqe/shadows.hpp"
#include "wsvqe/statevector.hpp"

namespace wsvqe {

std::size_t grid_side(double step) {
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("landscape: step must be positive");
    double intervals = 2.0 * std::numbers::pi / step;
    double rounded = std::round(intervals);
    if (std::abs(intervals - rounded) > 1e-9 * std::max(1.0, intervals)) {
        throw DomainError("landscape: step must divide 2*pi");
    }
    return static_cast<std::size_t>(rounded) + 1;
}

LandscapeGrid landscape(const ProblemInstance &instance, const AnsatzSpec &spec, const LandscapeRequest &request,
                        Rng &rng) {
    const std::size_t d = spec.parameter_count();
    if (request.axis_i >= d || request.axis_j >= d) throw DomainError("landscape: axis index out of range");
    if (request.axis_i == request.axis_j) throw DomainError("landscape: axes must be distinct");
    if (instance.h.rows() != (std::size_t{1} << spec.n_qubits)) {
        throw DomainError("landscape: instance dimension does not match the ansatz");
    }
    const std::size_t side = grid_side(request.step);

    LandscapeGrid grid;
    grid.side = side;
    if (request.frozen.empty()) {
        grid.frozen = random_parameters(spec, rng);
    } else {
        if (request.frozen.size() != d) throw DomainError("landscape: frozen vector has the wrong length");
        grid.frozen = request.frozen;
    }

    const LandscapeQuantities &q = request.quantities;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::optional<MeasurementPlan> plan;
    if (q.expectation) plan.emplace(MeasurementPlan::from_matrix(instance.h));
    std::vector<UnitaryHandle> unitaries;
    if (q.estimated_fidelity) unitaries = sample_unitaries(spec.n_qubits, request.budget.n_snaps, rng);

    std::vector<double> params = grid.frozen;
    grid.points.reserve(side * side);
    for (std::size_t a = 0; a < side; ++a) {
        for (std::size_t b = 0; b < side; ++b) {
            LandscapePoint p;
            p.theta_i = -std::numbers::pi + static_cast<double>(a) * request.step;
            p.theta_j = -std::numbers::pi + static_cast<double>(b) * request.step;
            params[request.axis_i] = p.theta_i;
            params[request.axis_j] = p.theta_j;
            StateVector psi = prepare_ansatz(spec, params);
            p.expectation = q.expectation ? estimate_expectation(psi, *plan, request.budget.n_shots, rng).value : nan;
            p.est_fidelity = q.estimated_fidelity
                                 ? estimate_fidelity(take_snapshots(psi, unitaries, rng), instance.approx_vector)
                                 : nan;
            p.fid_approx = q.fidelity_to_approx ? fidelity_exact(psi, instance.approx_vector) : nan;
            p.fid_opt = q.fidelity_to_opt ? fidelity_exact(psi, instance.reference.vector) : nan;
            grid.points.push_back(p);
        }
    }
    return grid;
}

std::string landscape_to_csv(const LandscapeGrid &grid) {
    std::string out = "theta_i,theta_j,expectation,est_fidelity,fid_approx,fid_opt\n";
    char buf[160];
    for (const LandscapePoint &p : grid.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", p.theta_i, p.theta_j, p.expectation,
                      p.est_fidelity, p.fid_approx, p.fid_opt);
        out += buf;
    }
    return out;
}

std::size_t nearest_by_classical_ratio(const std::vector<ProblemInstance> &instances, double target) {
    if (instances.empty()) throw DomainError("nearest_by_classical_ratio: no instances");
    std::size_t best = 0;
    for (std::size_t k = 1; k < instances.size(); ++k) {
        if (std::abs(instances[k].approx_ratio_classical - target) <
            std::abs(instances[best].approx_ratio_classical - target)) {
            best = k;
        }
    }
    return best;
}

}  // namespace wsvqe
