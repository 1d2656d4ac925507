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

#include "wsvqe/shadows.hpp"

#include "wsvqe/error.hpp"

namespace wsvqe {

std::vector<UnitaryHandle> sample_unitaries(int n_qubits, std::size_t count, Rng &rng) {
    std::vector<UnitaryHandle> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; i++) {
        out.push_back(std::make_shared<const CliffordUnitary>(random_clifford(n_qubits, rng)));
    }
    return out;
}

ShadowSet take_snapshots(const StateVector &state, std::span<const UnitaryHandle> unitaries, Rng &rng) {
    if (unitaries.empty()) {
        throw DomainError("take_snapshots: no unitaries");
    }
    ShadowSet shadow;
    shadow.n_qubits = state.n_qubits();
    shadow.snapshots.reserve(unitaries.size());
    for (const auto &u : unitaries) {
        if (u->circuit.n_qubits() != state.n_qubits()) {
            throw DomainError("take_snapshots: unitary and state qubit counts differ");
        }
        StateVector rotated = state;
        rotated.apply(u->circuit);
        shadow.snapshots.push_back({u, sample_one(rotated, rng)});
    }
    return shadow;
}

ShadowSet take_snapshots(const StatePreparer &prepare, std::span<const double> params,
                         std::span<const UnitaryHandle> unitaries, Rng &rng) {
    return take_snapshots(prepare(params), unitaries, rng);
}

double fidelity_term(const Snapshot &snapshot, std::span<const Complex> target) {
    int n = snapshot.unitary->circuit.n_qubits();
    std::size_t dim = std::size_t{1} << n;
    if (target.size() != dim) {
        throw DomainError("fidelity_term: target dimension mismatch");
    }
    StateVector rotated = StateVector::from_amplitudes(ComplexVector(target.begin(), target.end()));
    rotated.apply(snapshot.unitary->circuit);
    double overlap = std::norm(rotated.amplitude(snapshot.outcome));
    return static_cast<double>(dim + 1) * overlap - 1.0;
}

double estimate_fidelity(const ShadowSet &shadow, std::span<const Complex> target) {
    if (shadow.snapshots.empty()) {
        throw DomainError("estimate_fidelity: empty shadow");
    }
    if (target.size() != (std::size_t{1} << shadow.n_qubits)) {
        throw DomainError("estimate_fidelity: target dimension mismatch");
    }
    double sum = 0.0;
    for (const auto &s : shadow.snapshots) {
        sum += fidelity_term(s, target);
    }
    return sum / static_cast<double>(shadow.snapshots.size());
}

}  // namespace wsvqe
