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

#include "wsvqe/ansatz.hpp"

#include <numbers>
#include <string>

#include "wsvqe/error.hpp"

namespace wsvqe {

Circuit build_ansatz(const AnsatzSpec &spec, std::span<const double> params) {
    if (spec.n_qubits < 1 || spec.n_qubits > kMaxQubits || spec.reps < 0) {
        throw DomainError("build_ansatz: invalid ansatz shape");
    }
    if (params.size() != spec.parameter_count()) {
        throw DomainError("build_ansatz: expected " + std::to_string(spec.parameter_count()) + " parameters, got " +
                          std::to_string(params.size()));
    }
    const int n = spec.n_qubits;
    Circuit c(n);
    for (int layer = 0; layer <= spec.reps; layer++) {
        std::size_t base = 2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(layer);
        for (int q = 0; q < n; q++) {
            c.add(Gate::ry(q, params[base + static_cast<std::size_t>(q)]));
        }
        for (int q = 0; q < n; q++) {
            c.add(Gate::rz(q, params[base + static_cast<std::size_t>(n + q)]));
        }
        if (layer < spec.reps) {
            for (int q = n - 2; q >= 0; q--) {
                c.add(Gate::cx(q, q + 1));
            }
        }
    }
    return c;
}

StateVector prepare_ansatz(const AnsatzSpec &spec, std::span<const double> params) {
    StateVector psi = StateVector::zero_state(spec.n_qubits);
    psi.apply(build_ansatz(spec, params));
    return psi;
}

StatePreparer ansatz_preparer(const AnsatzSpec &spec) {
    return [spec](std::span<const double> params) { return prepare_ansatz(spec, params); };
}

std::vector<double> random_parameters(const AnsatzSpec &spec, Rng &rng) {
    std::vector<double> theta(spec.parameter_count());
    for (auto &t : theta) {
        t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    return theta;
}

}  // namespace wsvqe
