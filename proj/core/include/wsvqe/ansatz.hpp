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

#ifndef WSVQE_ANSATZ_HPP
#define WSVQE_ANSATZ_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wsvqe/pauli.hpp"
#include "wsvqe/rng.hpp"
#include "wsvqe/statevector.hpp"

namespace wsvqe {

/// Hardware-efficient SU(2) ansatz: `reps` blocks of (RY layer, RZ layer,
/// CX ladder) followed by a final RY/RZ rotation layer.
struct AnsatzSpec {
    int n_qubits = 3;
    int reps = 2;

    std::size_t parameter_count() const {
        return 2 * static_cast<std::size_t>(n_qubits) * (static_cast<std::size_t>(reps) + 1);
    }
};

/// Layer l applies RY(theta[2n l + q]) then RZ(theta[2n l + n + q]) on every
/// qubit q. Between layers the entangler is CX(n-2, n-1), ..., CX(0, 1),
/// i.e. CX(1, 2) then CX(0, 1) for three qubits.
Circuit build_ansatz(const AnsatzSpec &spec, std::span<const double> params);

/// build_ansatz applied to |0...0>.
StateVector prepare_ansatz(const AnsatzSpec &spec, std::span<const double> params);

StatePreparer ansatz_preparer(const AnsatzSpec &spec);

/// Parameters drawn uniformly from [-pi, pi].
std::vector<double> random_parameters(const AnsatzSpec &spec, Rng &rng);

}  // namespace wsvqe

#endif  // WSVQE_ANSATZ_HPP
