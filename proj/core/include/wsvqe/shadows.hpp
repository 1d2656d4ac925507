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

#ifndef WSVQE_SHADOWS_HPP
#define WSVQE_SHADOWS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "wsvqe/clifford.hpp"
#include "wsvqe/numerics.hpp"
#include "wsvqe/pauli.hpp"
#include "wsvqe/rng.hpp"
#include "wsvqe/statevector.hpp"

namespace wsvqe {

/// A Clifford element together with its synthesized circuit.
struct CliffordUnitary {
    CliffordTableau tableau;
    Circuit circuit;

    explicit CliffordUnitary(CliffordTableau t) : tableau(std::move(t)), circuit(synthesize(tableau)) {}
};

using UnitaryHandle = std::shared_ptr<const CliffordUnitary>;

std::vector<UnitaryHandle> sample_unitaries(int n_qubits, std::size_t count, Rng &rng);

struct Snapshot {
    UnitaryHandle unitary;
    std::uint64_t outcome = 0;
};

struct ShadowSet {
    int n_qubits = 0;
    std::vector<Snapshot> snapshots;
};

/// One single-shot measurement per unitary of U_i |state>.
ShadowSet take_snapshots(const StateVector &state, std::span<const UnitaryHandle> unitaries, Rng &rng);

/// Prepares the model state for `params` and snapshots it.
ShadowSet take_snapshots(const StatePreparer &prepare, std::span<const double> params,
                         std::span<const UnitaryHandle> unitaries, Rng &rng);

/// (2^n + 1) |<b| U |target>|^2 - 1 for one snapshot. Lies in [-1, 2^n].
double fidelity_term(const Snapshot &snapshot, std::span<const Complex> target);

/// Mean of the per-snapshot terms: an unbiased, unclipped estimate of
/// |<target|model>|^2 for a pure target.
double estimate_fidelity(const ShadowSet &shadow, std::span<const Complex> target);

}  // namespace wsvqe

#endif  // WSVQE_SHADOWS_HPP
