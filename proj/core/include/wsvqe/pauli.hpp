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

#ifndef WSVQE_PAULI_HPP
#define WSVQE_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsvqe/numerics.hpp"
#include "wsvqe/rng.hpp"
#include "wsvqe/statevector.hpp"

namespace wsvqe {

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

/// Tensor product of single-qubit Paulis. Position q holds the letter acting
/// on qubit q, so "XIZ" is X on qubit 0 and Z on qubit 2.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::vector<PauliLetter> letters) : letters_(std::move(letters)) {}
    static PauliString identity(int n_qubits);
    static PauliString parse(std::string_view text);
    /// Letter of qubit q is bit q of (x_mask, z_mask): X=(1,0), Y=(1,1), Z=(0,1).
    static PauliString from_masks(int n_qubits, std::uint32_t x_mask, std::uint32_t z_mask);

    int n_qubits() const noexcept { return static_cast<int>(letters_.size()); }
    PauliLetter operator[](int q) const { return letters_.at(static_cast<std::size_t>(q)); }
    PauliLetter &operator[](int q) { return letters_.at(static_cast<std::size_t>(q)); }

    std::uint32_t x_mask() const;
    std::uint32_t z_mask() const;
    /// Bits of qubits with a non-identity letter.
    std::uint32_t support_mask() const { return x_mask() | z_mask(); }
    bool is_identity() const { return support_mask() == 0; }

    /// True when the letters agree or one is I at every position.
    bool qubitwise_commutes(const PauliString &other) const;

    std::string str() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;
    friend auto operator<=>(const PauliString &, const PauliString &) = default;

   private:
    std::vector<PauliLetter> letters_;
};

struct PauliTerm {
    PauliString string;
    double coefficient = 0.0;
};

/// Qubit-wise commuting terms sharing one measurement basis. Basis letters
/// are X, Y or Z; qubits unused by every member are measured in Z.
struct MeasurementGroup {
    std::vector<PauliTerm> terms;
    PauliString basis;

    /// Whether the group needs a circuit execution (identity-only groups do not).
    bool needs_measurement() const;
};

/// Dense matrix of a Pauli string in the qubit-0-is-LSB convention.
ComplexMatrix pauli_matrix(const PauliString &p);

/// x_i = Tr(P_i H) / 2^n over all 4^n strings; |x_i| <= 1e-12 pruned.
/// Throws DomainError when H is not Hermitian or its dimension is not 2^n.
std::vector<PauliTerm> decompose(const ComplexMatrix &h);

/// Sum x_i P_i as a dense matrix.
/// n_qubits < 0 takes the count from the first term; an empty list then throws.
ComplexMatrix reconstruct(std::span<const PauliTerm> terms, int n_qubits = -1);

/// Greedy first-fit qubit-wise commuting grouping in input order.
std::vector<MeasurementGroup> group_qwc(std::span<const PauliTerm> terms);

/// Per qubit: X -> H, Y -> Sdg then H, Z -> nothing.
Circuit basis_rotation_circuit(const MeasurementGroup &group);

/// Pre-grouped Hamiltonian with cached rotation circuits, shared by every
/// QEE call of a run.
class MeasurementPlan {
   public:
    MeasurementPlan(int n_qubits, std::vector<PauliTerm> terms);
    static MeasurementPlan from_matrix(const ComplexMatrix &h);

    int n_qubits() const noexcept { return n_qubits_; }
    const std::vector<PauliTerm> &terms() const noexcept { return terms_; }
    const std::vector<MeasurementGroup> &groups() const noexcept { return groups_; }
    const std::vector<Circuit> &rotations() const noexcept { return rotations_; }

    /// Number of groups that need a circuit execution.
    std::size_t circuits_per_evaluation() const noexcept { return circuits_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

   private:
    int n_qubits_;
    std::vector<PauliTerm> terms_;
    std::vector<MeasurementGroup> groups_;
    std::vector<Circuit> rotations_;
    std::size_t circuits_ = 0;
};

using StatePreparer = std::function<StateVector(std::span<const double>)>;

struct ExpectationEstimate {
    double value = 0.0;
    /// Standard error from the per-group sample variance of the grouped
    /// observable.
    double standard_error = 0.0;
    std::size_t circuits_used = 0;
    std::uint64_t total_shots = 0;
};

/// Shot-based QEE. Each group's rotated state is sampled `shots_per_circuit`
/// times and each member's <P> is the mean of (-1)^(parity of outcome bits
/// on its support). The identity term contributes its coefficient for free.
ExpectationEstimate estimate_expectation(const StatePreparer &prepare, std::span<const double> params,
                                         const MeasurementPlan &plan, std::uint64_t shots_per_circuit, Rng &rng);

ExpectationEstimate estimate_expectation(const StatePreparer &prepare, std::span<const double> params,
                                         std::span<const PauliTerm> terms, std::uint64_t shots_per_circuit, Rng &rng);

/// Same estimator on an already prepared state.
ExpectationEstimate estimate_expectation(const StateVector &state, const MeasurementPlan &plan,
                                         std::uint64_t shots_per_circuit, Rng &rng);

/// Re <psi|H|psi>.
double exact_expectation(const StateVector &state, const ComplexMatrix &h);

/// <psi|P|psi> for a single Pauli string.
double exact_pauli_expectation(const StateVector &state, const PauliString &p);

}  // namespace wsvqe

#endif  // WSVQE_PAULI_HPP
