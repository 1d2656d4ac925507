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

#ifndef WSVQE_CLIFFORD_HPP
#define WSVQE_CLIFFORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wsvqe/rng.hpp"
#include "wsvqe/statevector.hpp"

namespace wsvqe {

/// Hermitian Pauli string with a sign: (-1)^sign * prod_q X^x_q Z^z_q where
/// a qubit with both bits set denotes Y (not XZ).
struct SignedPauli {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    bool sign = false;

    friend bool operator==(const SignedPauli &, const SignedPauli &) = default;
};

/// Clifford element modulo global phase, stored as the images U X_q U^dagger
/// and U Z_q U^dagger of the 2n generators.
class CliffordTableau {
   public:
    /// Identity on n qubits.
    explicit CliffordTableau(int n_qubits);

    /// Builds a tableau from explicit generator images; validity is not
    /// checked (see is_symplectic).
    CliffordTableau(int n_qubits, std::vector<SignedPauli> x_images, std::vector<SignedPauli> z_images);

    static CliffordTableau from_circuit(const Circuit &circuit);

    int n_qubits() const noexcept { return n_; }
    const SignedPauli &x_image(int q) const { return rows_.at(static_cast<std::size_t>(q)); }
    const SignedPauli &z_image(int q) const { return rows_.at(static_cast<std::size_t>(n_ + q)); }

    /// Images preserve the Pauli commutation relations.
    bool is_symplectic() const;

    /// Composes a gate after the current element: U <- G U.
    void apply(const Gate &gate);
    void apply_h(int q);
    void apply_s(int q);
    void apply_sdg(int q);
    void apply_x(int q);
    void apply_z(int q);
    void apply_cx(int control, int target);
    void apply_cz(int control, int target);

    /// Image of an arbitrary signed Pauli under conjugation.
    SignedPauli conjugate(const SignedPauli &p) const;

    /// Stable textual key; equal keys iff equal elements modulo phase.
    std::string key() const;

    friend bool operator==(const CliffordTableau &, const CliffordTableau &) = default;

   private:
    int n_;
    std::vector<SignedPauli> rows_;  // [0, n): X images, [n, 2n): Z images
};

/// Uniformly random n-qubit Clifford modulo global phase (1 <= n <= 6).
///
/// The symplectic part is drawn through the Bruhat-style decomposition
/// B1 * (H layer, qubit permutation) * B2 with the (H layer, permutation)
/// pair from the quantum Mallows distribution and B1, B2 uniform over the
/// Hadamard-free subgroup [[D, 0], [G D, D^-T]] (D unit lower triangular,
/// G symmetric). Sign bits are uniform.
CliffordTableau random_clifford(int n_qubits, Rng &rng);

/// Circuit over {H, S, Sdg, CX, X, Z} implementing the tableau up to global
/// phase. Throws DomainError for a non-symplectic tableau.
Circuit synthesize(const CliffordTableau &tableau);

}  // namespace wsvqe

#endif  // WSVQE_CLIFFORD_HPP
