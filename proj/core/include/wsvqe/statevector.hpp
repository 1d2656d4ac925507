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

#ifndef WSVQE_STATEVECTOR_HPP
#define WSVQE_STATEVECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wsvqe/numerics.hpp"
#include "wsvqe/rng.hpp"

namespace wsvqe {

inline constexpr int kMaxQubits = 10;

enum class GateKind { RY, RZ, H, S, Sdg, X, Z, CX, CZ };

std::string to_string(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    int control = -1;  // two-qubit gates only
    double angle = 0.0;

    static Gate ry(int q, double angle) { return {GateKind::RY, q, -1, angle}; }
    static Gate rz(int q, double angle) { return {GateKind::RZ, q, -1, angle}; }
    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate s(int q) { return {GateKind::S, q}; }
    static Gate sdg(int q) { return {GateKind::Sdg, q}; }
    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate z(int q) { return {GateKind::Z, q}; }
    static Gate cx(int control, int target) { return {GateKind::CX, target, control}; }
    static Gate cz(int control, int target) { return {GateKind::CZ, target, control}; }

    bool is_two_qubit() const noexcept { return kind == GateKind::CX || kind == GateKind::CZ; }
    Gate inverse() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Ordered gate list on a fixed register. Gates are validated on insertion.
class Circuit {
   public:
    explicit Circuit(int n_qubits);

    int n_qubits() const noexcept { return n_qubits_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    Circuit &add(const Gate &gate);
    Circuit &append(const Circuit &other);

    /// Reversed gate order with every gate inverted.
    Circuit inverse() const;

   private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

/// Pure state of up to 10 qubits. Basis index bit q is the value of qubit q
/// (qubit 0 is the least significant bit).
class StateVector {
   public:
    static StateVector zero_state(int n_qubits);
    /// Takes ownership of amplitudes; length must be 2^n and norm 1 (1e-10).
    static StateVector from_amplitudes(ComplexVector amplitudes);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

    Complex amplitude(std::size_t basis_index) const;
    std::vector<double> probabilities() const;
    double norm() const { return norm2(amplitudes_); }

    void apply(const Gate &gate);
    void apply(const Circuit &circuit);

   private:
    StateVector(int n_qubits, ComplexVector amplitudes) : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    int n_qubits_;
    ComplexVector amplitudes_;
};

/// Returns circuit applied to a copy of state.
StateVector apply(StateVector state, const Circuit &circuit);

/// Shot histogram indexed by basis index; counts sum to `shots`.
std::vector<std::uint64_t> sample(const StateVector &state, std::uint64_t shots, Rng &rng);

/// Single computational-basis outcome drawn from |a_i|^2.
std::uint64_t sample_one(const StateVector &state, Rng &rng);

/// |<target|state>|^2.
double fidelity_exact(const StateVector &state, std::span<const Complex> target);

}  // namespace wsvqe

#endif  // WSVQE_STATEVECTOR_HPP
