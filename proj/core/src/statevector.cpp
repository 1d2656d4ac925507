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

#include "wsvqe/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wsvqe/error.hpp"

namespace wsvqe {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_qubit(int q, int n, const char *what) {
    if (q < 0 || q >= n) {
        throw DomainError(std::string(what) + ": qubit index " + std::to_string(q) + " out of range for " +
                          std::to_string(n) + " qubits");
    }
}

/// Applies a 2x2 matrix [[m00, m01], [m10, m11]] to qubit q.
void apply_single(ComplexVector &amps, int q, Complex m00, Complex m01, Complex m10, Complex m11) {
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (i & bit) {
            continue;
        }
        Complex a0 = amps[i];
        Complex a1 = amps[i | bit];
        amps[i] = m00 * a0 + m01 * a1;
        amps[i | bit] = m10 * a0 + m11 * a1;
    }
}

std::vector<double> cumulative(const StateVector &state) {
    std::vector<double> cdf(state.dimension());
    double acc = 0.0;
    for (std::size_t i = 0; i < cdf.size(); i++) {
        acc += std::norm(state.amplitudes()[i]);
        cdf[i] = acc;
    }
    return cdf;
}

std::uint64_t draw(std::span<const double> cdf, Rng &rng) {
    double u = rng.uniform() * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
        --it;
    }
    return static_cast<std::uint64_t>(it - cdf.begin());
}

}  // namespace

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::Sdg:
            return "Sdg";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::CX:
            return "CX";
        case GateKind::CZ:
            return "CZ";
    }
    return "?";
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::RY:
        case GateKind::RZ:
            g.angle = -angle;
            break;
        case GateKind::S:
            g.kind = GateKind::Sdg;
            break;
        case GateKind::Sdg:
            g.kind = GateKind::S;
            break;
        default:
            break;
    }
    return g;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DomainError("Circuit: qubit count must be in [1, 10]");
    }
}

Circuit &Circuit::add(const Gate &gate) {
    check_qubit(gate.target, n_qubits_, "Circuit::add");
    if (gate.is_two_qubit()) {
        check_qubit(gate.control, n_qubits_, "Circuit::add");
        if (gate.control == gate.target) {
            throw DomainError("Circuit::add: control and target must differ");
        }
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw DomainError("Circuit::append: qubit count mismatch");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(n_qubits_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

StateVector StateVector::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DomainError("zero_state: qubit count must be in [1, 10]");
    }
    ComplexVector amps(std::size_t{1} << n_qubits);
    amps[0] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(ComplexVector amplitudes) {
    std::size_t dim = amplitudes.size();
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        n++;
    }
    if (dim < 2 || (std::size_t{1} << n) != dim || n > kMaxQubits) {
        throw DomainError("StateVector: amplitude count must be a power of two between 2 and 1024");
    }
    if (std::abs(norm2(amplitudes) - 1.0) > kNormTolerance) {
        throw DomainError("StateVector: amplitudes are not unit norm");
    }
    return StateVector(n, std::move(amplitudes));
}

Complex StateVector::amplitude(std::size_t basis_index) const {
    if (basis_index >= amplitudes_.size()) {
        throw DomainError("amplitude: basis index out of range");
    }
    return amplitudes_[basis_index];
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (std::size_t i = 0; i < p.size(); i++) {
        p[i] = std::norm(amplitudes_[i]);
    }
    return p;
}

void StateVector::apply(const Gate &gate) {
    check_qubit(gate.target, n_qubits_, "apply");
    const double r = std::numbers::sqrt2 / 2.0;
    const Complex i_unit{0.0, 1.0};
    switch (gate.kind) {
        case GateKind::RY: {
            double c = std::cos(gate.angle / 2.0);
            double s = std::sin(gate.angle / 2.0);
            apply_single(amplitudes_, gate.target, c, -s, s, c);
            break;
        }
        case GateKind::RZ: {
            Complex m = std::polar(1.0, -gate.angle / 2.0);
            apply_single(amplitudes_, gate.target, m, 0.0, 0.0, std::conj(m));
            break;
        }
        case GateKind::H:
            apply_single(amplitudes_, gate.target, r, r, r, -r);
            break;
        case GateKind::S:
            apply_single(amplitudes_, gate.target, 1.0, 0.0, 0.0, i_unit);
            break;
        case GateKind::Sdg:
            apply_single(amplitudes_, gate.target, 1.0, 0.0, 0.0, -i_unit);
            break;
        case GateKind::X:
            apply_single(amplitudes_, gate.target, 0.0, 1.0, 1.0, 0.0);
            break;
        case GateKind::Z:
            apply_single(amplitudes_, gate.target, 1.0, 0.0, 0.0, -1.0);
            break;
        case GateKind::CX:
        case GateKind::CZ: {
            check_qubit(gate.control, n_qubits_, "apply");
            if (gate.control == gate.target) {
                throw DomainError("apply: control and target must differ");
            }
            std::size_t cbit = std::size_t{1} << gate.control;
            std::size_t tbit = std::size_t{1} << gate.target;
            for (std::size_t i = 0; i < amplitudes_.size(); i++) {
                if (!(i & cbit)) {
                    continue;
                }
                if (gate.kind == GateKind::CX) {
                    if (!(i & tbit)) {
                        std::swap(amplitudes_[i], amplitudes_[i | tbit]);
                    }
                } else if (i & tbit) {
                    amplitudes_[i] = -amplitudes_[i];
                }
            }
            break;
        }
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.n_qubits() != n_qubits_) {
        throw DomainError("apply: circuit and state qubit counts differ");
    }
    for (const auto &g : circuit.gates()) {
        apply(g);
    }
}

StateVector apply(StateVector state, const Circuit &circuit) {
    state.apply(circuit);
    return state;
}

std::vector<std::uint64_t> sample(const StateVector &state, std::uint64_t shots, Rng &rng) {
    if (shots < 1) {
        throw DomainError("sample: shots must be positive");
    }
    auto cdf = cumulative(state);
    std::vector<std::uint64_t> counts(state.dimension(), 0);
    for (std::uint64_t s = 0; s < shots; s++) {
        counts[draw(cdf, rng)]++;
    }
    return counts;
}

std::uint64_t sample_one(const StateVector &state, Rng &rng) {
    auto cdf = cumulative(state);
    return draw(cdf, rng);
}

double fidelity_exact(const StateVector &state, std::span<const Complex> target) {
    if (target.size() != state.dimension()) {
        throw DomainError("fidelity_exact: dimension mismatch");
    }
    return std::clamp(std::norm(inner(target, state.amplitudes())), 0.0, 1.0);
}

}  // namespace wsvqe
