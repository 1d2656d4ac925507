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

#include "wsvqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "wsvqe/error.hpp"

namespace wsvqe {

namespace {

constexpr double kPruneThreshold = 1e-12;

int qubit_count_for_dimension(std::size_t dim) {
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        n++;
    }
    if (dim < 2 || (std::size_t{1} << n) != dim) {
        return -1;
    }
    return n;
}

/// Phase of P|j> = phase * |j ^ x_mask>.
Complex pauli_phase(std::uint32_t x_mask, std::uint32_t z_mask, std::size_t j) {
    static const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int y_count = std::popcount(x_mask & z_mask);
    Complex phase = kIPowers[y_count & 3];
    if (std::popcount(static_cast<std::uint32_t>(j) & z_mask) & 1) {
        phase = -phase;
    }
    return phase;
}

double parity_sign(std::size_t outcome, std::uint32_t support) {
    return (std::popcount(static_cast<std::uint32_t>(outcome) & support) & 1) ? -1.0 : 1.0;
}

}  // namespace

PauliString PauliString::identity(int n_qubits) {
    return PauliString(std::vector<PauliLetter>(static_cast<std::size_t>(n_qubits), PauliLetter::I));
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<PauliLetter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'I':
            case '_':
                letters.push_back(PauliLetter::I);
                break;
            case 'X':
                letters.push_back(PauliLetter::X);
                break;
            case 'Y':
                letters.push_back(PauliLetter::Y);
                break;
            case 'Z':
                letters.push_back(PauliLetter::Z);
                break;
            default:
                throw DomainError("PauliString::parse: unexpected character '" + std::string(1, c) + "'");
        }
    }
    return PauliString(std::move(letters));
}

PauliString PauliString::from_masks(int n_qubits, std::uint32_t x_mask, std::uint32_t z_mask) {
    std::vector<PauliLetter> letters(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; q++) {
        bool x = (x_mask >> q) & 1;
        bool z = (z_mask >> q) & 1;
        letters[static_cast<std::size_t>(q)] = x ? (z ? PauliLetter::Y : PauliLetter::X) : (z ? PauliLetter::Z : PauliLetter::I);
    }
    return PauliString(std::move(letters));
}

std::uint32_t PauliString::x_mask() const {
    std::uint32_t m = 0;
    for (std::size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] == PauliLetter::X || letters_[q] == PauliLetter::Y) {
            m |= 1u << q;
        }
    }
    return m;
}

std::uint32_t PauliString::z_mask() const {
    std::uint32_t m = 0;
    for (std::size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] == PauliLetter::Z || letters_[q] == PauliLetter::Y) {
            m |= 1u << q;
        }
    }
    return m;
}

bool PauliString::qubitwise_commutes(const PauliString &other) const {
    if (other.letters_.size() != letters_.size()) {
        throw DomainError("qubitwise_commutes: length mismatch");
    }
    for (std::size_t q = 0; q < letters_.size(); q++) {
        PauliLetter a = letters_[q];
        PauliLetter b = other.letters_[q];
        if (a != PauliLetter::I && b != PauliLetter::I && a != b) {
            return false;
        }
    }
    return true;
}

std::string PauliString::str() const {
    static const char kChars[4] = {'I', 'X', 'Y', 'Z'};
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) {
        s.push_back(kChars[static_cast<int>(l)]);
    }
    return s;
}

bool MeasurementGroup::needs_measurement() const {
    return std::any_of(terms.begin(), terms.end(), [](const PauliTerm &t) { return !t.string.is_identity(); });
}

ComplexMatrix pauli_matrix(const PauliString &p) {
    std::size_t dim = std::size_t{1} << p.n_qubits();
    ComplexMatrix m(dim, dim);
    auto xm = p.x_mask();
    auto zm = p.z_mask();
    for (std::size_t j = 0; j < dim; j++) {
        m(j ^ xm, j) = pauli_phase(xm, zm, j);
    }
    return m;
}

std::vector<PauliTerm> decompose(const ComplexMatrix &h) {
    if (!h.is_square()) {
        throw DomainError("decompose: matrix is not square");
    }
    int n = qubit_count_for_dimension(h.rows());
    if (n < 1 || n > kMaxQubits) {
        throw DomainError("decompose: dimension is not a power of two");
    }
    if (!h.is_hermitian()) {
        throw DomainError("decompose: matrix is not Hermitian");
    }
    std::size_t dim = h.rows();
    std::vector<PauliTerm> terms;
    std::uint32_t count = 1u << n;
    for (std::uint32_t xm = 0; xm < count; xm++) {
        for (std::uint32_t zm = 0; zm < count; zm++) {
            // Tr(P H) = sum_k <k ^ x| P |k> H[k][k ^ x].
            Complex trace{0.0, 0.0};
            for (std::size_t k = 0; k < dim; k++) {
                trace += pauli_phase(xm, zm, k) * h(k, k ^ xm);
            }
            double coeff = trace.real() / static_cast<double>(dim);
            if (std::abs(coeff) > kPruneThreshold) {
                terms.push_back({PauliString::from_masks(n, xm, zm), coeff});
            }
        }
    }
    return terms;
}

ComplexMatrix reconstruct(std::span<const PauliTerm> terms, int n_qubits) {
    if (n_qubits < 0) {
        if (terms.empty()) {
            throw DomainError("reconstruct: no terms and no qubit count");
        }
        n_qubits = terms.front().string.n_qubits();
    }
    int n = n_qubits;
    for (const auto &t : terms) {
        if (t.string.n_qubits() != n) {
            throw DomainError("reconstruct: terms act on different qubit counts");
        }
    }
    std::size_t dim = std::size_t{1} << n;
    ComplexMatrix out(dim, dim);
    for (const auto &t : terms) {
        auto xm = t.string.x_mask();
        auto zm = t.string.z_mask();
        for (std::size_t j = 0; j < dim; j++) {
            out(j ^ xm, j) += t.coefficient * pauli_phase(xm, zm, j);
        }
    }
    return out;
}

std::vector<MeasurementGroup> group_qwc(std::span<const PauliTerm> terms) {
    std::vector<MeasurementGroup> groups;
    if (terms.empty()) {
        return groups;
    }
    int n = terms.front().string.n_qubits();
    // Largest support first: wide strings seed the groups, narrow ones fill in.
    std::vector<std::size_t> order(terms.size());
    for (std::size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(terms[a].string.support_mask()) > std::popcount(terms[b].string.support_mask());
    });

    std::vector<PauliString> partial;  // I marks qubits not yet fixed
    for (std::size_t idx : order) {
        const auto &term = terms[idx];
        if (term.string.n_qubits() != n) {
            throw DomainError("group_qwc: terms have different lengths");
        }
        bool placed = false;
        for (std::size_t g = 0; g < groups.size(); g++) {
            if (partial[g].qubitwise_commutes(term.string)) {
                for (int q = 0; q < n; q++) {
                    if (term.string[q] != PauliLetter::I) {
                        partial[g][q] = term.string[q];
                    }
                }
                groups[g].terms.push_back(term);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back(MeasurementGroup{{term}, {}});
            partial.push_back(term.string);
        }
    }
    for (std::size_t g = 0; g < groups.size(); g++) {
        PauliString basis = partial[g];
        for (int q = 0; q < n; q++) {
            if (basis[q] == PauliLetter::I) {
                basis[q] = PauliLetter::Z;
            }
        }
        groups[g].basis = std::move(basis);
    }
    return groups;
}

Circuit basis_rotation_circuit(const MeasurementGroup &group) {
    int n = group.basis.n_qubits();
    Circuit c(n);
    for (int q = 0; q < n; q++) {
        switch (group.basis[q]) {
            case PauliLetter::X:
                c.add(Gate::h(q));
                break;
            case PauliLetter::Y:
                c.add(Gate::sdg(q));
                c.add(Gate::h(q));
                break;
            default:
                break;
        }
    }
    return c;
}

MeasurementPlan::MeasurementPlan(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    for (const auto &t : terms_) {
        if (t.string.n_qubits() != n_qubits_) {
            throw DomainError("MeasurementPlan: term length does not match qubit count");
        }
    }
    groups_ = group_qwc(terms_);
    rotations_.reserve(groups_.size());
    for (const auto &g : groups_) {
        rotations_.push_back(basis_rotation_circuit(g));
        if (g.needs_measurement()) {
            circuits_++;
        }
    }
}

MeasurementPlan MeasurementPlan::from_matrix(const ComplexMatrix &h) {
    auto terms = decompose(h);
    int n = qubit_count_for_dimension(h.rows());
    return MeasurementPlan(n, std::move(terms));
}

ExpectationEstimate estimate_expectation(const StateVector &state, const MeasurementPlan &plan,
                                         std::uint64_t shots_per_circuit, Rng &rng) {
    if (shots_per_circuit < 1) {
        throw DomainError("estimate_expectation: shots_per_circuit must be positive");
    }
    if (state.n_qubits() != plan.n_qubits()) {
        throw DomainError("estimate_expectation: state and Hamiltonian qubit counts differ");
    }
    ExpectationEstimate est;
    double variance = 0.0;
    const double shots = static_cast<double>(shots_per_circuit);
    for (std::size_t g = 0; g < plan.groups().size(); g++) {
        const auto &group = plan.groups()[g];
        if (!group.needs_measurement()) {
            for (const auto &t : group.terms) {
                est.value += t.coefficient;
            }
            continue;
        }
        StateVector rotated = state;
        rotated.apply(plan.rotations()[g]);
        auto counts = sample(rotated, shots_per_circuit, rng);
        double mean = 0.0;
        double second = 0.0;
        for (std::size_t b = 0; b < counts.size(); b++) {
            if (counts[b] == 0) {
                continue;
            }
            double value = 0.0;
            for (const auto &t : group.terms) {
                value += t.coefficient * parity_sign(b, t.string.support_mask());
            }
            double w = static_cast<double>(counts[b]) / shots;
            mean += w * value;
            second += w * value * value;
        }
        est.value += mean;
        if (shots_per_circuit > 1) {
            double sample_var = std::max(0.0, second - mean * mean) * shots / (shots - 1.0);
            variance += sample_var / shots;
        }
        est.circuits_used++;
        est.total_shots += shots_per_circuit;
    }
    est.standard_error = std::sqrt(variance);
    return est;
}

ExpectationEstimate estimate_expectation(const StatePreparer &prepare, std::span<const double> params,
                                         const MeasurementPlan &plan, std::uint64_t shots_per_circuit, Rng &rng) {
    return estimate_expectation(prepare(params), plan, shots_per_circuit, rng);
}

ExpectationEstimate estimate_expectation(const StatePreparer &prepare, std::span<const double> params,
                                         std::span<const PauliTerm> terms, std::uint64_t shots_per_circuit, Rng &rng) {
    if (terms.empty()) {
        throw DomainError("estimate_expectation: no terms");
    }
    MeasurementPlan plan(terms.front().string.n_qubits(), std::vector<PauliTerm>(terms.begin(), terms.end()));
    return estimate_expectation(prepare, params, plan, shots_per_circuit, rng);
}

double exact_expectation(const StateVector &state, const ComplexMatrix &h) {
    if (!h.is_square() || h.rows() != state.dimension()) {
        throw DomainError("exact_expectation: dimension mismatch");
    }
    return rayleigh_quotient(h, state.amplitudes());
}

double exact_pauli_expectation(const StateVector &state, const PauliString &p) {
    if (p.n_qubits() != state.n_qubits()) {
        throw DomainError("exact_pauli_expectation: qubit count mismatch");
    }
    auto xm = p.x_mask();
    auto zm = p.z_mask();
    auto amps = state.amplitudes();
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j < amps.size(); j++) {
        s += std::conj(amps[j ^ xm]) * pauli_phase(xm, zm, j) * amps[j];
    }
    return s.real();
}

}  // namespace wsvqe
