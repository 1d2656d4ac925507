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

#include "wsvqe/clifford.hpp"

#include <bit>
#include <cmath>

#include "wsvqe/error.hpp"

namespace wsvqe {

namespace {

constexpr int kMaxRandomCliffordQubits = 6;

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

BitMatrix zeros(int rows, int cols) {
    return BitMatrix(static_cast<std::size_t>(rows), std::vector<std::uint8_t>(static_cast<std::size_t>(cols), 0));
}

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b) {
    std::size_t rows = a.size();
    std::size_t inner = b.size();
    std::size_t cols = b.front().size();
    BitMatrix out(rows, std::vector<std::uint8_t>(cols, 0));
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t k = 0; k < inner; k++) {
            if (!a[r][k]) {
                continue;
            }
            for (std::size_t c = 0; c < cols; c++) {
                out[r][c] ^= b[k][c];
            }
        }
    }
    return out;
}

/// Inverse of a unit lower triangular matrix over GF(2).
BitMatrix inverse_unit_lower(const BitMatrix &l) {
    std::size_t n = l.size();
    BitMatrix inv(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t col = 0; col < n; col++) {
        inv[col][col] = 1;
        for (std::size_t r = col + 1; r < n; r++) {
            std::uint8_t s = 0;
            for (std::size_t k = col; k < r; k++) {
                s ^= static_cast<std::uint8_t>(l[r][k] & inv[k][col]);
            }
            inv[r][col] = s;
        }
    }
    return inv;
}

BitMatrix transpose(const BitMatrix &m) {
    BitMatrix t(m.front().size(), std::vector<std::uint8_t>(m.size(), 0));
    for (std::size_t r = 0; r < m.size(); r++) {
        for (std::size_t c = 0; c < m[r].size(); c++) {
            t[c][r] = m[r][c];
        }
    }
    return t;
}

/// Quantum Mallows sample: Hadamard layer bits and a qubit permutation.
void sample_qmallows(int n, Rng &rng, std::vector<bool> &hadamard, std::vector<int> &permutation) {
    hadamard.assign(static_cast<std::size_t>(n), false);
    permutation.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> remaining;
    for (int q = 0; q < n; q++) {
        remaining.push_back(q);
    }
    for (int i = 0; i < n; i++) {
        int m = n - i;
        double eps = std::pow(4.0, -m);
        double r = rng.uniform();
        int index = -static_cast<int>(std::ceil(std::log2(r + (1.0 - r) * eps)));
        if (index > 2 * m - 1) {
            index = 2 * m - 1;  // r == 0 exactly
        }
        hadamard[static_cast<std::size_t>(i)] = index < m;
        int k = index < m ? index : 2 * m - index - 1;
        permutation[static_cast<std::size_t>(i)] = remaining[static_cast<std::size_t>(k)];
        remaining.erase(remaining.begin() + k);
    }
}

/// Symplectic matrix [[D, 0], [G D, D^-T]] with D random unit lower
/// triangular and G random symmetric.
BitMatrix random_hadamard_free(int n, Rng &rng) {
    BitMatrix gamma = zeros(n, n);
    BitMatrix delta = zeros(n, n);
    for (int r = 0; r < n; r++) {
        gamma[r][r] = rng.bit();
        delta[r][r] = 1;
        for (int c = 0; c < r; c++) {
            std::uint8_t b = rng.bit();
            gamma[r][c] = b;
            gamma[c][r] = b;
            delta[r][c] = rng.bit();
        }
    }
    BitMatrix prod = multiply(gamma, delta);
    BitMatrix inv_t = transpose(inverse_unit_lower(delta));
    BitMatrix out = zeros(2 * n, 2 * n);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            out[r][c] = delta[r][c];
            out[n + r][c] = prod[r][c];
            out[n + r][n + c] = inv_t[r][c];
        }
    }
    return out;
}

bool commutes(const SignedPauli &a, const SignedPauli &b) {
    return (std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1) == 0;
}

/// i^phase * X^x Z^z, the non-Hermitian "XZ ordered" form used for products.
struct PhasedPauli {
    int phase = 0;
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    void multiply_right(const PhasedPauli &o) {
        // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1+x2} Z^{z1+z2}
        phase += o.phase + 2 * std::popcount(z & o.x);
        x ^= o.x;
        z ^= o.z;
        phase &= 3;
    }
};

PhasedPauli to_phased(const SignedPauli &p) {
    return {(2 * static_cast<int>(p.sign) + std::popcount(p.x & p.z)) & 3, p.x, p.z};
}

SignedPauli to_signed(const PhasedPauli &p) {
    int e = (p.phase - std::popcount(p.x & p.z)) & 3;
    if (e & 1) {
        throw DomainError("conjugate: non-Hermitian result");
    }
    return {p.x, p.z, e == 2};
}

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw DomainError("CliffordTableau: qubit index out of range");
    }
}

}  // namespace

CliffordTableau::CliffordTableau(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DomainError("CliffordTableau: qubit count must be in [1, 10]");
    }
    rows_.resize(2 * static_cast<std::size_t>(n_));
    for (int q = 0; q < n_; q++) {
        rows_[static_cast<std::size_t>(q)].x = 1u << q;
        rows_[static_cast<std::size_t>(n_ + q)].z = 1u << q;
    }
}

CliffordTableau::CliffordTableau(int n_qubits, std::vector<SignedPauli> x_images, std::vector<SignedPauli> z_images)
    : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DomainError("CliffordTableau: qubit count must be in [1, 10]");
    }
    if (x_images.size() != static_cast<std::size_t>(n_) || z_images.size() != static_cast<std::size_t>(n_)) {
        throw DomainError("CliffordTableau: expected one X and one Z image per qubit");
    }
    rows_ = std::move(x_images);
    rows_.insert(rows_.end(), z_images.begin(), z_images.end());
}

CliffordTableau CliffordTableau::from_circuit(const Circuit &circuit) {
    CliffordTableau t(circuit.n_qubits());
    for (const auto &g : circuit.gates()) {
        t.apply(g);
    }
    return t;
}

bool CliffordTableau::is_symplectic() const {
    std::uint32_t mask = n_ >= 32 ? ~0u : ((1u << n_) - 1u);
    for (const auto &r : rows_) {
        if ((r.x & ~mask) || (r.z & ~mask)) {
            return false;
        }
    }
    for (int a = 0; a < n_; a++) {
        const auto &xa = x_image(a);
        const auto &za = z_image(a);
        if (commutes(xa, za)) {
            return false;
        }
        for (int b = a + 1; b < n_; b++) {
            if (!commutes(xa, x_image(b)) || !commutes(xa, z_image(b)) || !commutes(za, x_image(b)) ||
                !commutes(za, z_image(b))) {
                return false;
            }
        }
    }
    return true;
}

void CliffordTableau::apply(const Gate &gate) {
    switch (gate.kind) {
        case GateKind::H:
            apply_h(gate.target);
            break;
        case GateKind::S:
            apply_s(gate.target);
            break;
        case GateKind::Sdg:
            apply_sdg(gate.target);
            break;
        case GateKind::X:
            apply_x(gate.target);
            break;
        case GateKind::Z:
            apply_z(gate.target);
            break;
        case GateKind::CX:
            apply_cx(gate.control, gate.target);
            break;
        case GateKind::CZ:
            apply_cz(gate.control, gate.target);
            break;
        default:
            throw DomainError("CliffordTableau::apply: " + to_string(gate.kind) + " is not a Clifford gate");
    }
}

void CliffordTableau::apply_h(int q) {
    check_qubit(q, n_);
    std::uint32_t b = 1u << q;
    for (auto &r : rows_) {
        bool x = r.x & b;
        bool z = r.z & b;
        r.sign ^= x && z;
        r.x = (r.x & ~b) | (z ? b : 0);
        r.z = (r.z & ~b) | (x ? b : 0);
    }
}

void CliffordTableau::apply_s(int q) {
    check_qubit(q, n_);
    std::uint32_t b = 1u << q;
    for (auto &r : rows_) {
        bool x = r.x & b;
        bool z = r.z & b;
        r.sign ^= x && z;
        if (x) {
            r.z ^= b;
        }
    }
}

void CliffordTableau::apply_sdg(int q) {
    check_qubit(q, n_);
    std::uint32_t b = 1u << q;
    for (auto &r : rows_) {
        bool x = r.x & b;
        bool z = r.z & b;
        r.sign ^= x && !z;
        if (x) {
            r.z ^= b;
        }
    }
}

void CliffordTableau::apply_x(int q) {
    check_qubit(q, n_);
    std::uint32_t b = 1u << q;
    for (auto &r : rows_) {
        r.sign ^= (r.z & b) != 0;
    }
}

void CliffordTableau::apply_z(int q) {
    check_qubit(q, n_);
    std::uint32_t b = 1u << q;
    for (auto &r : rows_) {
        r.sign ^= (r.x & b) != 0;
    }
}

void CliffordTableau::apply_cx(int control, int target) {
    check_qubit(control, n_);
    check_qubit(target, n_);
    if (control == target) {
        throw DomainError("CliffordTableau::apply_cx: control and target must differ");
    }
    std::uint32_t cb = 1u << control;
    std::uint32_t tb = 1u << target;
    for (auto &r : rows_) {
        bool xc = r.x & cb;
        bool zc = r.z & cb;
        bool xt = r.x & tb;
        bool zt = r.z & tb;
        r.sign ^= xc && zt && (xt == zc);
        if (xc) {
            r.x ^= tb;
        }
        if (zt) {
            r.z ^= cb;
        }
    }
}

void CliffordTableau::apply_cz(int control, int target) {
    apply_h(target);
    apply_cx(control, target);
    apply_h(target);
}

SignedPauli CliffordTableau::conjugate(const SignedPauli &p) const {
    PhasedPauli acc{to_phased(p).phase, 0, 0};
    for (int q = 0; q < n_; q++) {
        if ((p.x >> q) & 1) {
            acc.multiply_right(to_phased(x_image(q)));
        }
    }
    for (int q = 0; q < n_; q++) {
        if ((p.z >> q) & 1) {
            acc.multiply_right(to_phased(z_image(q)));
        }
    }
    return to_signed(acc);
}

std::string CliffordTableau::key() const {
    std::string k;
    k.reserve(rows_.size() * (2 * static_cast<std::size_t>(n_) + 1));
    for (const auto &r : rows_) {
        for (int q = 0; q < n_; q++) {
            k.push_back(((r.x >> q) & 1) ? '1' : '0');
        }
        for (int q = 0; q < n_; q++) {
            k.push_back(((r.z >> q) & 1) ? '1' : '0');
        }
        k.push_back(r.sign ? '-' : '+');
    }
    return k;
}

CliffordTableau random_clifford(int n_qubits, Rng &rng) {
    if (n_qubits < 1 || n_qubits > kMaxRandomCliffordQubits) {
        throw DomainError("random_clifford: qubit count must be in [1, 6]");
    }
    const int n = n_qubits;
    std::vector<bool> hadamard;
    std::vector<int> perm;
    sample_qmallows(n, rng, hadamard, perm);

    BitMatrix left = random_hadamard_free(n, rng);
    BitMatrix right = random_hadamard_free(n, rng);

    BitMatrix middle = zeros(2 * n, 2 * n);
    for (int r = 0; r < n; r++) {
        middle[r] = right[perm[r]];
        middle[n + r] = right[n + perm[r]];
    }
    for (int r = 0; r < n; r++) {
        if (hadamard[r]) {
            std::swap(middle[r], middle[n + r]);
        }
    }
    BitMatrix sym = multiply(left, middle);

    std::vector<SignedPauli> x_images(static_cast<std::size_t>(n));
    std::vector<SignedPauli> z_images(static_cast<std::size_t>(n));
    for (int r = 0; r < 2 * n; r++) {
        SignedPauli p;
        for (int c = 0; c < n; c++) {
            if (sym[r][c]) {
                p.x |= 1u << c;
            }
            if (sym[r][n + c]) {
                p.z |= 1u << c;
            }
        }
        p.sign = rng.bit();
        (r < n ? x_images[r] : z_images[r - n]) = p;
    }
    return CliffordTableau(n, std::move(x_images), std::move(z_images));
}

Circuit synthesize(const CliffordTableau &tableau) {
    if (!tableau.is_symplectic()) {
        throw DomainError("synthesize: tableau is not symplectic");
    }
    const int n = tableau.n_qubits();
    CliffordTableau work = tableau;
    std::vector<Gate> reducing;
    auto emit = [&](const Gate &g) {
        work.apply(g);
        reducing.push_back(g);
    };
    auto has = [](std::uint32_t mask, int q) { return ((mask >> q) & 1) != 0; };

    for (int i = 0; i < n; i++) {
        // Bring the X_i image to +-X_i. Earlier columns are already reduced,
        // so the image is supported on qubits >= i.
        int pivot = -1;
        for (int j = i; j < n && pivot < 0; j++) {
            if (has(work.x_image(i).x, j)) {
                pivot = j;
            }
        }
        if (pivot < 0) {
            for (int j = i; j < n && pivot < 0; j++) {
                if (has(work.x_image(i).z, j)) {
                    pivot = j;
                }
            }
            emit(Gate::h(pivot));
        }
        if (pivot != i) {
            emit(Gate::cx(i, pivot));
            emit(Gate::cx(pivot, i));
            emit(Gate::cx(i, pivot));
        }
        for (int k = i + 1; k < n; k++) {
            if (has(work.x_image(i).x, k)) {
                emit(Gate::cx(i, k));
            }
        }
        if (has(work.x_image(i).z, i)) {
            emit(Gate::s(i));
        }
        for (int k = i + 1; k < n; k++) {
            if (has(work.x_image(i).z, k)) {
                emit(Gate::h(k));
                emit(Gate::cx(i, k));
            }
        }

        // The Z_i image anticommutes with X_i and commutes with the reduced
        // earlier generators, so it carries Z or Y on qubit i.
        for (int k = i + 1; k < n; k++) {
            const auto &zi = work.z_image(i);
            bool x = has(zi.x, k);
            bool z = has(zi.z, k);
            if (x && z) {
                emit(Gate::s(k));
            }
            if (has(work.z_image(i).x, k)) {
                emit(Gate::h(k));
            }
            if (has(work.z_image(i).z, k)) {
                emit(Gate::cx(k, i));
            }
        }
        if (has(work.z_image(i).x, i)) {
            emit(Gate::h(i));
            emit(Gate::s(i));
            emit(Gate::h(i));
        }
    }
    for (int i = 0; i < n; i++) {
        if (work.x_image(i).sign) {
            emit(Gate::z(i));
        }
        if (work.z_image(i).sign) {
            emit(Gate::x(i));
        }
    }

    // reducing * U = I up to phase, so U is the inverse of the reducing circuit.
    Circuit out(n);
    for (auto it = reducing.rbegin(); it != reducing.rend(); ++it) {
        out.add(it->inverse());
    }
    return out;
}

}  // namespace wsvqe
