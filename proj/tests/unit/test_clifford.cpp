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

#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <deque>
#include <map>
#include <set>

#include "oracles.hpp"
#include "wsvqe/clifford.hpp"
#include "wsvqe/error.hpp"

using namespace wsvqe;

namespace {

std::string letters(const SignedPauli &p, int n) {
    std::string s;
    for (int q = 0; q < n; ++q) {
        bool x = (p.x >> q) & 1u, z = (p.z >> q) & 1u;
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

oracle::Mat signed_matrix(const SignedPauli &p, int n) {
    return (p.sign ? -1.0 : 1.0) * oracle::pauli_string(letters(p, n));
}

std::string generator(char letter, int q, int n) {
    std::string s(static_cast<std::size_t>(n), 'I');
    s[static_cast<std::size_t>(q)] = letter;
    return s;
}

/// Checks U P_q U^dagger against the tableau images, densely.
void expect_conjugation_matches(const oracle::Mat &u, const CliffordTableau &t) {
    const int n = t.n_qubits();
    for (int q = 0; q < n; ++q) {
        oracle::Mat xi = u * oracle::pauli_string(generator('X', q, n)) * u.adjoint();
        oracle::Mat zi = u * oracle::pauli_string(generator('Z', q, n)) * u.adjoint();
        EXPECT_LT((xi - signed_matrix(t.x_image(q), n)).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LT((zi - signed_matrix(t.z_image(q), n)).cwiseAbs().maxCoeff(), 1e-9);
    }
}

Circuit random_clifford_circuit(int n, int length, std::mt19937_64 &gen) {
    Circuit c(n);
    for (int k = 0; k < length; ++k) {
        int q = static_cast<int>(gen() % n);
        switch (gen() % 7) {
            case 0: c.add(Gate::h(q)); break;
            case 1: c.add(Gate::s(q)); break;
            case 2: c.add(Gate::sdg(q)); break;
            case 3: c.add(Gate::x(q)); break;
            case 4: c.add(Gate::z(q)); break;
            default:
                if (n > 1) {
                    int t = (q + 1 + static_cast<int>(gen() % (n - 1))) % n;
                    c.add(gen() % 2 ? Gate::cx(q, t) : Gate::cz(q, t));
                }
        }
    }
    return c;
}

/// Closure of {H, S, CX} under composition, keyed by tableau.
std::set<std::string> enumerate_group(int n) {
    std::set<std::string> seen;
    std::deque<CliffordTableau> queue{CliffordTableau(n)};
    seen.insert(queue.front().key());
    std::vector<Gate> gens;
    for (int q = 0; q < n; ++q) {
        gens.push_back(Gate::h(q));
        gens.push_back(Gate::s(q));
        gens.push_back(Gate::x(q));
        gens.push_back(Gate::z(q));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) gens.push_back(Gate::cx(a, b));
    while (!queue.empty()) {
        CliffordTableau t = queue.front();
        queue.pop_front();
        for (const Gate &g : gens) {
            CliffordTableau u = t;
            u.apply(g);
            if (seen.insert(u.key()).second) queue.push_back(u);
        }
    }
    return seen;
}

}  // namespace

TEST(Tableau, GateUpdatesMatchDenseConjugation) {
    std::mt19937_64 gen(41);
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 30; ++rep) {
            Circuit c = random_clifford_circuit(n, 20, gen);
            CliffordTableau t = CliffordTableau::from_circuit(c);
            EXPECT_TRUE(t.is_symplectic());
            expect_conjugation_matches(oracle::circuit_unitary(c), t);
        }
    }
}

TEST(Tableau, ConjugateMatchesDense) {
    std::mt19937_64 gen(42);
    Circuit c = random_clifford_circuit(3, 30, gen);
    CliffordTableau t = CliffordTableau::from_circuit(c);
    oracle::Mat u = oracle::circuit_unitary(c);
    for (std::uint32_t x = 0; x < 8; ++x)
        for (std::uint32_t z = 0; z < 8; ++z) {
            SignedPauli p{x, z, (x + z) % 2 == 1};
            oracle::Mat expected = u * signed_matrix(p, 3) * u.adjoint();
            EXPECT_LT((expected - signed_matrix(t.conjugate(p), 3)).cwiseAbs().maxCoeff(), 1e-9);
        }
}

TEST(Tableau, GroupOrdersMatchFormula) {
    // |C_n / U(1)| = 2^(n^2 + 2n) prod_j (4^j - 1): 24 and 11520.
    EXPECT_EQ(enumerate_group(1).size(), 24u);
    EXPECT_EQ(enumerate_group(2).size(), 11520u);
}

TEST(RandomClifford, AlwaysSymplectic) {
    Rng rng(43);
    for (int n = 1; n <= 6; ++n)
        for (int rep = 0; rep < 200; ++rep) EXPECT_TRUE(random_clifford(n, rng).is_symplectic());
    EXPECT_THROW(random_clifford(0, rng), DomainError);
    EXPECT_THROW(random_clifford(7, rng), DomainError);
}

TEST(RandomClifford, SingleQubitChiSquare) {
    Rng rng(44);
    std::map<std::string, int> counts;
    const int samples = 24000;
    for (int k = 0; k < samples; ++k) ++counts[random_clifford(1, rng).key()];
    ASSERT_EQ(counts.size(), 24u);
    auto group = enumerate_group(1);
    double chi2 = 0, expected = samples / 24.0;
    for (const auto &[key, c] : counts) {
        EXPECT_TRUE(group.count(key));
        chi2 += (c - expected) * (c - expected) / expected;
    }
    double p = boost::math::cdf(boost::math::complement(boost::math::chi_squared(23), chi2));
    EXPECT_GE(p, 0.001);
}

TEST(RandomClifford, TwoQubitsCoverTheGroup) {
    Rng rng(45);
    std::set<std::string> seen;
    for (int k = 0; k < 60000; ++k) seen.insert(random_clifford(2, rng).key());
    // Expected coverage after m draws from N classes is N(1 - e^{-m/N}) = 11322 here.
    EXPECT_GE(seen.size(), 11200u);
}

TEST(Synthesize, IdentityAndHadamard) {
    EXPECT_TRUE(synthesize(CliffordTableau(3)).empty());
    CliffordTableau h(1);
    h.apply_h(0);
    Circuit c = synthesize(h);
    EXPECT_LT(oracle::phase_distance(oracle::circuit_unitary(c), oracle::single_qubit(Gate::h(0))), 1e-12);
}

TEST(Synthesize, RoundTripOnRandomTableaus) {
    Rng rng(46);
    std::mt19937_64 gen(46);
    for (int rep = 0; rep < 1000; ++rep) {
        CliffordTableau t = random_clifford(3, rng);
        Circuit c = synthesize(t);
        for (const Gate &g : c.gates()) {
            EXPECT_TRUE(g.kind != GateKind::RY && g.kind != GateKind::RZ && g.kind != GateKind::CZ);
        }
        EXPECT_EQ(CliffordTableau::from_circuit(c), t);
        if (rep % 10 == 0) {
            oracle::Mat u = oracle::circuit_unitary(c);
            expect_conjugation_matches(u, t);
            ComplexVector a = oracle::random_state(8, gen), b = oracle::random_state(8, gen);
            std::complex<double> before = oracle::to_eigen(a).dot(oracle::to_eigen(b));
            std::complex<double> after = (u * oracle::to_eigen(a)).dot(u * oracle::to_eigen(b));
            EXPECT_NEAR(std::abs(before), std::abs(after), 1e-9);
        }
    }
}

TEST(Synthesize, RejectsNonSymplectic) {
    // X and Z of the same qubit both mapped to X: commutation is broken.
    CliffordTableau bad(1, {SignedPauli{1, 0, false}}, {SignedPauli{1, 0, false}});
    EXPECT_FALSE(bad.is_symplectic());
    EXPECT_THROW(synthesize(bad), DomainError);
}
