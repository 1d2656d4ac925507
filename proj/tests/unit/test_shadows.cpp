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

#include <deque>
#include <map>

#include "oracles.hpp"
#include "wsvqe/error.hpp"
#include "wsvqe/shadows.hpp"

using namespace wsvqe;

namespace {

UnitaryHandle identity_unitary(int n) { return std::make_shared<const CliffordUnitary>(CliffordTableau(n)); }

std::vector<UnitaryHandle> single_qubit_group() {
    std::map<std::string, CliffordTableau> seen;
    std::deque<CliffordTableau> queue{CliffordTableau(1)};
    seen.emplace(queue.front().key(), queue.front());
    while (!queue.empty()) {
        CliffordTableau t = queue.front();
        queue.pop_front();
        for (const Gate &g : {Gate::h(0), Gate::s(0), Gate::x(0)}) {
            CliffordTableau u = t;
            u.apply(g);
            if (seen.emplace(u.key(), u).second) queue.push_back(u);
        }
    }
    std::vector<UnitaryHandle> out;
    for (auto &[key, t] : seen) out.push_back(std::make_shared<const CliffordUnitary>(t));
    return out;
}

}  // namespace

TEST(Snapshots, IdentityOnZeroStateAlwaysZero) {
    Rng rng(51);
    std::vector<UnitaryHandle> us(100, identity_unitary(3));
    ShadowSet s = take_snapshots(StateVector::zero_state(3), us, rng);
    ASSERT_EQ(s.snapshots.size(), 100u);
    for (const auto &snap : s.snapshots) EXPECT_EQ(snap.outcome, 0u);
}

TEST(Snapshots, OneShotPerUnitary) {
    Rng rng(52);
    auto us = sample_unitaries(3, 37, rng);
    StatePreparer zero = [](std::span<const double>) { return StateVector::zero_state(3); };
    EXPECT_EQ(take_snapshots(zero, {}, us, rng).snapshots.size(), 37u);
    EXPECT_THROW(take_snapshots(StateVector::zero_state(3), std::vector<UnitaryHandle>{}, rng), DomainError);
}

TEST(Snapshots, PlusStateOutcomeFrequency) {
    Rng rng(53);
    StateVector plus = StateVector::zero_state(1);
    plus.apply(Gate::h(0));
    std::vector<UnitaryHandle> us(10000, identity_unitary(1));
    ShadowSet s = take_snapshots(plus, us, rng);
    double zeros = 0;
    for (const auto &snap : s.snapshots) zeros += snap.outcome == 0 ? 1 : 0;
    EXPECT_NEAR(zeros / 10000.0, 0.5, 5 * 0.005);
}

TEST(FidelityTerm, PlugInValues) {
    ComplexVector zero = basis_vector(8, 0);
    Snapshot hit{identity_unitary(3), 0};
    EXPECT_NEAR(fidelity_term(hit, zero), 8.0, 1e-15);
    EXPECT_NEAR(fidelity_term(hit, basis_vector(8, 1)), -1.0, 1e-15);
    EXPECT_THROW(fidelity_term(hit, basis_vector(4, 0)), DomainError);
}

TEST(FidelityTerm, ExactlyUnbiasedOverSingleQubitGroup) {
    auto group = single_qubit_group();
    ASSERT_EQ(group.size(), 24u);
    std::mt19937_64 gen(54);
    for (int pair = 0; pair < 50; ++pair) {
        ComplexVector model = pair == 0 ? basis_vector(2, 0) : oracle::random_state(2, gen);
        ComplexVector target = pair == 0 ? basis_vector(2, 0) : oracle::random_state(2, gen);
        double mean = 0;
        for (const auto &u : group) {
            StateVector rotated = apply(StateVector::from_amplitudes(model), u->circuit);
            for (std::uint64_t b = 0; b < 2; ++b) {
                mean += std::norm(rotated.amplitude(b)) * fidelity_term(Snapshot{u, b}, target) / 24.0;
            }
        }
        EXPECT_NEAR(mean, std::norm(inner(target, model)), 1e-9);
    }
}

TEST(EstimateFidelity, StatisticalAgreementThreeQubits) {
    Rng rng(55);
    std::mt19937_64 gen(55);
    for (int pair = 0; pair < 4; ++pair) {
        ComplexVector model = oracle::random_state(8, gen);
        ComplexVector target = oracle::random_state(8, gen);
        if (pair == 0) target = model;
        StateVector psi = StateVector::from_amplitudes(model);
        auto us = sample_unitaries(3, 20000, rng);
        double fhat = estimate_fidelity(take_snapshots(psi, us, rng), target);
        EXPECT_NEAR(fhat, fidelity_exact(psi, target), 0.05);
    }
}

TEST(EstimateFidelity, GlobalPhaseInvariant) {
    Rng rng(56);
    std::mt19937_64 gen(56);
    ComplexVector model = oracle::random_state(8, gen), target = oracle::random_state(8, gen);
    ComplexVector shifted = target;
    for (auto &a : shifted) a *= std::polar(1.0, -2.1);
    ShadowSet s = take_snapshots(StateVector::from_amplitudes(model), sample_unitaries(3, 500, rng), rng);
    EXPECT_NEAR(estimate_fidelity(s, target), estimate_fidelity(s, shifted), 1e-12);
}

TEST(EstimateFidelity, NotClipped) {
    // Single identity snapshot on a perfect match gives 2^n, well above 1.
    ShadowSet s{3, {Snapshot{identity_unitary(3), 0}}};
    EXPECT_NEAR(estimate_fidelity(s, basis_vector(8, 0)), 8.0, 1e-15);
    EXPECT_THROW(estimate_fidelity(ShadowSet{3, {}}, basis_vector(8, 0)), DomainError);
}
