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

#include <cmath>
#include <limits>
#include <numbers>

#include "wsvqe/error.hpp"
#include "wsvqe/optimizer.hpp"
#include "wsvqe/rng.hpp"

using namespace wsvqe;

namespace {

double wavy(std::span<const double> x) {
    // Summation order matches the reference script bit for bit.
    double sines = 0, squares = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sines += std::sin(x[i] + static_cast<double>(i));
        squares += x[i] * x[i];
    }
    return sines + 0.1 * squares + 0.3 * x[0] * x[1] - 0.2 * x[2] * x[3];
}

// Objective values of the reference COBYLA (Powell's Fortran code as shipped
// in SciPy 1.15) on wavy() from (0.3, -0.7, 1.1, 0.2), rhobeg 0.5, tol 1e-4,
// 60 evaluations.
const double kReferenceValues[] = {
    0.6502469323283897,
    1.022082816566573,
    1.0720828165665726,
    0.28114582660024673,
    -0.30531617088066665,
    -1.1139264797789439,
    -1.7369275204234058,
    -1.5995909223874054,
    -1.6930721188535023,
    -2.0002876335551707,
    -2.3970500900246767,
    -2.5138738271978376,
    -2.2542141350789486,
    -2.449819481196717,
    -2.4628943451928498,
    -2.4395851594433986,
    -2.51937663130832,
    -2.4966443765988116,
    -2.5121532018408024,
    -2.535432734171093,
    -2.536148712390344,
    -2.522573415854414,
    -2.5436614131378246,
    -2.5370215113465595,
    -2.5467226839733352,
    -2.5401057053264533,
    -2.5409476453061353,
    -2.545617736994427,
    -2.547843037664787,
    -2.5478531220814773,
    -2.546595986681396,
    -2.5466559917793967,
    -2.547643039017676,
    -2.54831137513501,
    -2.548457506856656,
    -2.5481966931042628,
    -2.5481800929862004,
    -2.5487682033529913,
    -2.548966985442359,
    -2.5488691156603043,
    -2.5489704155121977,
    -2.548789495060185,
    -2.5489725994328434,
    -2.5489437917431763,
    -2.5489613632841697,
    -2.5489569796613876,
    -2.5489421527938507,
    -2.548971269366672,
    -2.548975593766627,
    -2.5489791283467995,
    -2.5489754032434946,
    -2.5489747278252866,
    -2.548982957870015,
    -2.5489861565506935,
    -2.548987950295832,
    -2.5489878551008815,
    -2.5489862999753092,
    -2.5489872863575407,
    -2.5489884261210376,
    -2.5489883040729997};

const double kReferenceLastPoint[] = {-0.7586703557364902, -1.9126624603078561, 2.5694523844640558,
                                      1.8552755749190937};

double quadratic(std::span<const double> x) { return (x[0] - 1) * (x[0] - 1) + (x[1] + 2) * (x[1] + 2); }

}  // namespace

TEST(Cobyla, ReproducesReferenceTrace) {
    std::vector<double> x0{0.3, -0.7, 1.1, 0.2};
    OptimizationResult r = minimize(wavy, x0, {0.5, 1e-4, 60});
    ASSERT_EQ(r.trace.size(), std::size(kReferenceValues));
    for (std::size_t k = 0; k < r.trace.size(); ++k) EXPECT_NEAR(r.trace[k].value, kReferenceValues[k], 1e-9) << k;
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(r.trace.back().params[i], kReferenceLastPoint[i], 1e-9);
    EXPECT_EQ(r.status, OptimizerStatus::MaxEvaluations);
}

TEST(Cobyla, QuadraticConverges) {
    std::vector<double> x0{0, 0};
    OptimizationResult r = minimize(quadratic, x0, {0.5, 1e-4, 200});
    EXPECT_NEAR(r.best_params[0], 1.0, 1e-3);
    EXPECT_NEAR(r.best_params[1], -2.0, 1e-3);
    EXPECT_EQ(r.status, OptimizerStatus::Converged);
    // SciPy stops the same problem after 43 evaluations.
    EXPECT_EQ(r.evaluations, 43u);
}

TEST(Cobyla, ConstantObjective) {
    std::vector<double> x0{0.2, -0.4, 1.0};
    OptimizationResult r = minimize([](std::span<const double>) { return 3.5; }, x0, {0.25, 1e-4, 50});
    EXPECT_EQ(r.best_value, 3.5);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(std::abs(r.best_params[i] - x0[i]), 0.25 + 1e-15);
}

TEST(Cobyla, SphereInEighteenDimensions) {
    Rng rng(71);
    std::vector<double> x0(18);
    for (auto &v : x0) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    auto sphere = [](std::span<const double> x) {
        double s = 0;
        for (double v : x) s += v * v;
        return s;
    };
    OptimizationResult r = minimize(sphere, x0, {3 * std::numbers::pi / 8, 1e-4, 1000});
    EXPECT_LE(r.best_value, 1e-2);
}

TEST(Cobyla, TraceInvariants) {
    std::vector<double> x0{0.3, -0.7, 1.1, 0.2};
    OptimizationResult r = minimize(wavy, x0, {0.5, 1e-4, 80});
    EXPECT_EQ(r.evaluations, r.trace.size());
    EXPECT_LE(r.evaluations, 80u);
    double running = std::numeric_limits<double>::infinity();
    double best = running;
    for (const auto &e : r.trace) {
        EXPECT_EQ(e.value, wavy(e.params));
        double next = std::min(running, e.value);
        EXPECT_LE(next, running);
        running = next;
        best = std::min(best, e.value);
    }
    EXPECT_EQ(r.best_value, best);
    EXPECT_EQ(wavy(r.best_params), r.best_value);
}

TEST(Cobyla, Deterministic) {
    std::vector<double> x0{0.3, -0.7, 1.1, 0.2};
    OptimizationResult a = minimize(wavy, x0, {0.5, 1e-4, 40});
    OptimizationResult b = minimize(wavy, x0, {0.5, 1e-4, 40});
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t k = 0; k < a.trace.size(); ++k) {
        EXPECT_EQ(a.trace[k].params, b.trace[k].params);
        EXPECT_EQ(a.trace[k].value, b.trace[k].value);
    }
}

TEST(Cobyla, InitialSimplexScalesWithRhobeg) {
    // x0 is the unique minimizer, so every vertex stays anchored at x0.
    std::vector<double> x0{0.3, -0.7, 1.1, 0.2};
    auto bowl = [&](std::span<const double> x) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - x0[i]) * (x[i] - x0[i]);
        return s;
    };
    for (double rho : {0.5, 1.0}) {
        OptimizationResult r = minimize(bowl, x0, {rho, 1e-4, 5});
        ASSERT_EQ(r.trace.size(), 5u);
        EXPECT_EQ(r.trace[0].params, x0);
        for (std::size_t j = 0; j < 4; ++j) {
            auto expected = x0;
            expected[j] += rho;
            EXPECT_EQ(r.trace[j + 1].params, expected);
        }
    }
}

TEST(Cobyla, InitialSimplexStepsFromTheBestVertex) {
    // Each improving vertex becomes the base for the next coordinate step.
    std::vector<double> x0{0.0, 0.0, 0.0};
    auto descending = [](std::span<const double> x) { return -(x[0] + x[1] + x[2]); };
    OptimizationResult r = minimize(descending, x0, {0.5, 1e-4, 4});
    ASSERT_EQ(r.trace.size(), 4u);
    EXPECT_EQ(r.trace[1].params, (std::vector<double>{0.5, 0.0, 0.0}));
    EXPECT_EQ(r.trace[2].params, (std::vector<double>{0.5, 0.5, 0.0}));
    EXPECT_EQ(r.trace[3].params, (std::vector<double>{0.5, 0.5, 0.5}));
}

TEST(Cobyla, RejectsBadConfigAndNonFiniteValues) {
    std::vector<double> x0{0.0, 0.0};
    EXPECT_THROW(minimize(quadratic, x0, {0.0, 1e-4, 10}), DomainError);
    EXPECT_THROW(minimize(quadratic, x0, {0.1, 0.2, 10}), DomainError);
    EXPECT_THROW(minimize(quadratic, x0, {0.1, 1e-4, 0}), DomainError);
    auto nan_after_origin = [](std::span<const double> x) {
        return x[0] > 0 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
    };
    try {
        minimize(nan_after_origin, x0, {0.1, 1e-4, 10});
        FAIL() << "expected NonFiniteObjectiveError";
    } catch (const NonFiniteObjectiveError &e) {
        ASSERT_EQ(e.params().size(), 2u);
        EXPECT_NEAR(e.params()[0], 0.1, 1e-15);
    }
}
