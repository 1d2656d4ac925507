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

#ifndef WSVQE_LANDSCAPE_HPP
#define WSVQE_LANDSCAPE_HPP

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "wsvqe/ansatz.hpp"
#include "wsvqe/pipeline.hpp"
#include "wsvqe/rng.hpp"

namespace wsvqe {

struct LandscapeQuantities {
    bool expectation = true;
    bool estimated_fidelity = true;
    bool fidelity_to_approx = true;
    bool fidelity_to_opt = true;
};

/// A two-parameter slice through the ansatz parameter space.
struct LandscapeRequest {
    std::size_t axis_i = 0;
    std::size_t axis_j = 1;
    std::vector<double> frozen;  // full parameter vector; empty draws it uniformly from [-pi, pi]
    double step = std::numbers::pi / 20.0;
    ShotBudget budget;
    LandscapeQuantities quantities;
};

/// One grid point. Disabled quantities hold NaN.
struct LandscapePoint {
    double theta_i = 0.0;
    double theta_j = 0.0;
    double expectation = 0.0;
    double est_fidelity = 0.0;
    double fid_approx = 0.0;
    double fid_opt = 0.0;
};

struct LandscapeGrid {
    std::size_t side = 0;               // points per axis
    std::vector<double> frozen;         // parameters off the slice
    std::vector<LandscapePoint> points; // row-major: theta_i outer, theta_j inner
};

/// Number of grid points per axis covering [-pi, pi] inclusive at `step`.
std::size_t grid_side(double step);

/// Evaluates the slice. The n_snaps Cliffords are drawn once per request and
/// shared by every point; measurement outcomes are fresh at each point.
LandscapeGrid landscape(const ProblemInstance &instance, const AnsatzSpec &spec, const LandscapeRequest &request,
                        Rng &rng);

/// Columns: theta_i, theta_j, expectation, est_fidelity, fid_approx, fid_opt.
std::string landscape_to_csv(const LandscapeGrid &grid);

/// Index of the instance whose classical ratio is nearest `target`.
std::size_t nearest_by_classical_ratio(const std::vector<ProblemInstance> &instances, double target);

}  // namespace wsvqe

#endif  // WSVQE_LANDSCAPE_HPP
