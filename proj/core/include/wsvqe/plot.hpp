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

#ifndef WSVQE_PLOT_HPP
#define WSVQE_PLOT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "wsvqe/landscape.hpp"

namespace wsvqe {

/// Header plus numeric rows. "nan" fields are accepted.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Every row must match the header width. Errors carry the line number.
CsvTable parse_numeric_csv(std::string_view text);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartLabels {
    std::string title;
    std::string x_axis = "iteration";
    std::string y_axis = "median approximation ratio";
};

/// One polyline per series with a legend. An empty series list, or a series
/// without points, raises DomainError.
std::string line_chart_svg(const std::vector<Series> &series, const ChartLabels &labels = {});

/// First column is x, every further column one series (summarize output).
std::vector<Series> series_from_table(const CsvTable &table);

/// Rebuilds a grid from landscape CSV rows; the row count must be a square.
LandscapeGrid grid_from_table(const CsvTable &table);

/// Four heatmap panels (expectation, estimated fidelity, fidelity to the
/// approximate eigenvector, fidelity to the optimum), each with its own
/// color scale labelled with the observed minimum and maximum.
std::string landscape_svg(const LandscapeGrid &grid, const std::string &title = {});

/// Picks the chart type from the CSV header and renders it.
std::string render_csv(std::string_view text, const std::string &title = {});

}  // namespace wsvqe

#endif  // WSVQE_PLOT_HPP
