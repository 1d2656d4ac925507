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

#ifndef WSVQE_SUMMARY_HPP
#define WSVQE_SUMMARY_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wsvqe/pipeline.hpp"

namespace wsvqe {

/// Parses a trace CSV produced by trace_to_csv. Malformed input raises
/// ParseError carrying the 1-based line number.
std::vector<TraceRecord> parse_trace_csv(std::string_view text);

/// Best-so-far exact ratio at each axis iteration first..last: the ratio of
/// the VQE record with the lowest exact expectation among those placed at or
/// before the iteration. Iterations before the first VQE record (the rescaled
/// pretraining prefix) carry that record's ratio.
std::vector<double> best_so_far_curve(const std::vector<TraceRecord> &records, std::size_t first = 20,
                                      std::size_t last = 100);

/// Median of the values; mean of the two middle values for even counts.
double median(std::vector<double> values);

struct LabeledTrace {
    std::string strategy;
    std::string instance;
    std::vector<TraceRecord> records;
};

struct MedianCurves {
    std::size_t first = 20;
    std::size_t last = 100;
    std::vector<std::string> strategies;       // sorted
    std::vector<std::vector<double>> medians;  // [strategy][i - first]
    std::vector<std::size_t> run_counts;       // traces per strategy

    /// Median of `strategy` at axis iteration `i`.
    double at(std::string_view strategy, std::size_t i) const;
};

/// Per strategy, per iteration, the median over instances of the
/// best-so-far exact ratio. The result does not depend on input order.
MedianCurves summarize(const std::vector<LabeledTrace> &traces, std::size_t first = 20, std::size_t last = 100);

/// Loads the traces of every manifest.json found under `dir`. Refuses
/// manifests with differing config hashes and duplicated runs.
std::vector<LabeledTrace> load_traces(const std::filesystem::path &dir);

MedianCurves summarize_directory(const std::filesystem::path &dir, std::size_t first = 20,
                                 std::size_t last = 100);

/// Columns: iteration, then one column per strategy.
std::string curves_to_csv(const MedianCurves &curves);

}  // namespace wsvqe

#endif  // WSVQE_SUMMARY_HPP
