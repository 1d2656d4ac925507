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

#include "wsvqe/summary.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>

#include "json.hpp"
#include "wsvqe/error.hpp"
#include "wsvqe/instance_io.hpp"

namespace wsvqe {

namespace {

constexpr std::size_t kFixedColumns = 8;

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_double(std::string_view field, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("not a number: '" + std::string(field) + "'", line);
    }
    return v;
}

std::uint64_t parse_count(std::string_view field, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("not a count: '" + std::string(field) + "'", line);
    }
    return v;
}

}  // namespace

std::vector<TraceRecord> parse_trace_csv(std::string_view text) {
    std::vector<TraceRecord> records;
    std::size_t line_no = 0;
    std::size_t columns = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto fields = split_fields(line);
        if (line_no == 1) {
            if (fields.size() < kFixedColumns || fields[0] != "phase" || fields[7] != "ratio_exact") {
                throw ParseError("trace header not recognised", line_no);
            }
            columns = fields.size();
            continue;
        }
        if (line.empty()) continue;
        if (fields.size() != columns) {
            throw ParseError("expected " + std::to_string(columns) + " fields, found " + std::to_string(fields.size()),
                             line_no);
        }
        TraceRecord r;
        if (fields[0] == "ACAE") {
            r.phase = Phase::Acae;
        } else if (fields[0] == "VQE") {
            r.phase = Phase::Vqe;
        } else {
            throw ParseError("unknown phase '" + std::string(fields[0]) + "'", line_no);
        }
        r.eval_index = parse_count(fields[1], line_no);
        r.axis_iteration = parse_count(fields[2], line_no);
        r.cumulative_shots = parse_count(fields[3], line_no);
        r.objective = parse_double(fields[4], line_no);
        r.exact_expectation = parse_double(fields[5], line_no);
        if (!fields[6].empty()) r.ratio_objective = parse_double(fields[6], line_no);
        r.ratio_exact = parse_double(fields[7], line_no);
        for (std::size_t k = kFixedColumns; k < fields.size(); ++k) r.params.push_back(parse_double(fields[k], line_no));
        records.push_back(std::move(r));
    }
    if (line_no == 0) throw ParseError("empty trace", 0);
    return records;
}

std::vector<double> best_so_far_curve(const std::vector<TraceRecord> &records, std::size_t first,
                                      std::size_t last) {
    if (first > last) throw DomainError("best_so_far_curve: empty iteration range");
    std::vector<const TraceRecord *> vqe;
    for (const TraceRecord &r : records) {
        if (r.phase == Phase::Vqe) vqe.push_back(&r);
    }
    if (vqe.empty()) throw DomainError("best_so_far_curve: trace has no VQE records");
    std::stable_sort(vqe.begin(), vqe.end(),
                     [](const TraceRecord *a, const TraceRecord *b) { return a->axis_iteration < b->axis_iteration; });

    std::vector<double> curve;
    curve.reserve(last - first + 1);
    const TraceRecord *best = vqe.front();
    std::size_t k = 0;
    for (std::size_t i = first; i <= last; ++i) {
        for (; k < vqe.size() && vqe[k]->axis_iteration <= i; ++k) {
            if (vqe[k]->exact_expectation < best->exact_expectation) best = vqe[k];
        }
        curve.push_back(best->ratio_exact);
    }
    return curve;
}

double median(std::vector<double> values) {
    if (values.empty()) throw DomainError("median: no values");
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double MedianCurves::at(std::string_view strategy, std::size_t i) const {
    auto it = std::find(strategies.begin(), strategies.end(), strategy);
    if (it == strategies.end()) throw DomainError("MedianCurves: unknown strategy " + std::string(strategy));
    if (i < first || i > last) throw DomainError("MedianCurves: iteration out of range");
    return medians[static_cast<std::size_t>(it - strategies.begin())][i - first];
}

MedianCurves summarize(const std::vector<LabeledTrace> &traces, std::size_t first, std::size_t last) {
    if (traces.empty()) throw DomainError("summarize: no traces");
    std::map<std::string, std::vector<std::vector<double>>> by_strategy;
    for (const LabeledTrace &t : traces) by_strategy[t.strategy].push_back(best_so_far_curve(t.records, first, last));

    MedianCurves out;
    out.first = first;
    out.last = last;
    for (auto &[label, curves] : by_strategy) {
        std::vector<double> med(last - first + 1);
        for (std::size_t i = 0; i < med.size(); ++i) {
            std::vector<double> column;
            column.reserve(curves.size());
            for (const auto &c : curves) column.push_back(c[i]);
            med[i] = median(std::move(column));
        }
        out.strategies.push_back(label);
        out.medians.push_back(std::move(med));
        out.run_counts.push_back(curves.size());
    }
    return out;
}

std::vector<LabeledTrace> load_traces(const std::filesystem::path &dir) {
    if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> manifests;
    for (const auto &entry : std::filesystem::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().filename() == "manifest.json") manifests.push_back(entry.path());
    }
    if (manifests.empty()) throw IoError("no manifest.json under " + dir.string());
    std::sort(manifests.begin(), manifests.end());

    std::string hash;
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<LabeledTrace> out;
    for (const auto &m : manifests) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(m));
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(e.what(), 0, m.string());
        }
        std::string h = doc.value("config_hash", "");
        if (hash.empty()) {
            hash = h;
        } else if (h != hash) {
            throw DomainError("summarize: " + m.string() + " has config hash " + h + " but an earlier manifest has " +
                              hash + "; refusing to mix configurations");
        }
        for (const auto &t : doc.at("traces")) {
            LabeledTrace lt;
            lt.strategy = t.at("strategy").get<std::string>();
            lt.instance = t.at("instance").get<std::string>();
            if (!seen.emplace(lt.strategy, lt.instance).second) {
                throw DomainError("summarize: run " + lt.strategy + "/" + lt.instance + " appears twice");
            }
            auto path = m.parent_path() / t.at("path").get<std::string>();
            try {
                lt.records = parse_trace_csv(read_file(path));
            } catch (const ParseError &e) {
                throw ParseError(e.message(), e.line(), path.string());
            }
            out.push_back(std::move(lt));
        }
    }
    return out;
}

MedianCurves summarize_directory(const std::filesystem::path &dir, std::size_t first, std::size_t last) {
    return summarize(load_traces(dir), first, last);
}

std::string curves_to_csv(const MedianCurves &curves) {
    std::string out = "iteration";
    for (const auto &s : curves.strategies) out += "," + s;
    out += "\n";
    char buf[32];
    for (std::size_t i = curves.first; i <= curves.last; ++i) {
        out += std::to_string(i);
        for (const auto &m : curves.medians) {
            std::snprintf(buf, sizeof buf, ",%.17g", m[i - curves.first]);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

}  // namespace wsvqe
