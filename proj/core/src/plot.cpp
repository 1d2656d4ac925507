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

#include "wsvqe/plot.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "wsvqe/error.hpp"

namespace wsvqe {

namespace {

constexpr std::array<const char *, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

// Viridis sampled at nine stops.
constexpr std::array<std::array<int, 3>, 9> kViridis = {{{68, 1, 84},
                                                         {71, 44, 122},
                                                         {59, 81, 139},
                                                         {44, 113, 142},
                                                         {33, 144, 141},
                                                         {39, 173, 129},
                                                         {92, 200, 99},
                                                         {170, 220, 50},
                                                         {253, 231, 37}}};

std::string fmt(const char *pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string num(double v) { return fmt("%.2f", v); }

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string color(double t) {
    if (!std::isfinite(t)) return "#cccccc";
    t = std::clamp(t, 0.0, 1.0) * (kViridis.size() - 1);
    std::size_t k = std::min(static_cast<std::size_t>(t), kViridis.size() - 2);
    double w = t - static_cast<double>(k);
    char buf[8];
    int rgb[3];
    for (int c = 0; c < 3; ++c) {
        rgb[c] = static_cast<int>(std::lround((1 - w) * kViridis[k][c] + w * kViridis[k + 1][c]));
    }
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool empty() const { return lo > hi; }
    double scale(double v) const { return hi > lo ? (v - lo) / (hi - lo) : 0.5; }
};

}  // namespace

CsvTable parse_numeric_csv(std::string_view text) {
    CsvTable table;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) {
            if (line_no == 1) throw ParseError("missing header", line_no);
            continue;
        }
        std::vector<std::string_view> fields;
        for (std::size_t start = 0;;) {
            std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (line_no == 1) {
            for (auto f : fields) table.header.emplace_back(f);
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw ParseError("expected " + std::to_string(table.header.size()) + " fields, found " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (auto f : fields) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
                throw ParseError("not a number: '" + std::string(f) + "'", line_no);
            }
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
    return table;
}

std::string line_chart_svg(const std::vector<Series> &series, const ChartLabels &labels) {
    if (series.empty()) throw DomainError("line chart: no series");
    Range xr, yr;
    for (const Series &s : series) {
        if (s.x.empty() || s.x.size() != s.y.size()) {
            throw DomainError("line chart: series '" + s.label + "' is empty or ragged");
        }
        for (double v : s.x) xr.add(v);
        for (double v : s.y) yr.add(v);
    }
    if (xr.empty() || yr.empty()) throw DomainError("line chart: no finite points");

    const double w = 720, h = 440, left = 70, right = 190, top = 40, bottom = 50;
    const double pw = w - left - right, ph = h - top - bottom;
    auto px = [&](double x) { return left + xr.scale(x) * pw; };
    auto py = [&](double y) { return top + (1.0 - yr.scale(y)) * ph; };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
                      "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(left) + "\" y=\"24\" font-size=\"14\">" + escape(labels.title) + "</text>\n";
    out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        double yv = yr.lo + (yr.hi - yr.lo) * k / 4.0;
        double xv = xr.lo + (xr.hi - xr.lo) * k / 4.0;
        out += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(yv) + 4) + "\" text-anchor=\"end\">" +
               fmt("%.3g", yv) + "</text>\n";
        out += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(top + ph + 16) + "\" text-anchor=\"middle\">" +
               fmt("%.4g", xv) + "</text>\n";
    }
    out += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(h - 12) + "\" text-anchor=\"middle\">" +
           escape(labels.x_axis) + "</text>\n";
    out += "<text transform=\"translate(16," + num(top + ph / 2) + ") rotate(-90)\" text-anchor=\"middle\">" +
           escape(labels.y_axis) + "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const Series &s = series[k];
        const char *c = kPalette[k % kPalette.size()];
        out += "<polyline fill=\"none\" stroke=\"" + std::string(c) + "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t p = 0; p < s.x.size(); ++p) {
            if (!std::isfinite(s.x[p]) || !std::isfinite(s.y[p])) continue;
            if (p > 0) out += ' ';
            out += num(px(s.x[p])) + "," + num(py(s.y[p]));
        }
        out += "\"/>\n";
        double ly = top + 14 + 18.0 * static_cast<double>(k);
        out += "<line x1=\"" + num(left + pw + 12) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" + num(left + pw + 32) +
               "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + c + "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + num(left + pw + 38) + "\" y=\"" + num(ly) + "\">" + escape(s.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::vector<Series> series_from_table(const CsvTable &table) {
    if (table.header.size() < 2) throw DomainError("line chart: need an x column and at least one series");
    std::vector<Series> out;
    for (std::size_t c = 1; c < table.header.size(); ++c) {
        Series s;
        s.label = table.header[c];
        for (const auto &row : table.rows) {
            s.x.push_back(row[0]);
            s.y.push_back(row[c]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

LandscapeGrid grid_from_table(const CsvTable &table) {
    static const std::vector<std::string> expected = {"theta_i",      "theta_j",    "expectation",
                                                      "est_fidelity", "fid_approx", "fid_opt"};
    if (table.header != expected) throw ParseError("landscape header not recognised", 1);
    auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.rows.size()))));
    if (side == 0 || side * side != table.rows.size()) {
        throw ParseError("landscape row count " + std::to_string(table.rows.size()) + " is not a square", 0);
    }
    LandscapeGrid grid;
    grid.side = side;
    for (const auto &r : table.rows) grid.points.push_back({r[0], r[1], r[2], r[3], r[4], r[5]});
    return grid;
}

std::string landscape_svg(const LandscapeGrid &grid, const std::string &title) {
    if (grid.side == 0 || grid.points.size() != grid.side * grid.side) {
        throw DomainError("heatmap: grid is empty or not square");
    }
    struct Panel {
        const char *name;
        double LandscapePoint::*field;
    };
    const std::array<Panel, 4> panels = {{{"expectation", &LandscapePoint::expectation},
                                          {"estimated fidelity", &LandscapePoint::est_fidelity},
                                          {"fidelity to approx.", &LandscapePoint::fid_approx},
                                          {"fidelity to opt.", &LandscapePoint::fid_opt}}};
    const double cell = 200.0 / static_cast<double>(grid.side);
    const double panel_w = 280, top = 50, map = 200;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(panel_w * 4 + 20) +
                      "\" height=\"" + num(top + map + 50) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"20\" y=\"20\" font-size=\"14\">" + escape(title) + "</text>\n";
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const Panel &p = panels[k];
        Range r;
        for (const auto &pt : grid.points) r.add(pt.*(p.field));
        const double x0 = 20 + panel_w * static_cast<double>(k);
        out += "<g>\n<text x=\"" + num(x0) + "\" y=\"" + num(top - 8) + "\">" + p.name + "</text>\n";
        for (std::size_t a = 0; a < grid.side; ++a) {
            for (std::size_t b = 0; b < grid.side; ++b) {
                const LandscapePoint &pt = grid.points[a * grid.side + b];
                // theta_i runs along x, theta_j upward along y.
                double x = x0 + cell * static_cast<double>(a);
                double y = top + map - cell * static_cast<double>(b + 1);
                out += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cell + 0.05) +
                       "\" height=\"" + num(cell + 0.05) + "\" fill=\"" + color(r.scale(pt.*(p.field))) + "\"/>\n";
            }
        }
        const double bx = x0 + map + 10;
        for (int s = 0; s < 20; ++s) {
            out += "<rect x=\"" + num(bx) + "\" y=\"" + num(top + map - 10.0 * (s + 1)) +
                   "\" width=\"12\" height=\"10.05\" fill=\"" + color(s / 19.0) + "\"/>\n";
        }
        std::string lo = r.empty() ? "n/a" : fmt("%.3g", r.lo);
        std::string hi = r.empty() ? "n/a" : fmt("%.3g", r.hi);
        out += "<text class=\"cbar-max\" x=\"" + num(bx + 16) + "\" y=\"" + num(top + 8) + "\">" + hi + "</text>\n";
        out += "<text class=\"cbar-min\" x=\"" + num(bx + 16) + "\" y=\"" + num(top + map) + "\">" + lo + "</text>\n";
        out += "<text x=\"" + num(x0 + map / 2) + "\" y=\"" + num(top + map + 18) +
               "\" text-anchor=\"middle\">theta_i</text>\n</g>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render_csv(std::string_view text, const std::string &title) {
    CsvTable table = parse_numeric_csv(text);
    if (!table.header.empty() && table.header.front() == "theta_i") {
        return landscape_svg(grid_from_table(table), title);
    }
    return line_chart_svg(series_from_table(table), ChartLabels{title});
}

}  // namespace wsvqe
