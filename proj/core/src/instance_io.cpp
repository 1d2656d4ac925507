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

#include "wsvqe/instance_io.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "wsvqe/error.hpp"

namespace wsvqe {

namespace {

using json = nlohmann::ordered_json;

json split_vector(const ComplexVector &v, bool imag) {
    json out = json::array();
    for (const Complex &z : v) out.push_back(imag ? z.imag() : z.real());
    return out;
}

ComplexVector join_vector(const json &re, const json &im, std::size_t dim, const char *name) {
    if (!re.is_array() || !im.is_array() || re.size() != dim || im.size() != dim) {
        throw ParseError(std::string("instance: field ") + name + " must hold " + std::to_string(dim) + " entries", 0);
    }
    ComplexVector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = {re[k].get<double>(), im[k].get<double>()};
    return v;
}

}  // namespace

ComplexMatrix random_sparse_hermitian(std::size_t dim, double zero_probability, double bound, Rng &rng) {
    if (dim == 0) throw DomainError("random_sparse_hermitian: dimension must be positive");
    if (!(zero_probability >= 0.0 && zero_probability <= 1.0)) {
        throw DomainError("random_sparse_hermitian: zero probability must lie in [0, 1]");
    }
    if (!(bound > 0.0)) throw DomainError("random_sparse_hermitian: bound must be positive");
    ComplexMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            if (rng.uniform() < zero_probability) continue;
            if (i == j) {
                h(i, i) = rng.uniform(-bound, bound);
            } else {
                double re = rng.uniform(-bound, bound);
                double im = rng.uniform(-bound, bound);
                h(i, j) = {re, im};
                h(j, i) = {re, -im};
            }
        }
    }
    return h;
}

std::string instance_to_json(const ProblemInstance &instance) {
    const std::size_t dim = instance.h.rows();
    json h_re = json::array(), h_im = json::array();
    for (std::size_t i = 0; i < dim; ++i) {
        json row_re = json::array(), row_im = json::array();
        for (std::size_t j = 0; j < dim; ++j) {
            row_re.push_back(instance.h(i, j).real());
            row_im.push_back(instance.h(i, j).imag());
        }
        h_re.push_back(std::move(row_re));
        h_im.push_back(std::move(row_im));
    }
    json doc;
    doc["id"] = instance.id;
    doc["n"] = dim;
    doc["h_re"] = std::move(h_re);
    doc["h_im"] = std::move(h_im);
    doc["lambda_ref"] = instance.reference.value;
    doc["v_opt_re"] = split_vector(instance.reference.vector, false);
    doc["v_opt_im"] = split_vector(instance.reference.vector, true);
    doc["q3_re"] = split_vector(instance.approx_vector, false);
    doc["q3_im"] = split_vector(instance.approx_vector, true);
    doc["r_classical"] = instance.approx_ratio_classical;
    return doc.dump(1) + "\n";
}

ProblemInstance instance_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("instance: ") + e.what(), 0);
    }
    try {
        const auto dim = doc.at("n").get<std::size_t>();
        if (dim == 0) throw ParseError("instance: n must be positive", 0);
        const json &h_re = doc.at("h_re");
        const json &h_im = doc.at("h_im");
        if (h_re.size() != dim || h_im.size() != dim) throw ParseError("instance: matrix row count differs from n", 0);
        ComplexMatrix h(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (h_re[i].size() != dim || h_im[i].size() != dim) {
                throw ParseError("instance: matrix row " + std::to_string(i) + " has the wrong length", 0);
            }
            for (std::size_t j = 0; j < dim; ++j) h(i, j) = {h_re[i][j].get<double>(), h_im[i][j].get<double>()};
        }
        if (!h.is_hermitian()) throw DomainError("instance: matrix is not Hermitian");

        ProblemInstance inst;
        inst.id = doc.at("id").get<std::string>();
        inst.h = std::move(h);
        inst.reference.value = doc.at("lambda_ref").get<double>();
        inst.reference.vector = join_vector(doc.at("v_opt_re"), doc.at("v_opt_im"), dim, "v_opt");
        inst.approx_vector = join_vector(doc.at("q3_re"), doc.at("q3_im"), dim, "q3");
        inst.approx_ratio_classical = doc.at("r_classical").get<double>();
        if (std::abs(norm2(inst.approx_vector) - 1.0) > 1e-9) throw DomainError("instance: q3 is not unit norm");
        return inst;
    } catch (const json::exception &e) {
        throw ParseError(std::string("instance: ") + e.what(), 0);
    }
}

void write_instance(const std::filesystem::path &path, const ProblemInstance &instance) {
    write_file_atomic(path, instance_to_json(instance));
}

ProblemInstance read_instance(const std::filesystem::path &path) {
    try {
        return instance_from_json(read_file(path));
    } catch (const ParseError &e) {
        throw ParseError(e.message(), e.line(), path.string());
    }
}

void write_file_atomic(const std::filesystem::path &path, std::string_view contents) {
    static std::atomic<unsigned long> counter{0};
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot rename into " + path.string());
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace wsvqe
