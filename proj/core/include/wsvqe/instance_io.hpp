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

#ifndef WSVQE_INSTANCE_IO_HPP
#define WSVQE_INSTANCE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "wsvqe/numerics.hpp"
#include "wsvqe/pipeline.hpp"
#include "wsvqe/rng.hpp"

namespace wsvqe {

/// Sparse random Hermitian matrix. Only slots with i <= j are sampled: each
/// is zero with probability `zero_probability`, otherwise uniform in
/// [-bound, bound] (real on the diagonal, complex above it). The lower
/// triangle mirrors the conjugate, so the result is exactly Hermitian.
ComplexMatrix random_sparse_hermitian(std::size_t dim, double zero_probability, double bound, Rng &rng);

/// Instance file layout: {id, n, h_re, h_im, lambda_ref, v_opt_re, v_opt_im,
/// q3_re, q3_im, r_classical}; n is the matrix dimension.
std::string instance_to_json(const ProblemInstance &instance);

/// Inverse of instance_to_json. Stored values are taken as-is; the
/// Hermitian and unit-norm invariants are checked.
ProblemInstance instance_from_json(std::string_view text);

void write_instance(const std::filesystem::path &path, const ProblemInstance &instance);
ProblemInstance read_instance(const std::filesystem::path &path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path &path, std::string_view contents);

std::string read_file(const std::filesystem::path &path);

}  // namespace wsvqe

#endif  // WSVQE_INSTANCE_IO_HPP
