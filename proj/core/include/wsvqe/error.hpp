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

#ifndef WSVQE_ERROR_HPP
#define WSVQE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsvqe {

/// Raised when an argument violates an operation's precondition
/// (shape mismatch, non-Hermitian input, qubit index out of range, ...).
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by lu_solve when a pivot falls below the singularity threshold.
class SingularMatrixError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. `line()` is 1-based; 0 when not line oriented.
/// `source` names the file, when known.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, std::size_t line, const std::string &source = {})
        : std::runtime_error(compose(message, line, source)), message_(message), line_(line), source_(source) {}

    std::size_t line() const noexcept { return line_; }
    const std::string &message() const noexcept { return message_; }
    const std::string &source() const noexcept { return source_; }

   private:
    static std::string compose(const std::string &message, std::size_t line, const std::string &source) {
        std::string out = source.empty() ? "" : source + ": ";
        if (line != 0) out += "line " + std::to_string(line) + ": ";
        return out + message;
    }

    std::string message_;
    std::size_t line_;
    std::string source_;
};

/// The optimizer received NaN or infinity from the objective.
class NonFiniteObjectiveError : public std::runtime_error {
   public:
    NonFiniteObjectiveError(const std::string &message, std::vector<double> params)
        : std::runtime_error(message), params_(std::move(params)) {}

    const std::vector<double> &params() const noexcept { return params_; }

   private:
    std::vector<double> params_;
};

}  // namespace wsvqe

#endif  // WSVQE_ERROR_HPP
