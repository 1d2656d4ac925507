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

#ifndef WSVQE_NUMERICS_HPP
#define WSVQE_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "wsvqe/rng.hpp"

namespace wsvqe {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Structural tolerance for Hermiticity and unit-norm checks.
inline constexpr double kStructuralTolerance = 1e-12;

/// Dense row-major complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return entries_; }

    double frobenius_norm() const;

    /// max |A[i][j] - conj(A[j][i])|; infinity for non-square matrices.
    double hermitian_defect() const;
    bool is_hermitian(double tol = kStructuralTolerance) const { return hermitian_defect() <= tol; }

    ComplexMatrix adjoint() const;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> x);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

double norm2(std::span<const Complex> v);
/// Conjugate-linear in the first argument: sum conj(a_i) b_i.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
ComplexVector normalized(std::span<const Complex> v);
ComplexVector basis_vector(std::size_t dim, std::size_t index);

/// Complex vector with i.i.d. standard normal real and imaginary parts,
/// normalized to unit length.
ComplexVector random_unit_vector(std::size_t dim, Rng &rng);

struct EigenPair {
    double value = 0.0;
    ComplexVector vector;
};

/// Smallest eigenvalue and a unit eigenvector of a Hermitian matrix.
///
/// H = A + iB is embedded into the real symmetric [[A, -B], [B, A]] and
/// diagonalized with cyclic Jacobi rotations. Every eigenvalue of H appears
/// twice in the embedding; a real eigenvector (u; w) yields the complex
/// eigenvector u + iw.
///
/// Throws DomainError for non-square, non-Hermitian or oversized (> 64) input.
EigenPair eig_hermitian_min(const ComplexMatrix &h);

/// All eigenvalues of a Hermitian matrix in ascending order.
std::vector<double> eigvals_hermitian(const ComplexMatrix &h);

/// Solves A x = b with partial-pivoting LU.
/// Throws SingularMatrixError if a pivot magnitude drops below 1e-12 * ||A||_F.
ComplexVector lu_solve(const ComplexMatrix &a, std::span<const Complex> b);

/// min_i (H_ii - sum_{k != i} |H_ik|), a lower bound on every eigenvalue.
double gershgorin_lower_bound(const ComplexMatrix &h);

/// Inverse iteration with shift `mu`: z = (H - mu I)^{-1} q, q = z / ||z||,
/// repeated `iterations` times from a random complex unit start vector.
///
/// A singular shift is retried with mu <- mu - 1e-6 (1 + |mu|), at most
/// three times, before SingularMatrixError propagates.
ComplexVector inverse_power(const ComplexMatrix &h, double mu, int iterations, Rng &rng);

/// Same iteration from a caller-supplied start vector.
ComplexVector inverse_power_from(const ComplexMatrix &h, double mu, int iterations, ComplexVector start);

/// Re(v^dagger H v) for a unit vector v.
double rayleigh_quotient(const ComplexMatrix &h, std::span<const Complex> v);

/// Gershgorin bound followed by `iterations` steps of inverse iteration.
ComplexVector approximate_min_eigenvector(const ComplexMatrix &h, Rng &rng, int iterations = 3);

}  // namespace wsvqe

#endif  // WSVQE_NUMERICS_HPP
