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

#include "wsvqe/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wsvqe/error.hpp"

namespace wsvqe {

namespace {

constexpr std::size_t kMaxEigenDimension = 64;
constexpr double kPivotTolerance = 1e-12;
constexpr int kMaxShiftRetries = 3;

void require_hermitian(const ComplexMatrix &h, const char *op) {
    if (!h.is_square()) {
        throw DomainError(std::string(op) + ": matrix is not square");
    }
    if (!h.is_hermitian()) {
        throw DomainError(std::string(op) + ": matrix is not Hermitian");
    }
}

/// Cyclic Jacobi on a dense real symmetric matrix stored row-major.
/// On return `a` holds the eigenvalues on its diagonal and `v` the
/// eigenvectors as columns.
void jacobi_symmetric(std::vector<double> &a, std::vector<double> &v, std::size_t n) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; i++) {
        v[i * n + i] = 1.0;
    }
    auto at = [&](std::size_t r, std::size_t c) -> double & { return a[r * n + c]; };

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0.0;
        double total = 0.0;
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) {
                total += at(r, c) * at(r, c);
                if (r != c) {
                    off += at(r, c) * at(r, c);
                }
            }
        }
        if (off <= 1e-30 * total || off == 0.0) {
            return;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; k++) {
                    double akp = at(k, p);
                    double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; k++) {
                    double apk = at(p, k);
                    double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; k++) {
                    double vkp = v[k * n + p];
                    double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
}

struct RealEmbedding {
    std::vector<double> values;   // diagonal after Jacobi
    std::vector<double> vectors;  // columns
    std::size_t dim = 0;          // 2n
};

RealEmbedding diagonalize_embedding(const ComplexMatrix &h) {
    std::size_t n = h.rows();
    std::size_t m = 2 * n;
    std::vector<double> a(m * m);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            double re = h(r, c).real();
            double im = h(r, c).imag();
            a[r * m + c] = re;
            a[(r + n) * m + (c + n)] = re;
            a[r * m + (c + n)] = -im;
            a[(r + n) * m + c] = im;
        }
    }
    RealEmbedding out;
    out.dim = m;
    jacobi_symmetric(a, out.vectors, m);
    out.values.resize(m);
    for (std::size_t i = 0; i < m; i++) {
        out.values[i] = a[i * m + i];
    }
    return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DomainError("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &e : entries_) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
    if (!is_square()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = r; c < cols_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> x) {
    if (a.cols() != x.size()) {
        throw DomainError("matrix-vector product: dimension mismatch");
    }
    ComplexVector y(a.rows());
    for (std::size_t r = 0; r < a.rows(); r++) {
        Complex s{0.0, 0.0};
        for (std::size_t c = 0; c < a.cols(); c++) {
            s += a(r, c) * x[c];
        }
        y[r] = s;
    }
    return y;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DomainError("matrix product: dimension mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex ark = a(r, k);
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto &e : v) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw DomainError("inner: dimension mismatch");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

ComplexVector normalized(std::span<const Complex> v) {
    double n = norm2(v);
    if (n == 0.0) {
        throw DomainError("normalized: zero vector");
    }
    ComplexVector out(v.begin(), v.end());
    for (auto &e : out) {
        e /= n;
    }
    return out;
}

ComplexVector basis_vector(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DomainError("basis_vector: index out of range");
    }
    ComplexVector v(dim);
    v[index] = 1.0;
    return v;
}

ComplexVector random_unit_vector(std::size_t dim, Rng &rng) {
    ComplexVector v(dim);
    for (auto &e : v) {
        double re = rng.normal();
        double im = rng.normal();
        e = Complex{re, im};
    }
    return normalized(v);
}

EigenPair eig_hermitian_min(const ComplexMatrix &h) {
    require_hermitian(h, "eig_hermitian_min");
    if (h.rows() == 0 || h.rows() > kMaxEigenDimension) {
        throw DomainError("eig_hermitian_min: dimension must be in [1, 64]");
    }
    auto emb = diagonalize_embedding(h);
    std::size_t n = h.rows();
    std::size_t best = 0;
    for (std::size_t i = 1; i < emb.dim; i++) {
        if (emb.values[i] < emb.values[best]) {
            best = i;
        }
    }
    ComplexVector v(n);
    for (std::size_t r = 0; r < n; r++) {
        v[r] = Complex{emb.vectors[r * emb.dim + best], emb.vectors[(r + n) * emb.dim + best]};
    }
    v = normalized(v);
    // Rayleigh quotient of the recovered vector is at least as accurate as
    // the Jacobi diagonal entry.
    return EigenPair{rayleigh_quotient(h, v), std::move(v)};
}

std::vector<double> eigvals_hermitian(const ComplexMatrix &h) {
    require_hermitian(h, "eigvals_hermitian");
    if (h.rows() == 0 || h.rows() > kMaxEigenDimension) {
        throw DomainError("eigvals_hermitian: dimension must be in [1, 64]");
    }
    auto emb = diagonalize_embedding(h);
    std::sort(emb.values.begin(), emb.values.end());
    std::vector<double> out;
    out.reserve(h.rows());
    for (std::size_t i = 0; i < emb.dim; i += 2) {
        out.push_back(0.5 * (emb.values[i] + emb.values[i + 1]));
    }
    return out;
}

ComplexVector lu_solve(const ComplexMatrix &a, std::span<const Complex> b) {
    if (!a.is_square()) {
        throw DomainError("lu_solve: matrix is not square");
    }
    std::size_t n = a.rows();
    if (b.size() != n) {
        throw DomainError("lu_solve: right-hand side dimension mismatch");
    }
    double threshold = kPivotTolerance * a.frobenius_norm();
    ComplexMatrix lu = a;
    ComplexVector x(b.begin(), b.end());

    for (std::size_t col = 0; col < n; col++) {
        std::size_t pivot = col;
        double best = std::abs(lu(col, col));
        for (std::size_t r = col + 1; r < n; r++) {
            double mag = std::abs(lu(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < threshold || best == 0.0) {
            throw SingularMatrixError("lu_solve: pivot " + std::to_string(best) + " below threshold in column " +
                                      std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; c++) {
                std::swap(lu(col, c), lu(pivot, c));
            }
            std::swap(x[col], x[pivot]);
        }
        for (std::size_t r = col + 1; r < n; r++) {
            Complex factor = lu(r, col) / lu(col, col);
            if (factor == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = col; c < n; c++) {
                lu(r, c) -= factor * lu(col, c);
            }
            x[r] -= factor * x[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = x[i];
        for (std::size_t c = i + 1; c < n; c++) {
            s -= lu(i, c) * x[c];
        }
        x[i] = s / lu(i, i);
    }
    return x;
}

double gershgorin_lower_bound(const ComplexMatrix &h) {
    require_hermitian(h, "gershgorin_lower_bound");
    double mu = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < h.rows(); i++) {
        double radius = 0.0;
        for (std::size_t k = 0; k < h.cols(); k++) {
            if (k != i) {
                radius += std::abs(h(i, k));
            }
        }
        mu = std::min(mu, h(i, i).real() - radius);
    }
    return mu;
}

ComplexVector inverse_power_from(const ComplexMatrix &h, double mu, int iterations, ComplexVector start) {
    require_hermitian(h, "inverse_power");
    if (iterations < 1) {
        throw DomainError("inverse_power: at least one iteration is required");
    }
    if (start.size() != h.rows()) {
        throw DomainError("inverse_power: start vector dimension mismatch");
    }
    std::size_t n = h.rows();
    ComplexVector q = normalized(start);
    double shift = mu;
    for (int attempt = 0;; attempt++) {
        ComplexMatrix shifted = h;
        for (std::size_t i = 0; i < n; i++) {
            shifted(i, i) -= shift;
        }
        try {
            ComplexVector iterate = q;
            for (int k = 0; k < iterations; k++) {
                iterate = normalized(lu_solve(shifted, iterate));
            }
            return iterate;
        } catch (const SingularMatrixError &) {
            if (attempt >= kMaxShiftRetries) {
                throw;
            }
            shift -= 1e-6 * (1.0 + std::abs(shift));
        }
    }
}

ComplexVector inverse_power(const ComplexMatrix &h, double mu, int iterations, Rng &rng) {
    require_hermitian(h, "inverse_power");
    return inverse_power_from(h, mu, iterations, random_unit_vector(h.rows(), rng));
}

double rayleigh_quotient(const ComplexMatrix &h, std::span<const Complex> v) {
    if (!h.is_square() || h.cols() != v.size()) {
        throw DomainError("rayleigh_quotient: dimension mismatch");
    }
    return inner(v, h * v).real();
}

ComplexVector approximate_min_eigenvector(const ComplexMatrix &h, Rng &rng, int iterations) {
    return inverse_power(h, gershgorin_lower_bound(h), iterations, rng);
}

}  // namespace wsvqe
