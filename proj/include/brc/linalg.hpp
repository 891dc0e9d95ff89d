/*
 * Copyright 2026 The brcaustics Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BRC_LINALG_HPP
#define BRC_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace brc {

/// Dense row-major matrix for the small systems that show up here
/// (fundamental forms, Hessians, Jacobians; never larger than ~6x6).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;

    double sup_norm() const;  // max |a_ij|

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// Determinant: direct cofactor expansion for n <= 3, LU with partial
/// pivoting above that.
double det(const Matrix& a);

/// Solve a*x = b in place (b becomes x). Returns false on a singular pivot.
bool lu_solve(Matrix a, std::span<double> b);

/// Lower Cholesky factor of a symmetric matrix. Empty if not positive
/// definite (any pivot <= 0).
std::optional<Matrix> cholesky(const Matrix& a);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. If vecs is non-null it receives the eigenvectors as columns,
/// in the same order.
std::vector<double> symmetric_eigenvalues(Matrix a, Matrix* vecs = nullptr);

struct GeneralizedEig {
    std::vector<double> values;  // ascending
    Matrix vectors;              // columns: generalized eigenvectors, h v = k g v
};

/// Solves h v = kappa g v for symmetric h and SPD g by Cholesky whitening
/// (g = L L^T, eigen-decompose L^{-1} h L^{-T}). Empty if g is not SPD.
std::optional<GeneralizedEig> generalized_symmetric_eig(const Matrix& h, const Matrix& g);

/// Singular values (descending) via the symmetric eigenproblem on the
/// smaller of A^T A / A A^T. Accurate enough for the rank checks we do.
std::vector<double> singular_values(const Matrix& a);

}  // namespace brc

#endif
