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

#include "brc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace brc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += aik * rhs(k, j);
        }
    return r;
}

double Matrix::sup_norm() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

namespace {

double det_lu(Matrix a) {
    const std::size_t n = a.rows();
    double d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

}  // namespace

double det(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
    switch (a.rows()) {
        case 0: return 1.0;
        case 1: return a(0, 0);
        case 2: return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        case 3:
            return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                   a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                   a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        default: return det_lu(a);
    }
}

bool lu_solve(Matrix a, std::span<double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("lu_solve: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) return false;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            b[i] -= f * b[k];
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * b[j];
        b[ii] = s / a(ii, ii);
    }
    return true;
}

std::optional<Matrix> cholesky(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("cholesky: matrix not square");
    Matrix L(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            if (i == j) {
                if (s <= 0.0) return std::nullopt;
                L(i, i) = std::sqrt(s);
            } else {
                L(i, j) = s / L(j, j);
            }
        }
    }
    return L;
}

std::vector<double> symmetric_eigenvalues(Matrix a, Matrix* vecs) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("symmetric_eigenvalues: matrix not square");
    Matrix v = Matrix::identity(n);

    // Cyclic Jacobi. Converges quadratically; a fixed sweep cap is ample
    // at these sizes.
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off <= 1e-30 * std::max(1.0, a.sup_norm() * a.sup_norm())) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    std::vector<double> eig(n);
    Matrix sorted(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        eig[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) sorted(i, j) = v(i, order[j]);
    }
    if (vecs) *vecs = sorted;
    return eig;
}

std::optional<GeneralizedEig> generalized_symmetric_eig(const Matrix& h, const Matrix& g) {
    const std::size_t n = g.rows();
    auto L = cholesky(g);
    if (!L) return std::nullopt;

    // B = L^{-1} h L^{-T}, built by two triangular solves.
    Matrix B = h;
    for (std::size_t j = 0; j < n; ++j) {  // forward-solve each column
        for (std::size_t i = 0; i < n; ++i) {
            double s = B(i, j);
            for (std::size_t k = 0; k < i; ++k) s -= (*L)(i, k) * B(k, j);
            B(i, j) = s / (*L)(i, i);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {  // then each row against L^T
        for (std::size_t j = 0; j < n; ++j) {
            double s = B(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= B(i, k) * (*L)(j, k);
            B(i, j) = s / (*L)(j, j);
        }
    }

    Matrix y;
    GeneralizedEig out;
    out.values = symmetric_eigenvalues(B, &y);

    // Back-transform eigenvectors: v = L^{-T} y.
    out.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t ii = n; ii-- > 0;) {
            double s = y(ii, j);
            for (std::size_t k = ii + 1; k < n; ++k) s -= (*L)(k, ii) * out.vectors(k, j);
            out.vectors(ii, j) = s / (*L)(ii, ii);
        }
    }
    return out;
}

std::vector<double> singular_values(const Matrix& a) {
    const bool tall = a.rows() >= a.cols();
    const Matrix at = a.transposed();
    const Matrix gram = tall ? at * a : a * at;
    std::vector<double> eig = symmetric_eigenvalues(gram);
    std::vector<double> sv;
    sv.reserve(eig.size());
    for (auto it = eig.rbegin(); it != eig.rend(); ++it) sv.push_back(std::sqrt(std::max(0.0, *it)));
    return sv;
}

}  // namespace brc
