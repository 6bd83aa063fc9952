/*
 * Copyright 2026 The squeezechain authors
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

#include "squeezechain/pfaffian.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace squeezechain {

SkewMatrix::SkewMatrix(int dim)
    : dim_(dim),
      data_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    if (dim < 1) {
        throw InvalidParameterError("SkewMatrix dimension must be positive");
    }
}

SkewMatrix SkewMatrix::from_dense(const std::vector<std::complex<double>>& m,
                                  int dim) {
    if (static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) !=
        m.size()) {
        throw InvalidParameterError("dense buffer size does not match dim^2");
    }
    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            const auto sum = m[static_cast<std::size_t>(i) * dim + j] +
                             m[static_cast<std::size_t>(j) * dim + i];
            worst = std::max(worst, std::abs(sum));
        }
    }
    if (worst >= 1e-12) {
        throw InvalidParameterError(
            "matrix is not skew-symmetric: max|M + M^T| = " +
            std::to_string(worst));
    }
    SkewMatrix out(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            out.set_upper(i, j, m[static_cast<std::size_t>(i) * dim + j]);
        }
    }
    return out;
}

void SkewMatrix::set_upper(int i, int j, std::complex<double> v) {
    data_[static_cast<std::size_t>(i) * dim_ + j] = v;
    data_[static_cast<std::size_t>(j) * dim_ + i] = -v;
}

namespace detail {

namespace {

inline double abs_val(double x) { return std::abs(x); }
inline double abs_val(const std::complex<double>& x) { return std::abs(x); }

}  // namespace

// Parlett-Reid skew tridiagonalization with partial pivoting; the Pfaffian is
// the product of the eliminated pivots, sign flipped per row/column swap.
template <typename Scalar>
Scalar pfaffian_inplace(Scalar* m, int n) {
    if (n == 0) return Scalar(1);
    if (n % 2 == 1) return Scalar(0);

    Scalar result(1);
    std::vector<Scalar> tau(static_cast<std::size_t>(n));
    std::vector<Scalar> col(static_cast<std::size_t>(n));

    for (int k = 0; k + 1 < n; k += 2) {
        // pivot: largest magnitude in column k below the diagonal
        int kp = k + 1;
        double best = abs_val(m[static_cast<std::size_t>(k + 1) * n + k]);
        for (int i = k + 2; i < n; ++i) {
            const double v = abs_val(m[static_cast<std::size_t>(i) * n + k]);
            if (v > best) {
                best = v;
                kp = i;
            }
        }
        if (kp != k + 1) {
            Scalar* row_a = m + static_cast<std::size_t>(k + 1) * n;
            Scalar* row_b = m + static_cast<std::size_t>(kp) * n;
            for (int i = 0; i < n; ++i) std::swap(row_a[i], row_b[i]);
            for (int i = 0; i < n; ++i) {
                std::swap(m[static_cast<std::size_t>(i) * n + k + 1],
                          m[static_cast<std::size_t>(i) * n + kp]);
            }
            result = -result;
        }

        const Scalar pivot = m[static_cast<std::size_t>(k) * n + k + 1];
        if (abs_val(pivot) < 1e-300) return Scalar(0);  // singular
        result *= pivot;

        if (k + 2 >= n) break;
        for (int j = k + 2; j < n; ++j) {
            tau[j] = m[static_cast<std::size_t>(k) * n + j] / pivot;
            col[j] = m[static_cast<std::size_t>(j) * n + k + 1];
        }
        for (int i = k + 2; i < n; ++i) {
            const Scalar ti = tau[static_cast<std::size_t>(i)];
            const Scalar ci = col[static_cast<std::size_t>(i)];
            Scalar* row = m + static_cast<std::size_t>(i) * n;
            const Scalar* tp = tau.data();
            const Scalar* cp = col.data();
            for (int j = k + 2; j < n; ++j) {
                row[j] += ti * cp[j] - ci * tp[j];
            }
        }
    }
    return result;
}

template double pfaffian_inplace<double>(double*, int);
template std::complex<double> pfaffian_inplace<std::complex<double>>(
    std::complex<double>*, int);

}  // namespace detail

std::complex<double> pfaffian(const SkewMatrix& m) {
    std::vector<std::complex<double>> work = m.data();
    return detail::pfaffian_inplace(work.data(), m.dim());
}

namespace {

// recursive expansion along the first row over the remaining index set
std::complex<double> pfaffian_recursive(const SkewMatrix& m,
                                        std::vector<int>& idx) {
    const std::size_t n = idx.size();
    if (n == 0) return {1.0, 0.0};
    std::complex<double> acc{0.0, 0.0};
    const int i0 = idx[0];
    double sign = 1.0;
    for (std::size_t j = 1; j < n; ++j) {
        const int ij = idx[static_cast<std::size_t>(j)];
        std::vector<int> rest;
        rest.reserve(n - 2);
        for (std::size_t l = 1; l < n; ++l) {
            if (l != j) rest.push_back(idx[l]);
        }
        acc += sign * m(i0, ij) * pfaffian_recursive(m, rest);
        sign = -sign;
    }
    return acc;
}

}  // namespace

std::complex<double> pfaffian_oracle(const SkewMatrix& m) {
    if (m.dim() > 10) {
        throw DimensionTooLargeError(
            "pfaffian_oracle limited to dim <= 10, got " +
            std::to_string(m.dim()));
    }
    if (m.dim() % 2 == 1) return {0.0, 0.0};
    std::vector<int> idx(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return pfaffian_recursive(m, idx);
}

}  // namespace squeezechain
