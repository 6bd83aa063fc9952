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

#pragma once

#include <complex>
#include <vector>

#include "squeezechain/errors.hpp"

namespace squeezechain {

/// Dense complex skew-symmetric matrix, row-major. Construction through
/// set_upper keeps M = -M^T exact; from_dense validates it to 1e-12.
class SkewMatrix {
  public:
    explicit SkewMatrix(int dim);

    /// Validating constructor from a full row-major dense matrix.
    /// Throws InvalidParameterError if max|M + M^T| >= 1e-12 or the diagonal
    /// is nonzero. Off-diagonal entries are antisymmetrized exactly.
    static SkewMatrix from_dense(const std::vector<std::complex<double>>& m,
                                 int dim);

    void set_upper(int i, int j, std::complex<double> v);

    std::complex<double> operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * dim_ + j];
    }
    int dim() const { return dim_; }
    const std::vector<std::complex<double>>& data() const { return data_; }
    std::vector<std::complex<double>>& data() { return data_; }

  private:
    int dim_;
    std::vector<std::complex<double>> data_;
};

/// pf(M) by skew-symmetric tridiagonalization with partial pivoting
/// (Parlett-Reid), sign tracked through row/column interchanges.
/// Odd dimension returns exactly 0; a pivot below 1e-300 returns 0
/// (singular). pf(M)^2 = det(M).
std::complex<double> pfaffian(const SkewMatrix& m);

/// Test oracle: exact recursive expansion along the first row. Exponential
/// cost; dim <= 10 enforced (DimensionTooLargeError).
std::complex<double> pfaffian_oracle(const SkewMatrix& m);

namespace detail {

/// In-place Parlett-Reid on a row-major n x n buffer. Scalar is double or
/// std::complex<double>; the real instantiation is the hot path for the
/// phase-reduced correlator route.
template <typename Scalar>
Scalar pfaffian_inplace(Scalar* m, int n);

extern template double pfaffian_inplace<double>(double*, int);
extern template std::complex<double> pfaffian_inplace<std::complex<double>>(
    std::complex<double>*, int);

}  // namespace detail

}  // namespace squeezechain
