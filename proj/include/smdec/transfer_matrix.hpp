/*
 * Copyright 2026 The smdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "smdec/poly_matrix.hpp"
#include "smdec/ratfunc.hpp"

namespace smdec {

/// Dense row-major matrix of reduced rational functions.
class TransferMatrix {
 public:
  TransferMatrix() = default;
  TransferMatrix(std::size_t rows, std::size_t cols);
  TransferMatrix(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries);
  TransferMatrix(std::initializer_list<std::initializer_list<RatFunc>> rows);
  explicit TransferMatrix(const PolyMatrix& p);

  static TransferMatrix identity(std::size_t n);
  static TransferMatrix diagonal(const std::vector<RatFunc>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const std::vector<RatFunc>& entries() const noexcept { return data_; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_proper() const;

  /// Least common multiple of all entry denominators (monic).
  Poly common_denominator() const;

  TransferMatrix operator-() const;
  friend TransferMatrix operator+(const TransferMatrix& a, const TransferMatrix& b);
  friend TransferMatrix operator-(const TransferMatrix& a, const TransferMatrix& b);
  friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b);
  friend TransferMatrix operator*(const RatFunc& c, const TransferMatrix& a);

  friend bool operator==(const TransferMatrix& a, const TransferMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> data_;
};

/// Determinant as a rational function (Gaussian elimination over Q(s)).
RatFunc determinant(const TransferMatrix& a);

/// Exact inverse; throws kSingular when det(A) is the zero function.
TransferMatrix inverse(const TransferMatrix& a);

/// [[a, b], [c, d]] from four equally shaped blocks.
TransferMatrix block2x2(const TransferMatrix& a, const TransferMatrix& b, const TransferMatrix& c,
                        const TransferMatrix& d);

}  // namespace smdec
