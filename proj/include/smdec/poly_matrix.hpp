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

#include "smdec/poly.hpp"

namespace smdec {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);
  PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  /// Largest entry degree; empty when every entry is zero.
  std::optional<int> max_degree() const;

  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Rational& c, const PolyMatrix& a);

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Elementary operations used by the Smith reduction.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Poly& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Poly& factor);
  void scale_row(std::size_t r, const Rational& c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// Fraction-free (Bareiss) determinant over Q[s]. Throws for non-square.
Poly determinant(const PolyMatrix& a);

/// True iff the matrix is square with a nonzero constant determinant.
bool is_unimodular(const PolyMatrix& a);

/// Polynomial inverse adj(A)/det(A); throws kNotUnimodular otherwise.
PolyMatrix unimodular_inverse(const PolyMatrix& a);

/// Result of the Smith reduction: U * N * V == S.
struct SmithForm {
  PolyMatrix U;
  PolyMatrix S;
  PolyMatrix V;

  /// Diagonal of S (length min(rows, cols)).
  std::vector<Poly> invariant_factors() const;
  /// Number of nonzero invariant factors.
  std::size_t rank() const;
};

/// Smith normal form by elementary row and column operations.
///
/// Pivots are the lowest-degree nonzero entry of the trailing block, ties
/// broken by smallest row then smallest column. Each pivot is reduced until
/// it clears its row and column and divides every remaining entry, so the
/// monic invariant factors satisfy d_i | d_{i+1}. Zero factors (rank
/// deficiency) trail. U and V are products of the elementary operations and
/// therefore unimodular.
SmithForm smith_form(const PolyMatrix& n);

}  // namespace smdec
