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

#include "smdec/poly_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "smdec/error.hpp"

namespace smdec {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "entry count does not match rows*cols");
  }
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(1);
  return m;
}

std::optional<int> PolyMatrix::max_degree() const {
  std::optional<int> best;
  for (const auto& p : data_) {
    if (auto d = p.degree(); d && (!best || *d > *best)) best = d;
  }
  return best;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = -p;
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomial matrix sum dimension mismatch");
  }
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) {
    std::ostringstream os;
    os << "polynomial matrix product " << a.rows_ << "x" << a.cols_ << " * " << b.rows_ << "x"
       << b.cols_;
    throw Error(ErrorCode::kDimensionMismatch, os.str());
  }
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& a) {
  PolyMatrix out = a;
  for (auto& p : out.data_) p *= c;
  return out;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void PolyMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void PolyMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Poly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!(*this)(src, j).is_zero()) (*this)(dst, j) += factor * (*this)(src, j);
  }
}

void PolyMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Poly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, src).is_zero()) (*this)(i, dst) += factor * (*this)(i, src);
  }
}

void PolyMatrix::scale_row(std::size_t r, const Rational& c) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= c;
}

Poly determinant(const PolyMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kDimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Poly::constant(1);
  PolyMatrix m = a;
  Poly prev = Poly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Poly{};
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

bool is_unimodular(const PolyMatrix& a) {
  if (!a.is_square()) return false;
  const Poly d = determinant(a);
  return !d.is_zero() && d.is_constant();
}

namespace {

PolyMatrix minor_of(const PolyMatrix& a, std::size_t skip_r, std::size_t skip_c) {
  const std::size_t n = a.rows();
  PolyMatrix m(n - 1, n - 1);
  for (std::size_t i = 0, mi = 0; i < n; ++i) {
    if (i == skip_r) continue;
    for (std::size_t j = 0, mj = 0; j < n; ++j) {
      if (j == skip_c) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

}  // namespace

PolyMatrix unimodular_inverse(const PolyMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotUnimodular, "non-square matrix is not unimodular");
  const Poly d = determinant(a);
  if (d.is_zero() || !d.is_constant()) {
    throw Error(ErrorCode::kNotUnimodular, "determinant " + d.to_string() + " is not a nonzero constant");
  }
  const std::size_t n = a.rows();
  const Rational inv = 1 / Rational(d.lead());
  PolyMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = Poly::constant(inv);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly cof = determinant(minor_of(a, j, i));
      if ((i + j) % 2 == 1) cof = -cof;
      out(i, j) = cof * inv;
    }
  }
  return out;
}

std::vector<Poly> SmithForm::invariant_factors() const {
  std::vector<Poly> d;
  for (std::size_t k = 0; k < std::min(S.rows(), S.cols()); ++k) d.push_back(S(k, k));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : invariant_factors()) r += d.is_zero() ? 0 : 1;
  return r;
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Lowest-degree nonzero entry of the trailing block starting at (k, k);
// row-major scan order gives the row-then-column tie-break.
std::optional<Pivot> find_pivot(const PolyMatrix& a, std::size_t k) {
  std::optional<Pivot> best;
  int best_deg = 0;
  for (std::size_t i = k; i < a.rows(); ++i) {
    for (std::size_t j = k; j < a.cols(); ++j) {
      const Poly& e = a(i, j);
      if (e.is_zero()) continue;
      if (!best || e.deg() < best_deg) {
        best = Pivot{i, j};
        best_deg = e.deg();
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_form(const PolyMatrix& n) {
  const std::size_t rows = n.rows();
  const std::size_t cols = n.cols();
  PolyMatrix a = n;
  PolyMatrix u = PolyMatrix::identity(rows);
  PolyMatrix v = PolyMatrix::identity(cols);

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    auto piv = find_pivot(a, k);
    if (!piv) break;
    a.swap_rows(k, piv->row);
    u.swap_rows(k, piv->row);
    a.swap_cols(k, piv->col);
    v.swap_cols(k, piv->col);

    for (;;) {
      bool leftover = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a(i, k).is_zero()) continue;
        auto [q, r] = divrem(a(i, k), a(k, k));
        a.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        leftover = leftover || !r.is_zero();
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a(k, j).is_zero()) continue;
        auto [q, r] = divrem(a(k, j), a(k, k));
        a.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        leftover = leftover || !r.is_zero();
      }
      if (leftover) {
        // A remainder of lower degree than the pivot exists; promote the
        // overall lowest-degree entry and repeat. Degrees strictly decrease.
        auto next = find_pivot(a, k);
        a.swap_rows(k, next->row);
        u.swap_rows(k, next->row);
        a.swap_cols(k, next->col);
        v.swap_cols(k, next->col);
        continue;
      }
      // Row and column are clear. The pivot must divide the trailing block;
      // otherwise fold the offending row into row k and reduce again.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = k + 1; i < rows && !bad_row; ++i) {
        for (std::size_t j = k + 1; j < cols; ++j) {
          if (!divides(a(k, k), a(i, j))) {
            bad_row = i;
            break;
          }
        }
      }
      if (!bad_row) break;
      a.add_row_multiple(k, *bad_row, Poly::constant(1));
      u.add_row_multiple(k, *bad_row, Poly::constant(1));
    }

    const Rational inv = 1 / Rational(a(k, k).lead());
    if (inv != 1) {
      a.scale_row(k, inv);
      u.scale_row(k, inv);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

}  // namespace smdec
