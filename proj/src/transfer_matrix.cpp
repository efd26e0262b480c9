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

#include "smdec/transfer_matrix.hpp"

#include <sstream>

#include "smdec/error.hpp"

namespace smdec {

TransferMatrix::TransferMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

TransferMatrix::TransferMatrix(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "entry count does not match rows*cols");
  }
}

TransferMatrix::TransferMatrix(std::initializer_list<std::initializer_list<RatFunc>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

TransferMatrix::TransferMatrix(const PolyMatrix& p) : rows_(p.rows()), cols_(p.cols()) {
  data_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) data_.emplace_back(p(i, j));
  }
}

TransferMatrix TransferMatrix::identity(std::size_t n) {
  TransferMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc::constant(1);
  return m;
}

TransferMatrix TransferMatrix::diagonal(const std::vector<RatFunc>& d) {
  TransferMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool TransferMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool TransferMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool TransferMatrix::is_proper() const {
  for (const auto& e : data_) {
    if (!e.is_proper()) return false;
  }
  return true;
}

Poly TransferMatrix::common_denominator() const {
  Poly d = Poly::constant(1);
  for (const auto& e : data_) {
    if (!e.den().is_constant()) d = lcm(d, e.den());
  }
  return d;
}

TransferMatrix TransferMatrix::operator-() const {
  TransferMatrix out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

TransferMatrix operator+(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "transfer matrix sum dimension mismatch");
  }
  TransferMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

TransferMatrix operator-(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "transfer matrix difference dimension mismatch");
  }
  TransferMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.cols_ != b.rows_) {
    std::ostringstream os;
    os << "transfer matrix product " << a.rows_ << "x" << a.cols_ << " * " << b.rows_ << "x"
       << b.cols_;
    throw Error(ErrorCode::kDimensionMismatch, os.str());
  }
  TransferMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RatFunc acc;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

TransferMatrix operator*(const RatFunc& c, const TransferMatrix& a) {
  TransferMatrix out = a;
  for (auto& e : out.data_) e = c * e;
  return out;
}

namespace {

// Cheap size proxy used to pick elimination pivots with small operands.
std::size_t weight(const RatFunc& f) {
  return f.num().coeffs().size() + f.den().coeffs().size();
}

}  // namespace

RatFunc determinant(const TransferMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kDimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return RatFunc::constant(1);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  TransferMatrix m = a;
  RatFunc det = RatFunc::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> p;
    for (std::size_t i = k; i < n; ++i) {
      if (!m(i, k).is_zero() && (!p || weight(m(i, k)) < weight(m(*p, k)))) p = i;
    }
    if (!p) return RatFunc();
    if (*p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(*p, j));
      det = -det;
    }
    det *= m(k, k);
    const RatFunc inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const RatFunc f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
      }
      m(i, k) = RatFunc();
    }
  }
  return det;
}

TransferMatrix inverse(const TransferMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kSingular, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 1) {
    if (a(0, 0).is_zero()) throw Error(ErrorCode::kSingular, "singular transfer matrix");
    return TransferMatrix{{a(0, 0).inverse()}};
  }
  if (n == 2) {
    const RatFunc det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (det.is_zero()) throw Error(ErrorCode::kSingular, "singular transfer matrix");
    const RatFunc inv = det.inverse();
    return TransferMatrix{{a(1, 1) * inv, -(a(0, 1) * inv)}, {-(a(1, 0) * inv), a(0, 0) * inv}};
  }
  // Gauss-Jordan on [A | I].
  TransferMatrix m = a;
  TransferMatrix r = TransferMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> p;
    for (std::size_t i = k; i < n; ++i) {
      if (!m(i, k).is_zero() && (!p || weight(m(i, k)) < weight(m(*p, k)))) p = i;
    }
    if (!p) throw Error(ErrorCode::kSingular, "singular transfer matrix");
    if (*p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(*p, j));
        std::swap(r(k, j), r(*p, j));
      }
    }
    const RatFunc inv = m(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(k, j).is_zero()) m(k, j) *= inv;
      if (!r(k, j).is_zero()) r(k, j) *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      const RatFunc f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
        if (!r(k, j).is_zero()) r(i, j) -= f * r(k, j);
      }
    }
  }
  return r;
}

TransferMatrix block2x2(const TransferMatrix& a, const TransferMatrix& b, const TransferMatrix& c,
                        const TransferMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "inconsistent block shapes");
  }
  const std::size_t r0 = a.rows(), c0 = a.cols();
  TransferMatrix out(r0 + c.rows(), c0 + b.cols());
  auto place = [&](const TransferMatrix& blk, std::size_t ro, std::size_t co) {
    for (std::size_t i = 0; i < blk.rows(); ++i) {
      for (std::size_t j = 0; j < blk.cols(); ++j) out(ro + i, co + j) = blk(i, j);
    }
  };
  place(a, 0, 0);
  place(b, 0, c0);
  place(c, r0, 0);
  place(d, r0, c0);
  return out;
}

}  // namespace smdec
