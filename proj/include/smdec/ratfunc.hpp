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

#include <optional>
#include <string>

#include "smdec/poly.hpp"

namespace smdec {

/// Reduced rational function num/den.
///
/// The denominator is monic and coprime to the numerator, so two RatFunc
/// values are equal as functions iff their (num, den) pairs are identical.
/// The overall constant lives in the numerator. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor): polynomials embed.
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const Rational& c) { return RatFunc(Poly::constant(c)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  /// deg(den) - deg(num); empty for the zero function.
  std::optional<int> relative_degree() const noexcept;
  /// The zero function counts as (strictly) proper.
  bool is_proper() const noexcept;
  bool is_strictly_proper() const noexcept;

  RatFunc inverse() const;

  /// num(s0)/den(s0); throws kDivisionByZero when s0 is numerically a pole.
  Complex evaluate(Complex s0) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "s") const;

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

}  // namespace smdec
