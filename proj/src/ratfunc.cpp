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

#include "smdec/ratfunc.hpp"

#include <cmath>
#include <sstream>

#include "smdec/error.hpp"

namespace smdec {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const Rational inv = 1 / Rational(den.lead());
  num_ = num * inv;
  den_ = den * inv;
}

std::optional<int> RatFunc::relative_degree() const noexcept {
  if (num_.is_zero()) return std::nullopt;
  return den_.deg() - num_.deg();
}

bool RatFunc::is_proper() const noexcept {
  auto r = relative_degree();
  return !r || *r >= 0;
}

bool RatFunc::is_strictly_proper() const noexcept {
  auto r = relative_degree();
  return !r || *r > 0;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of the zero function");
  // Already coprime; only the monic normalization moves.
  const Rational inv = 1 / Rational(num_.lead());
  return RatFunc(den_ * inv, num_ * inv, Reduced{});
}

Complex RatFunc::evaluate(Complex s0) const {
  const Complex d = den_.eval(s0);
  // Pole test relative to the size of the terms that were summed.
  double scale = 0.0;
  double power = 1.0;
  for (const auto& c : den_.coeffs()) {
    scale += std::abs(c.get_d()) * power;
    power *= std::abs(s0);
  }
  if (std::abs(d) <= 1e-14 * scale) {
    std::ostringstream os;
    os << "evaluation at a pole s = " << s0.real() << (s0.imag() < 0 ? "-" : "+")
       << std::abs(s0.imag()) << "j";
    throw Error(ErrorCode::kDivisionByZero, os.str());
  }
  return num_.eval(s0) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) return *this = RatFunc(num_ + rhs.num_, den_);
  const Poly g = gcd(den_, rhs.den_);
  const Poly a = exact_div(rhs.den_, g);
  const Poly b = exact_div(den_, g);
  return *this = RatFunc(num_ * a + rhs.num_ * b, den_ * a);
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFunc();
  // Cross-cancel first so the final gcd works on smaller operands.
  const Poly g1 = gcd(num_, rhs.den_);
  const Poly g2 = gcd(rhs.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(rhs.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(rhs.den_, g1);
  const Rational inv = 1 / Rational(d.lead());
  num_ = n * inv;
  den_ = d * inv;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_constant()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace smdec
