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

#include <gmpxx.h>

#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smdec {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Univariate polynomial in s with exact rational coefficients.
///
/// Coefficients are stored in ascending powers: coeffs()[k] multiplies s^k.
/// The highest stored coefficient is never zero; the zero polynomial is the
/// empty sequence and has no numeric degree (degree() is empty).
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> ascending);
  explicit Poly(std::vector<Rational> ascending);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int power);
  /// The indeterminate s.
  static Poly s();

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Empty for the zero polynomial.
  std::optional<int> degree() const noexcept;
  /// Degree of a nonzero polynomial; throws for zero.
  int deg() const;

  /// Coefficient of s^k, zero past the end.
  Rational coeff(std::size_t k) const;
  /// Leading coefficient; throws for zero.
  const Rational& lead() const;

  Poly monic() const;
  Poly derivative() const;

  Rational eval(const Rational& x) const;
  Complex eval(Complex x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form in descending powers, e.g. "s^2 + 10*s + 10".
  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with a = q*b + r and deg r < deg b.
struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem divrem(const Poly& a, const Poly& b);

/// Exact quotient a/b; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

bool divides(const Poly& d, const Poly& a);

/// Monic greatest common divisor. gcd(0, 0) throws.
Poly gcd(const Poly& a, const Poly& b);

/// Monic least common multiple of two nonzero polynomials.
Poly lcm(const Poly& a, const Poly& b);

/// Bezout coefficients: x*a + y*b = gcd(a, b) (monic).
struct Bezout {
  Poly gcd;
  Poly x;
  Poly y;
};

Bezout extended_gcd(const Poly& a, const Poly& b);

/// Square-free decomposition p = lead * prod f_i^i with each f_i monic,
/// square-free and pairwise coprime. Returns (f_i, i) for nonconstant f_i.
std::vector<std::pair<Poly, int>> square_free_factors(const Poly& p);

/// Exact rational written as "p/q" or "p".
std::string rational_to_string(const Rational& q);
/// Parses "p/q", "p" or a plain decimal like "-1.25"; throws kParse.
Rational parse_rational(const std::string& text);

/// Rounds a finite double to `significant` decimal digits and returns the
/// resulting terminating decimal as an exact rational.
Rational rationalize(double x, int significant = 10);

}  // namespace smdec
