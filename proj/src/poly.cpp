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

#include "smdec/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "smdec/error.hpp"

namespace smdec {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kSingular: return "singular";
    case ErrorCode::kNotUnimodular: return "not_unimodular";
    case ErrorCode::kRankDeficient: return "rank_deficient";
    case ErrorCode::kIllPosed: return "ill_posed";
    case ErrorCode::kPoleOnGrid: return "pole_on_grid";
    case ErrorCode::kNonConvergence: return "non_convergence";
    case ErrorCode::kUnstable: return "unstable";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

Poly::Poly(std::initializer_list<Rational> ascending) : coeffs_(ascending) {
  trim();
}

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int power) {
  if (power < 0) throw Error(ErrorCode::kInvalidArgument, "negative power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::s() { return Poly{0, 1}; }

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<int> Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

int Poly::deg() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "degree of the zero polynomial");
  }
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Poly::lead() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "leading coefficient of zero");
  }
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  const Rational inv = 1 / Rational(lead());
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * k;
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex Poly::eval(Complex x) const {
  std::complex<long double> acc = 0;
  const std::complex<long double> xl(x.real(), x.imag());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * xl + static_cast<long double>(it->get_d());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }),
          t.end());
  if (t.empty()) throw Error(ErrorCode::kParse, "empty rational literal");
  const bool decimal = t.find_first_of(".eE") != std::string::npos &&
                       t.find('/') == std::string::npos;
  if (decimal) {
    // Exact value of the written decimal, not of the nearest double.
    std::size_t epos = t.find_first_of("eE");
    std::string mant = t.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
      try {
        exp10 = std::stol(t.substr(epos + 1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "bad exponent in '" + text + "'");
      }
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant.erase(0, 1);
    }
    std::size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw Error(ErrorCode::kParse, "bad rational literal '" + text + "'");
    }
    mpz_class m(digits, 10);
    if (neg) m = -m;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    Rational out = exp10 >= 0 ? Rational(m * scale) : Rational(m, scale);
    out.canonicalize();
    return out;
  }
  Rational q;
  if (q.set_str(t, 10) != 0) {
    throw Error(ErrorCode::kParse, "bad rational literal '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Rational rationalize(double x, int significant) {
  if (!std::isfinite(x)) throw Error(ErrorCode::kInvalidArgument, "cannot rationalize non-finite value");
  if (x == 0.0) return 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", std::max(significant, 1) - 1, x);
  return parse_rational(buf);
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = deg(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << rational_to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (a.is_zero() || a.deg() < b.deg()) return {Poly{}, a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.deg();
  const int dq = a.deg() - db;
  std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
  const Rational inv_lead = 1 / Rational(b.lead());
  const auto& bc = b.coeffs();
  for (int k = dq; k >= 0; --k) {
    Rational t = r[static_cast<std::size_t>(k + db)] * inv_lead;
    if (sgn(t) == 0) continue;
    q[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return divrem(a, d).remainder.is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "gcd of two zero polynomials");
  }
  Poly x = a.monic();
  Poly y = b.monic();
  while (!y.is_zero()) {
    Poly r = divrem(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "lcm with zero polynomial");
  return exact_div(a * b, gcd(a, b)).monic();
}

Bezout extended_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "gcd of two zero polynomials");
  }
  Poly r0 = a, r1 = b;
  Poly x0 = Poly::constant(1), x1;
  Poly y0, y1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly x2 = x0 - q * x1;
    Poly y2 = y0 - q * y1;
    r0 = std::move(r1);
    r1 = std::move(r);
    x0 = std::move(x1);
    x1 = std::move(x2);
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  const Rational inv = 1 / Rational(r0.lead());
  return {r0 * inv, x0 * inv, y0 * inv};
}

std::vector<std::pair<Poly, int>> square_free_factors(const Poly& p) {
  // Yun's algorithm over a field of characteristic zero.
  std::vector<std::pair<Poly, int>> out;
  if (p.is_zero() || p.is_constant()) return out;
  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = exact_div(f, a);
  Poly c = exact_div(df, a);
  Poly d = c - b.derivative();
  int i = 1;
  while (!b.is_constant()) {
    Poly g = gcd(b, d);
    if (!g.is_constant()) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace smdec
