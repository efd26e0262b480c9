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

#include "smdec/sim.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "smdec/error.hpp"
#include "smdec/freq.hpp"
#include "smdec/roots.hpp"
#include "smdec/stability.hpp"

namespace smdec {

ProperSplit split_proper(const RatFunc& f) {
  auto [q, r] = divrem(f.num(), f.den());
  return {std::move(q), RatFunc(std::move(r), f.den())};
}

namespace {

using CL = std::complex<long double>;
using Series = std::vector<CL>;

// First n Taylor coefficients of p at z, via repeated synthetic division.
Series taylor_at(const Poly& p, CL z, std::size_t n) {
  Series c;
  for (const auto& a : p.coeffs()) c.emplace_back(static_cast<long double>(a.get_d()));
  Series out;
  for (std::size_t k = 0; k < n; ++k) {
    if (c.empty()) {
      out.emplace_back(0.0L);
      continue;
    }
    // c <- c / (x - z), remainder is the k-th coefficient.
    CL carry = 0.0L;
    Series q(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = c.size(); i-- > 0;) {
      const CL v = c[i] + carry;
      if (i > 0) q[i - 1] = v;
      else out.push_back(v);
      carry = v * z;
    }
    c = std::move(q);
  }
  return out;
}

Series mul_trunc(const Series& a, const Series& b, std::size_t n) {
  Series out(n, 0.0L);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series div_trunc(const Series& a, const Series& b, std::size_t n) {
  Series out(n, 0.0L);
  for (std::size_t k = 0; k < n; ++k) {
    CL acc = k < a.size() ? a[k] : 0.0L;
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * out[k - j];
    out[k] = acc / b[0];
  }
  return out;
}

}  // namespace

std::vector<PartialFraction> partial_fractions(const RatFunc& f) {
  if (!f.is_strictly_proper()) {
    throw Error(ErrorCode::kInvalidArgument, "partial fractions need a strictly proper function");
  }
  std::vector<PartialFraction> out;
  if (f.is_zero()) return out;
  const RootSet rs = poly_roots(f.den());
  const long double lead = static_cast<long double>(f.den().lead().get_d());
  for (std::size_t r = 0; r < rs.roots.size(); ++r) {
    const int m = rs.multiplicities[r];
    if (m > kMaxPoleOrder) {
      throw Error(ErrorCode::kUnsupported, "pole multiplicity " + std::to_string(m) +
                                               " exceeds the supported order");
    }
    const auto n = static_cast<std::size_t>(m);
    const CL p(rs.roots[r].real(), rs.roots[r].imag());
    // Remaining denominator factors expanded about p.
    Series q{lead};
    for (std::size_t o = 0; o < rs.roots.size(); ++o) {
      if (o == r) continue;
      const CL d = p - CL(rs.roots[o].real(), rs.roots[o].imag());
      for (int k = 0; k < rs.multiplicities[o]; ++k) q = mul_trunc(q, Series{d, 1.0L}, n);
    }
    const Series g = div_trunc(taylor_at(f.num(), p, n), q, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (g[j] == CL(0.0L)) continue;
      out.push_back({rs.roots[r], m - static_cast<int>(j),
                     Complex(static_cast<double>(g[j].real()), static_cast<double>(g[j].imag()))});
    }
  }
  return out;
}

Complex evaluate(const std::vector<PartialFraction>& terms, Complex s) {
  Complex sum = 0.0;
  for (const auto& t : terms) sum += t.coefficient / std::pow(s - t.pole, t.order);
  return sum;
}

std::vector<double> linspace_time(double t_end, std::size_t points) {
  if (!(t_end > 0) || points < 2) throw Error(ErrorCode::kInvalidArgument, "bad time grid");
  std::vector<double> t(points);
  for (std::size_t k = 0; k < points; ++k) {
    t[k] = t_end * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  return t;
}

TimeResponse step_response(const TransferMatrix& t, std::size_t input,
                           const std::vector<double>& times, double pole_tol) {
  if (input >= t.cols()) throw Error(ErrorCode::kInvalidArgument, "input channel out of range");
  if (!t.is_proper()) throw Error(ErrorCode::kInvalidArgument, "step response needs a proper T");
  const StabilityReport rep = check_rh_inf(t, pole_tol);
  if (!rep.stable()) {
    throw Error(ErrorCode::kUnstable, std::string("step response needs a stable T, verdict ") +
                                          to_string(rep.verdict));
  }
  TimeResponse resp;
  resp.times = times;
  resp.input = input;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const RatFunc f = t(i, input) * RatFunc(Poly::constant(1), Poly::s());
    const auto terms = partial_fractions(f);
    std::vector<double> y;
    y.reserve(times.size());
    for (double tk : times) {
      Complex acc = 0.0;
      for (const auto& term : terms) {
        const double fact = term.order == 3 ? 2.0 : 1.0;
        acc += term.coefficient * std::pow(tk, term.order - 1) / fact * std::exp(term.pole * tk);
      }
      if (!std::isfinite(acc.real())) {
        throw Error(ErrorCode::kNonConvergence, "non-finite step response sample");
      }
      y.push_back(acc.real());
    }
    resp.outputs.push_back(std::move(y));
  }
  return resp;
}

void write_time_csv(std::ostream& os, const TimeResponse& r) {
  os << "time";
  for (std::size_t i = 0; i < r.outputs.size(); ++i) os << ",y" << i + 1 << "_u" << r.input + 1;
  os << '\n';
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    os << format_double(r.times[k]);
    for (const auto& y : r.outputs) os << ',' << format_double(y[k]);
    os << '\n';
  }
}

}  // namespace smdec
