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

// Seeded generators shared by the unit and acceptance tests.

#pragma once

#include <random>
#include <vector>

#include "smdec/loops.hpp"
#include "smdec/poly_matrix.hpp"
#include "smdec/stability.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex complex(double scale = 1.0) { return {real(-scale, scale), real(-scale, scale)}; }

  /// Nonzero integer in [-mag, mag].
  int nonzero(int mag) {
    int v = 0;
    while (v == 0) v = integer(-mag, mag);
    return v;
  }

  /// Small-integer polynomial of exact degree deg (zero polynomial when deg < 0).
  Poly poly(int deg, int mag = 5) {
    if (deg < 0) return {};
    std::vector<Rational> c;
    for (int k = 0; k < deg; ++k) c.emplace_back(integer(-mag, mag));
    c.emplace_back(nonzero(mag));
    return Poly(std::move(c));
  }

  /// Monic polynomial with real roots in [-hi, -lo], exact.
  Poly stable_poly(int deg, int lo = 1, int hi = 6) {
    Poly p{1};
    for (int k = 0; k < deg; ++k) p *= Poly{integer(lo, hi), 1};
    return p;
  }

  /// Product of random elementary operations; unimodular by construction,
  /// entries of degree at most max_deg.
  PolyMatrix unimodular(std::size_t n, int max_deg) {
    for (;;) {
      PolyMatrix m = PolyMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i) m.scale_row(i, Rational(nonzero(3)));
      const int ops = integer(1, 2 * static_cast<int>(n));
      for (int k = 0; k < ops; ++k) {
        const auto a = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
        auto b = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 2));
        if (b >= a) ++b;
        if (integer(0, 3) == 0) m.swap_rows(a, b);
        m.add_row_multiple(a, b, poly(integer(0, max_deg), 3));
      }
      const auto d = m.max_degree();
      if (d && *d <= max_deg && *d > 0) return m;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Max over (i, j) of deg a(i, k) + deg b(k, j) for channel k.
inline int channel_degree(const PolyMatrix& a, const PolyMatrix& b, std::size_t k) {
  int best = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto da = a(i, k).degree(), db = b(k, j).degree();
      if (da && db) best = std::max(best, *da + *db);
    }
  }
  return best;
}

struct EssentialDesign {
  TransferMatrix psm;
  TransferMatrix csm;
  PolyMatrix u;
  PolyMatrix v;
};

/// Random diagonal essential loop with every SISO loop stable by the small
/// gain theorem (|P_k C_k| < 1 on the axis) and relative degrees high enough
/// that every entry of the original-domain test matrix is proper.
inline EssentialDesign stable_essential_design(Gen& g, std::size_t n, int max_deg) {
  EssentialDesign d;
  d.u = g.unimodular(n, max_deg);
  d.v = g.unimodular(n, max_deg);
  const PolyMatrix ui = unimodular_inverse(d.u), vi = unimodular_inverse(d.v);
  std::vector<RatFunc> p(n), c(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int rc = channel_degree(d.v, d.u, k);
    int rp = std::max(1, channel_degree(ui, vi, k));
    rp = std::max(rp, channel_degree(d.v, vi, k) - rc);
    rp = std::max(rp, channel_degree(ui, d.u, k) - rc);
    const Poly dp = g.stable_poly(rp), dc = g.stable_poly(rc);
    // |P(jw)| <= |P(0)| and |C(jw)| <= |C(0)| for real LHP poles, so a DC
    // loop gain below one bounds the loop gain everywhere.
    const Rational pg = dp.coeff(0) * Rational(g.nonzero(4), 4);
    const Rational cg = dc.coeff(0) * Rational(g.integer(1, 9), 10);
    p[k] = RatFunc(Poly{pg}, dp);
    c[k] = RatFunc(Poly{cg}, dc);
  }
  d.psm = TransferMatrix::diagonal(p);
  d.csm = TransferMatrix::diagonal(c);
  return d;
}

/// Random diagonal essential loop without stability or properness
/// constraints, re-drawn until both domains are well-posed.
inline EssentialDesign random_essential_design(Gen& g, std::size_t n, int max_deg) {
  for (;;) {
    EssentialDesign d;
    d.u = g.unimodular(n, max_deg);
    d.v = g.unimodular(n, max_deg);
    std::vector<RatFunc> p(n), c(n);
    for (std::size_t k = 0; k < n; ++k) {
      p[k] = RatFunc(g.poly(g.integer(0, 1)), g.poly(g.integer(1, 2)));
      c[k] = RatFunc(g.poly(g.integer(0, 1)), g.poly(g.integer(0, 1)));
    }
    d.psm = TransferMatrix::diagonal(p);
    d.csm = TransferMatrix::diagonal(c);
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = !(RatFunc(Poly{1}) + p[k] * c[k]).is_zero();
    if (ok) return d;
  }
}

}  // namespace smdec::testing
