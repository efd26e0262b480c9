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

#include <gtest/gtest.h>

#include "smdec/design.hpp"
#include "smdec/error.hpp"
#include "smdec/poly_matrix.hpp"
#include "smdec/smith_mcmillan.hpp"
#include "support.hpp"

namespace smdec {
namespace {

const Poly kD{100, 200, 130, 30, 1};

TEST(PolyMatrix, Products) {
  const PolyMatrix a{{Poly{1, 1}, Poly{2}}, {Poly{0, 1}, Poly{}}};
  EXPECT_EQ(a * PolyMatrix::identity(2), a);
  const PolyMatrix swap{{Poly{}, Poly{1}}, {Poly{1}, Poly{}}};
  EXPECT_EQ(swap * a, (PolyMatrix{{Poly{0, 1}, Poly{}}, {Poly{1, 1}, Poly{2}}}));
  EXPECT_THROW(a * PolyMatrix(3, 3), Error);
}

TEST(PolyMatrix, Determinant) {
  EXPECT_EQ(determinant(PolyMatrix::identity(3)), Poly({1}));
  EXPECT_EQ(determinant(reference_u()), Poly({-1}));
  EXPECT_EQ(determinant(reference_v()), Poly({-1}));
  EXPECT_THROW(determinant(PolyMatrix(2, 3)), Error);
  // 3x3 against cofactor expansion
  const PolyMatrix m{{Poly{1, 1}, Poly{2}, Poly{0, 1}},
                     {Poly{3}, Poly{0, 0, 1}, Poly{1}},
                     {Poly{1}, Poly{1, 1}, Poly{2, 1}}};
  const Poly cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  EXPECT_EQ(determinant(m), cof);
}

TEST(PolyMatrix, Unimodular) {
  EXPECT_TRUE(is_unimodular(PolyMatrix::identity(2)));
  EXPECT_FALSE(is_unimodular(PolyMatrix{{Poly{0, 1}, Poly{}}, {Poly{}, Poly{1}}}));
  EXPECT_TRUE(is_unimodular(reference_u()));
  EXPECT_TRUE(is_unimodular(reference_v()));
  EXPECT_EQ(unimodular_inverse(PolyMatrix::identity(2)), PolyMatrix::identity(2));
  EXPECT_EQ(unimodular_inverse(reference_u()) * reference_u(), PolyMatrix::identity(2));
  const PolyMatrix shear{{Poly{1}, Poly{0, 1}}, {Poly{}, Poly{1}}};
  EXPECT_EQ(unimodular_inverse(shear), (PolyMatrix{{Poly{1}, Poly{0, -1}}, {Poly{}, Poly{1}}}));
  EXPECT_THROW(unimodular_inverse(PolyMatrix{{Poly{0, 1}}}), Error);
  // sympy: V^-1 = [[10s+10, s^2+10s+10], [1, (s+9)/10]]
  EXPECT_EQ(unimodular_inverse(reference_v()),
            (PolyMatrix{{Poly{10, 10}, Poly{10, 10, 1}}, {Poly{1}, Poly{Rational(9, 10), Rational(1, 10)}}}));
}

void expect_smith_invariants(const PolyMatrix& n, const SmithForm& f) {
  EXPECT_EQ(f.U * n * f.V, f.S);
  EXPECT_TRUE(is_unimodular(f.U));
  EXPECT_TRUE(is_unimodular(f.V));
  for (std::size_t i = 0; i < f.S.rows(); ++i) {
    for (std::size_t j = 0; j < f.S.cols(); ++j) {
      if (i != j) EXPECT_TRUE(f.S(i, j).is_zero());
    }
  }
  const auto inv = f.invariant_factors();
  for (std::size_t k = 0; k < inv.size(); ++k) {
    if (!inv[k].is_zero()) EXPECT_EQ(inv[k].lead(), 1);
    if (k + 1 < inv.size() && !inv[k + 1].is_zero()) EXPECT_TRUE(divides(inv[k], inv[k + 1]));
  }
}

TEST(SmithForm, Examples) {
  const PolyMatrix a{{Poly{0, 0, 1}, Poly{}}, {Poly{}, Poly{0, 1}}};
  const SmithForm fa = smith_form(a);
  expect_smith_invariants(a, fa);
  EXPECT_EQ(fa.invariant_factors(), (std::vector<Poly>{Poly{0, 1}, Poly{0, 0, 1}}));

  const PolyMatrix r{{Poly{0, 1}, Poly{}}, {Poly{}, Poly{}}};
  const SmithForm fr = smith_form(r);
  expect_smith_invariants(r, fr);
  EXPECT_EQ(fr.rank(), 1u);
  EXPECT_EQ(fr.invariant_factors()[0], Poly({0, 1}));

  // N = d P for the two-mass plant: invariant factors (1, d)
  const PolyMatrix n{{Poly{10, 10, 1}, Poly{0, 0, -1}}, {Poly{10, 10}, Poly{10, 10, 1}}};
  const SmithForm fn = smith_form(n);
  expect_smith_invariants(n, fn);
  EXPECT_EQ(fn.invariant_factors(), (std::vector<Poly>{Poly{1}, kD}));
}

TEST(SmithForm, RandomIntegerMatrices) {
  testing::Gen g(21);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(g.integer(1, 3));
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = g.poly(g.integer(-1, 3), 4);
    }
    expect_smith_invariants(m, smith_form(m));
  }
}

TEST(SmithMcMillan, Examples) {
  const TransferMatrix diag = TransferMatrix::diagonal({RatFunc(Poly{1}, Poly{1, 1}), RatFunc(Poly{1})});
  const SmDecomposition dd = smith_mcmillan(diag);
  EXPECT_EQ(dd.diagonal_matrix(), diag);
  EXPECT_TRUE(certify(dd, diag).ok());

  const TransferMatrix p = build_example_plant(MechParams::table_one());
  const SmDecomposition dp = smith_mcmillan(p);
  EXPECT_EQ(dp.diag, (std::vector<RatFunc>{RatFunc(Poly{1}, kD), RatFunc(Poly{1})}));
  EXPECT_TRUE(certify(dp, p).ok());
  // reference (U, V) satisfy the defining relation as well
  EXPECT_EQ(TransferMatrix(reference_u()) * p * TransferMatrix(reference_v()), reference_psm());

  const RatFunc inv_s(Poly{1}, Poly{0, 1});
  const SmDecomposition ds = smith_mcmillan(TransferMatrix::diagonal({inv_s, inv_s}));
  EXPECT_EQ(ds.diag, (std::vector<RatFunc>{inv_s, inv_s}));
}

TEST(SmithMcMillan, RankDeficient) {
  const RatFunc f(Poly{1}, Poly{1, 1});
  try {
    smith_mcmillan(TransferMatrix{{f, f}, {f, f}});
    FAIL() << "expected rank deficiency";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
}

TEST(SmithMcMillan, RandomSelfConsistency) {
  testing::Gen g(22);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(g.integer(2, 3));
    TransferMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        p(i, j) = RatFunc(g.poly(g.integer(-1, 1)), g.poly(g.integer(0, n == 2 ? 2 : 1)));
      }
    }
    if (determinant(p).is_zero()) continue;
    const SmDecomposition d = smith_mcmillan(p);
    EXPECT_TRUE(certify(d, p).ok());
    const TransferMatrix back = TransferMatrix(unimodular_inverse(d.U)) * d.diagonal_matrix() *
                                TransferMatrix(unimodular_inverse(d.V));
    EXPECT_EQ(back, p);
  }
}

}  // namespace
}  // namespace smdec
