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

#include <algorithm>

#include "smdec/design.hpp"
#include "smdec/error.hpp"
#include "smdec/tfm.hpp"
#include "support.hpp"

namespace smdec {
namespace {

const Poly kD{100, 200, 130, 30, 1};

TEST(TransferMatrix, Algebra) {
  const TransferMatrix p = build_example_plant(MechParams::table_one());
  EXPECT_EQ(p * TransferMatrix::identity(2), p);
  EXPECT_EQ(reference_psm() * TransferMatrix::identity(2), reference_psm());
  EXPECT_EQ(p - p, TransferMatrix(2, 2));
  EXPECT_THROW(p * TransferMatrix(3, 3), Error);
  EXPECT_EQ(plant_backmap(reference_psm(), reference_u(), reference_v()), p);
  EXPECT_EQ(p.common_denominator(), kD);
}

TEST(TransferMatrix, Inverse) {
  EXPECT_EQ(inverse(TransferMatrix::identity(3)), TransferMatrix::identity(3));
  const RatFunc a(Poly{1}, Poly{1, 1}), b(Poly{2, 1}, Poly{3});
  EXPECT_EQ(inverse(TransferMatrix::diagonal({a, b})), TransferMatrix::diagonal({a.inverse(), b.inverse()}));
  const TransferMatrix m = TransferMatrix::identity(2) + TransferMatrix::diagonal({a, RatFunc()});
  EXPECT_EQ(inverse(m), TransferMatrix::diagonal({RatFunc(Poly{1, 1}, Poly{2, 1}), RatFunc(Poly{1})}));
  EXPECT_THROW(inverse(TransferMatrix{{a, a}, {a, a}}), Error);
  // 3x3 through elimination
  testing::Gen g(31);
  TransferMatrix r(3, 3);
  for (auto i = 0u; i < 3; ++i) {
    for (auto j = 0u; j < 3; ++j) r(i, j) = RatFunc(g.poly(g.integer(0, 1)), g.poly(g.integer(0, 1)));
  }
  if (!determinant(r).is_zero()) EXPECT_EQ(inverse(r) * r, TransferMatrix::identity(3));
}

TEST(Backmap, Controller) {
  const PolyMatrix u = reference_u(), v = reference_v();
  EXPECT_EQ(controller_backmap(TransferMatrix(2, 2), u, v), TransferMatrix(2, 2));
  EXPECT_EQ(controller_backmap(TransferMatrix::identity(2), u, v), TransferMatrix(v * u));
  const RatFunc c1(Poly{1}, Poly{1, 1}), c2(Poly{1}, Poly{2, 1});
  const TransferMatrix c = controller_backmap(TransferMatrix::diagonal({c1, c2}), u, v);
  // first column [(s^2+10s+10) C2; (-10s-10) C2]
  EXPECT_EQ(c(0, 0), RatFunc(Poly{10, 10, 1}) * c2);
  EXPECT_EQ(c(1, 0), RatFunc(Poly{-10, -10}) * c2);
  const RatFunc g(Poly{90, 100, 29, 1}, Poly{10});
  EXPECT_EQ(c(0, 1), RatFunc(Poly{-9, -1}, Poly{10}) * c1 + RatFunc(Poly{10, 10, 1}) * g * c2);
  EXPECT_EQ(c(1, 1), c1 + RatFunc(Poly{-10, -10}) * g * c2);
}

TEST(Properness, ReferenceAndTrivial) {
  EXPECT_EQ(properness_min_reldeg(reference_u(), reference_v()), (std::vector<int>{1, 5}));
  EXPECT_EQ(properness_min_reldeg(PolyMatrix::identity(3), PolyMatrix::identity(3)), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(properness_min_reldeg(reference_u(), Rational(-7, 2) * reference_v()), (std::vector<int>{1, 5}));
}

TEST(Properness, SoundAndTight) {
  testing::Gen g(32);
  const PolyMatrix u = reference_u(), v = reference_v();
  const auto r = properness_min_reldeg(u, v);
  for (int t = 0; t < 50; ++t) {
    std::vector<RatFunc> c(2);
    for (std::size_t k = 0; k < 2; ++k) c[k] = RatFunc(Poly{1}, g.stable_poly(r[k]));
    EXPECT_TRUE(controller_backmap(TransferMatrix::diagonal(c), u, v).is_proper());
    const auto k = static_cast<std::size_t>(g.integer(0, 1));
    c[k] = c[k] * RatFunc(Poly{g.integer(1, 5), 1});
    EXPECT_FALSE(controller_backmap(TransferMatrix::diagonal(c), u, v).is_proper());
  }
}

TEST(Transmission, Structure) {
  const auto a = transmission_structure(smith_mcmillan(TransferMatrix::diagonal({RatFunc(Poly{1}, Poly{1, 1}), RatFunc(Poly{1})})));
  ASSERT_EQ(a.transmission_poles.roots.size(), 1u);
  EXPECT_EQ(a.transmission_poles.roots[0], Complex(-1, 0));
  EXPECT_TRUE(a.transmission_zeros.empty());

  const auto p = transmission_structure(smith_mcmillan(build_example_plant(MechParams::table_one())));
  EXPECT_EQ(p.transmission_poles.total_multiplicity(), 4);
  EXPECT_LT(p.transmission_poles.max_real_part(), 0);
  EXPECT_TRUE(p.transmission_zeros.empty());

  const auto z = transmission_structure(smith_mcmillan(
      TransferMatrix::diagonal({RatFunc(Poly{0, 1}, Poly{1, 1}), RatFunc(Poly{0, 1})})));
  ASSERT_EQ(z.transmission_zeros.roots.size(), 1u);
  EXPECT_EQ(z.transmission_zeros.roots[0], Complex(0, 0));
  EXPECT_EQ(z.transmission_zeros.multiplicities[0], 2);
  ASSERT_EQ(z.transmission_poles.roots.size(), 1u);
  EXPECT_EQ(z.transmission_poles.roots[0], Complex(-1, 0));
}

TEST(Transmission, PolesInvariantUnderUnimodularMaps) {
  testing::Gen g(33);
  const TransferMatrix p = build_example_plant(MechParams::table_one());
  const RootSet base = transmission_structure(smith_mcmillan(p)).transmission_poles;
  for (int t = 0; t < 10; ++t) {
    const TransferMatrix q = TransferMatrix(g.unimodular(2, 1)) * p * TransferMatrix(g.unimodular(2, 1));
    const RootSet r = transmission_structure(smith_mcmillan(q)).transmission_poles;
    ASSERT_EQ(r.roots.size(), base.roots.size());
    for (std::size_t k = 0; k < r.roots.size(); ++k) {
      EXPECT_LT(std::abs(r.roots[k] - base.roots[k]), 1e-9);
      EXPECT_EQ(r.multiplicities[k], base.multiplicities[k]);
    }
  }
}

}  // namespace
}  // namespace smdec
