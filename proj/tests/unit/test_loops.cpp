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
#include "smdec/loops.hpp"
#include "smdec/tfm.hpp"
#include "support.hpp"

namespace smdec {
namespace {

TEST(GangOfSix, ZeroPlant) {
  const TransferMatrix c{{RatFunc(Poly{1, 1}, Poly{2, 1}), RatFunc(Poly{3})}, {RatFunc(), RatFunc(Poly{0, 1})}};
  const ClosedLoopSet s = gang_of_six(TransferMatrix(2, 2), c);
  EXPECT_EQ(s.S, TransferMatrix::identity(2));
  EXPECT_TRUE(s.T.is_zero());
  EXPECT_TRUE(s.S_P.is_zero());
  EXPECT_EQ(s.S_C, c);
}

TEST(GangOfSix, ScalarIntegrator) {
  const ClosedLoopSet s = gang_of_six(TransferMatrix{{RatFunc(Poly{1}, Poly{0, 1})}}, TransferMatrix{{RatFunc(Poly{1})}});
  EXPECT_EQ(s.S(0, 0), RatFunc(Poly{0, 1}, Poly{1, 1}));
  EXPECT_EQ(s.T(0, 0), RatFunc(Poly{1}, Poly{1, 1}));
}

TEST(GangOfSix, IllPosed) {
  try {
    gang_of_six(TransferMatrix{{RatFunc(Poly{1})}}, TransferMatrix{{RatFunc(Poly{-1})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllPosed);
  }
}

TEST(GangOfSix, Invariants) {
  testing::Gen g(41);
  for (int t = 0; t < 20; ++t) {
    const auto d = testing::random_essential_design(g, 2, 1);
    const TransferMatrix p = plant_backmap(d.psm, d.u, d.v), c = controller_backmap(d.csm, d.u, d.v);
    const ClosedLoopSet s = gang_of_six(p, c);
    const auto i = TransferMatrix::identity(2);
    EXPECT_EQ(s.S + s.T, i);
    EXPECT_EQ(s.S_I + s.T_I, i);
    EXPECT_EQ(s.L * s.S, s.S * s.L);
    EXPECT_EQ(s.S_P, s.S * p);
    EXPECT_EQ(s.S_C, c * s.S);
  }
}

TEST(Transform, IdentityMatrices) {
  testing::Gen g(42);
  const auto d = testing::random_essential_design(g, 2, 1);
  const ClosedLoopSet e = gang_of_six(d.psm, d.csm);
  const ClosedLoopSet o = transform_to_original(e, PolyMatrix::identity(2), PolyMatrix::identity(2));
  for (std::size_t k = 0; k < ClosedLoopSet::kNames.size(); ++k) EXPECT_EQ(o.get(k), e.get(k));
  EXPECT_TRUE(verify_transform_identities(d.psm, d.csm, PolyMatrix::identity(2), PolyMatrix::identity(2)).all_equal());
}

TEST(Transform, ReferenceDesign1ClosedForm) {
  const ExampleDesign d1 = example_design1();
  const ClosedLoopSet e = gang_of_six(reference_psm(), d1.csm());
  const ClosedLoopSet o = transform_to_original(e, reference_u(), reference_v());
  const RatFunc t1 = e.T(0, 0), t2 = e.T(1, 1);
  const RatFunc g(Poly{90, 100, 29, 1}, Poly{10});
  EXPECT_EQ(o.T, (TransferMatrix{{t2, g * (t2 - t1)}, {RatFunc(), t1}}));
  const IdentityReport r = verify_transform_identities(reference_psm(), d1.csm(), reference_u(), reference_v());
  EXPECT_TRUE(r.all_equal());
  EXPECT_EQ(r.results.size(), 10u);
  EXPECT_FALSE(r.extra_p_variant_equal);
  EXPECT_FALSE(r.t_equals_tsm);
}

TEST(Transform, ReferenceDesign2) {
  const IdentityReport r = verify_transform_identities(reference_psm(), example_design2().csm(), reference_u(), reference_v());
  EXPECT_TRUE(r.all_equal());
  EXPECT_TRUE(r.t_equals_tsm);
}

TEST(Transform, RandomInstances) {
  testing::Gen g(43);
  for (int t = 0; t < 20; ++t) {
    const auto d = testing::random_essential_design(g, t % 2 == 0 ? 2 : 3, 2);
    EXPECT_TRUE(verify_transform_identities(d.psm, d.csm, d.u, d.v).all_equal());
  }
}

}  // namespace
}  // namespace smdec
