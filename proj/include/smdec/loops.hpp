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

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smdec/poly_matrix.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec {

/// Output-side and input-side closed-loop maps of the loop (P, C):
///   L = PC,  S = (I+L)^-1,  T = L S,  S_P = S P,  S_C = C S,
///   L_I = CP, S_I = (I+L_I)^-1, T_I = S_I L_I, S_PI = P S_I, S_CI = S_I C.
struct ClosedLoopSet {
  TransferMatrix L, S, T, S_P, S_C;
  TransferMatrix L_I, S_I, T_I, S_PI, S_CI;

  static constexpr std::array<std::string_view, 10> kNames = {
      "L", "S", "T", "S_P", "S_C", "L_I", "S_I", "T_I", "S_PI", "S_CI"};

  /// Member by position in kNames.
  const TransferMatrix& get(std::size_t index) const;
};

/// All ten maps, exact. Throws kIllPosed when det(I + PC) is identically zero.
ClosedLoopSet gang_of_six(const TransferMatrix& p, const TransferMatrix& c);

/// Maps an essential-domain set to the original domain:
///   L, S, T   -> U^-1 X U        S_P, S_PI -> U^-1 X V^-1
///   S_C, S_CI -> V X U           L_I, S_I, T_I -> V X V^-1
ClosedLoopSet transform_to_original(const ClosedLoopSet& essential, const PolyMatrix& u,
                                    const PolyMatrix& v);

/// Input process sensitivity in the variant U^-1 * P * S_PI^SM * V^-1, with
/// an extra plant factor. Kept only so the identity check can show it fails.
TransferMatrix input_process_sensitivity_extra_p(const ClosedLoopSet& essential,
                                                 const TransferMatrix& p, const PolyMatrix& u,
                                                 const PolyMatrix& v);

/// Per-identity exact comparison between the mapped essential set and the
/// set computed directly from (U^-1 Psm V^-1, V Csm U).
struct IdentityReport {
  std::vector<std::pair<std::string, bool>> results;
  /// Outcome for the extra-P variant of S_PI.
  bool extra_p_variant_equal = false;
  /// Original-domain T equals the essential T^SM entrywise.
  bool t_equals_tsm = false;

  bool all_equal() const;
};

IdentityReport verify_transform_identities(const TransferMatrix& psm, const TransferMatrix& csm,
                                           const PolyMatrix& u, const PolyMatrix& v);

}  // namespace smdec
