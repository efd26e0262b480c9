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

#include <string>
#include <vector>

#include "smdec/poly_matrix.hpp"
#include "smdec/roots.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec {

/// Absolute band on pole real parts treated as the imaginary axis.
inline constexpr double kDefaultPoleTol = 1e-9;

enum class PoleStatus { kStable, kUnstable, kMarginal, kFailed };
enum class Verdict { kInternallyStable, kNotStable, kMarginal };

const char* to_string(PoleStatus s);
const char* to_string(Verdict v);

struct EntryReport {
  std::size_t row = 0;
  std::size_t col = 0;
  bool proper = true;
  RootSet poles;
  /// -inf when the entry has no poles.
  double max_real_part = 0.0;
  PoleStatus status = PoleStatus::kStable;
  /// Root-finder failure text when status is kFailed.
  std::string failure;
};

/// verdict == kInternallyStable iff well_posed and every entry is proper
/// with all poles at real part < -tol. A marginal pole never upgrades to
/// stable; improper entries, unstable poles and root-finder failures all
/// give kNotStable.
struct StabilityReport {
  bool well_posed = false;
  std::vector<EntryReport> entries;
  Verdict verdict = Verdict::kNotStable;

  bool stable() const noexcept { return verdict == Verdict::kInternallyStable; }
};

/// [[(I+CP)^-1, -C(I+PC)^-1], [P(I+CP)^-1, -(I+PC)^-1]].
/// Throws kIllPosed when det(I + PC) is identically zero.
TransferMatrix internal_stability_matrix(const TransferMatrix& p, const TransferMatrix& c);

/// Membership of every entry of M in RH-infinity (well_posed is reported
/// true: there is no loop to close).
StabilityReport check_rh_inf(const TransferMatrix& m, double tol = kDefaultPoleTol);

/// Internal stability of the loop (P, C). Well-posedness means
/// det(I + PC) is not identically zero and every test-matrix entry is proper.
StabilityReport check_internal_stability(const TransferMatrix& p, const TransferMatrix& c,
                                         double tol = kDefaultPoleTol);

struct Theorem1Result {
  StabilityReport essential;
  StabilityReport original;
  /// False only for a counterexample: essential internally stable, original
  /// well-posed, original not internally stable.
  bool implication_holds = true;
};

/// Checks the loop (Psm, Csm) and its back-mapped counterpart
/// (U^-1 Psm V^-1, V Csm U).
Theorem1Result theorem1_harness(const TransferMatrix& psm, const TransferMatrix& csm,
                                const PolyMatrix& u, const PolyMatrix& v,
                                double tol = kDefaultPoleTol);

}  // namespace smdec
