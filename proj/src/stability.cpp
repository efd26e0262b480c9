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

#include "smdec/stability.hpp"

#include <cmath>
#include <limits>

#include "smdec/error.hpp"
#include "smdec/tfm.hpp"

namespace smdec {

const char* to_string(PoleStatus s) {
  switch (s) {
    case PoleStatus::kStable: return "stable";
    case PoleStatus::kUnstable: return "unstable";
    case PoleStatus::kMarginal: return "marginal";
    case PoleStatus::kFailed: return "failed";
  }
  return "failed";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kInternallyStable: return "internally_stable";
    case Verdict::kNotStable: return "not";
    case Verdict::kMarginal: return "marginal";
  }
  return "not";
}

TransferMatrix internal_stability_matrix(const TransferMatrix& p, const TransferMatrix& c) {
  if (p.rows() != c.cols() || p.cols() != c.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "plant and controller shapes do not close a loop");
  }
  TransferMatrix s_in, s_out;
  try {
    s_in = inverse(TransferMatrix::identity(c.rows()) + c * p);
    s_out = inverse(TransferMatrix::identity(p.rows()) + p * c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSingular) {
      throw Error(ErrorCode::kIllPosed, "ill-posed loop: det(I + PC) is identically zero");
    }
    throw;
  }
  return block2x2(s_in, -(c * s_out), p * s_in, -s_out);
}

namespace {

EntryReport check_entry(const RatFunc& f, std::size_t i, std::size_t j, double tol) {
  EntryReport e;
  e.row = i;
  e.col = j;
  e.proper = f.is_proper();
  e.max_real_part = -std::numeric_limits<double>::infinity();
  if (f.den().is_constant()) return e;
  try {
    e.poles = poly_roots(f.den());
  } catch (const Error& err) {
    e.status = PoleStatus::kFailed;
    e.failure = err.what();
    return e;
  }
  e.max_real_part = e.poles.max_real_part();
  if (e.max_real_part > tol) {
    e.status = PoleStatus::kUnstable;
  } else if (e.max_real_part >= -tol) {
    e.status = PoleStatus::kMarginal;
  }
  return e;
}

Verdict summarize(const StabilityReport& r) {
  if (!r.well_posed) return Verdict::kNotStable;
  bool marginal = false;
  for (const auto& e : r.entries) {
    if (!e.proper) return Verdict::kNotStable;
    if (e.status == PoleStatus::kUnstable || e.status == PoleStatus::kFailed) {
      return Verdict::kNotStable;
    }
    marginal = marginal || e.status == PoleStatus::kMarginal;
  }
  return marginal ? Verdict::kMarginal : Verdict::kInternallyStable;
}

}  // namespace

StabilityReport check_rh_inf(const TransferMatrix& m, double tol) {
  StabilityReport r;
  r.well_posed = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.entries.push_back(check_entry(m(i, j), i, j, tol));
  }
  r.verdict = summarize(r);
  return r;
}

StabilityReport check_internal_stability(const TransferMatrix& p, const TransferMatrix& c,
                                         double tol) {
  TransferMatrix m;
  try {
    m = internal_stability_matrix(p, c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIllPosed) throw;
    return StabilityReport{};
  }
  StabilityReport r = check_rh_inf(m, tol);
  r.well_posed = m.is_proper();
  r.verdict = summarize(r);
  return r;
}

Theorem1Result theorem1_harness(const TransferMatrix& psm, const TransferMatrix& csm,
                                const PolyMatrix& u, const PolyMatrix& v, double tol) {
  Theorem1Result out;
  out.essential = check_internal_stability(psm, csm, tol);
  out.original =
      check_internal_stability(plant_backmap(psm, u, v), controller_backmap(csm, u, v), tol);
  out.implication_holds =
      !(out.essential.stable() && out.original.well_posed && !out.original.stable());
  return out;
}

}  // namespace smdec
