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

#include "smdec/loops.hpp"

#include "smdec/error.hpp"
#include "smdec/tfm.hpp"

namespace smdec {

const TransferMatrix& ClosedLoopSet::get(std::size_t index) const {
  switch (index) {
    case 0: return L;
    case 1: return S;
    case 2: return T;
    case 3: return S_P;
    case 4: return S_C;
    case 5: return L_I;
    case 6: return S_I;
    case 7: return T_I;
    case 8: return S_PI;
    case 9: return S_CI;
    default: throw Error(ErrorCode::kInvalidArgument, "closed-loop index out of range");
  }
}

namespace {

TransferMatrix closure_inverse(const TransferMatrix& loop) {
  try {
    return inverse(TransferMatrix::identity(loop.rows()) + loop);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSingular) {
      throw Error(ErrorCode::kIllPosed, "ill-posed loop: det(I + L) is identically zero");
    }
    throw;
  }
}

}  // namespace

ClosedLoopSet gang_of_six(const TransferMatrix& p, const TransferMatrix& c) {
  if (p.rows() != c.cols() || p.cols() != c.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "plant and controller shapes do not close a loop");
  }
  ClosedLoopSet s;
  s.L = p * c;
  s.S = closure_inverse(s.L);
  s.T = s.L * s.S;
  s.S_P = s.S * p;
  s.S_C = c * s.S;
  s.L_I = c * p;
  s.S_I = closure_inverse(s.L_I);
  s.T_I = s.S_I * s.L_I;
  s.S_PI = p * s.S_I;
  s.S_CI = s.S_I * c;
  return s;
}

ClosedLoopSet transform_to_original(const ClosedLoopSet& e, const PolyMatrix& u,
                                    const PolyMatrix& v) {
  const std::size_t n = e.L.rows();
  if (u.rows() != n || u.cols() != n || v.rows() != n || v.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "transformation matrices do not match the loop size");
  }
  const TransferMatrix U(u), V(v);
  const TransferMatrix Ui(unimodular_inverse(u)), Vi(unimodular_inverse(v));
  ClosedLoopSet o;
  o.L = Ui * e.L * U;
  o.S = Ui * e.S * U;
  o.T = Ui * e.T * U;
  o.S_P = Ui * e.S_P * Vi;
  o.S_C = V * e.S_C * U;
  o.L_I = V * e.L_I * Vi;
  o.S_I = V * e.S_I * Vi;
  o.T_I = V * e.T_I * Vi;
  o.S_PI = Ui * e.S_PI * Vi;
  o.S_CI = V * e.S_CI * U;
  return o;
}

TransferMatrix input_process_sensitivity_extra_p(const ClosedLoopSet& e, const TransferMatrix& p,
                                                 const PolyMatrix& u, const PolyMatrix& v) {
  return TransferMatrix(unimodular_inverse(u)) * p * e.S_PI *
         TransferMatrix(unimodular_inverse(v));
}

bool IdentityReport::all_equal() const {
  for (const auto& [name, ok] : results) {
    if (!ok) return false;
  }
  return !results.empty();
}

IdentityReport verify_transform_identities(const TransferMatrix& psm, const TransferMatrix& csm,
                                           const PolyMatrix& u, const PolyMatrix& v) {
  const ClosedLoopSet essential = gang_of_six(psm, csm);
  const TransferMatrix p = plant_backmap(psm, u, v);
  const TransferMatrix c = controller_backmap(csm, u, v);
  const ClosedLoopSet direct = gang_of_six(p, c);
  const ClosedLoopSet mapped = transform_to_original(essential, u, v);

  IdentityReport report;
  for (std::size_t k = 0; k < ClosedLoopSet::kNames.size(); ++k) {
    report.results.emplace_back(std::string(ClosedLoopSet::kNames[k]),
                                mapped.get(k) == direct.get(k));
  }
  report.extra_p_variant_equal =
      input_process_sensitivity_extra_p(essential, p, u, v) == direct.S_PI;
  report.t_equals_tsm = direct.T == essential.T;
  return report;
}

}  // namespace smdec
