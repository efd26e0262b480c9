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

#include <vector>

#include "smdec/poly_matrix.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec {

/// U * P * V == diag(eps_i / psi_i) with U, V unimodular.
///
/// Numerators increase along the diagonal (eps_i | eps_{i+1}) and
/// denominators decrease (psi_{i+1} | psi_i).
struct SmDecomposition {
  PolyMatrix U;
  PolyMatrix V;
  std::vector<RatFunc> diag;

  std::size_t dim() const noexcept { return diag.size(); }
  TransferMatrix diagonal_matrix() const { return TransferMatrix::diagonal(diag); }
};

/// Smith-McMillan form of a square transfer matrix of full normal rank.
/// Throws kRankDeficient (with the normal rank in the message) otherwise.
SmDecomposition smith_mcmillan(const TransferMatrix& p);

/// Checks of the decomposition invariants, each exact.
struct SmCertificate {
  bool u_unimodular = false;
  bool v_unimodular = false;
  bool relation_exact = false;
  bool divisibility_chains = false;

  bool ok() const noexcept {
    return u_unimodular && v_unimodular && relation_exact && divisibility_chains;
  }
};

SmCertificate certify(const SmDecomposition& dec, const TransferMatrix& p);

/// eps_i | eps_{i+1} and psi_{i+1} | psi_i.
bool divisibility_chains_hold(const std::vector<RatFunc>& diag);

}  // namespace smdec
