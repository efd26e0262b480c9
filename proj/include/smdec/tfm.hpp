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

#include "smdec/roots.hpp"
#include "smdec/smith_mcmillan.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec {

/// C = V * Csm * U.
TransferMatrix controller_backmap(const TransferMatrix& csm, const PolyMatrix& u,
                                  const PolyMatrix& v);

/// P = U^-1 * Psm * V^-1.
TransferMatrix plant_backmap(const TransferMatrix& psm, const PolyMatrix& u, const PolyMatrix& v);

/// Minimum relative degree per diagonal channel k that makes V*Csm*U proper:
/// r_k = max over (i, j) with V(i,k) and U(k,j) nonzero of
/// deg V(i,k) + deg U(k,j). The bound is term-by-term, so it is sufficient
/// but can be conservative when terms of one entry cancel.
std::vector<int> properness_min_reldeg(const PolyMatrix& u, const PolyMatrix& v);

/// Transmission poles (roots of prod psi_i) and zeros (roots of prod eps_i).
/// An empty RootSet means the product is constant.
struct PoleZeroStructure {
  RootSet transmission_poles;
  RootSet transmission_zeros;
};

PoleZeroStructure transmission_structure(const SmDecomposition& dec, double tol = kDefaultRootTol);

}  // namespace smdec
