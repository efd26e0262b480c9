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

#include "smdec/tfm.hpp"

#include <algorithm>

#include "smdec/error.hpp"

namespace smdec {

TransferMatrix controller_backmap(const TransferMatrix& csm, const PolyMatrix& u,
                                  const PolyMatrix& v) {
  const std::size_t n = csm.rows();
  if (!csm.is_square() || u.rows() != n || u.cols() != n || v.rows() != n || v.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "controller back-mapping needs n x n operands");
  }
  return TransferMatrix(v) * csm * TransferMatrix(u);
}

TransferMatrix plant_backmap(const TransferMatrix& psm, const PolyMatrix& u, const PolyMatrix& v) {
  return TransferMatrix(unimodular_inverse(u)) * psm * TransferMatrix(unimodular_inverse(v));
}

std::vector<int> properness_min_reldeg(const PolyMatrix& u, const PolyMatrix& v) {
  const std::size_t n = u.rows();
  if (!u.is_square() || !v.is_square() || v.rows() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "properness bound needs n x n U and V");
  }
  std::vector<int> r(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (u(k, j).is_zero()) continue;
        r[k] = std::max(r[k], v(i, k).deg() + u(k, j).deg());
      }
    }
  }
  return r;
}

PoleZeroStructure transmission_structure(const SmDecomposition& dec, double tol) {
  Poly poles = Poly::constant(1);
  Poly zeros = Poly::constant(1);
  for (const auto& f : dec.diag) {
    poles *= f.den();
    zeros *= f.num();
  }
  PoleZeroStructure out;
  if (!poles.is_constant()) out.transmission_poles = poly_roots(poles, tol);
  if (!zeros.is_constant()) out.transmission_zeros = poly_roots(zeros, tol);
  return out;
}

}  // namespace smdec
