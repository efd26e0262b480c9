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

#include "smdec/smith_mcmillan.hpp"

#include <string>

#include "smdec/error.hpp"

namespace smdec {

SmDecomposition smith_mcmillan(const TransferMatrix& p) {
  if (!p.is_square() || p.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "Smith-McMillan form needs a nonempty square matrix");
  }
  const std::size_t n = p.rows();
  const Poly d = p.common_denominator();

  // N = d * P is polynomial.
  PolyMatrix num(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      num(i, j) = exact_div(d * p(i, j).num(), p(i, j).den());
    }
  }

  SmithForm sf = smith_form(num);
  const std::size_t rank = sf.rank();
  if (rank < n) {
    throw Error(ErrorCode::kRankDeficient,
                "normal rank " + std::to_string(rank) + " < " + std::to_string(n));
  }
  SmDecomposition out{std::move(sf.U), std::move(sf.V), {}};
  out.diag.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.diag.emplace_back(sf.S(k, k), d);
  return out;
}

bool divisibility_chains_hold(const std::vector<RatFunc>& diag) {
  for (std::size_t k = 0; k + 1 < diag.size(); ++k) {
    if (!divides(diag[k].num(), diag[k + 1].num())) return false;
    if (!divides(diag[k + 1].den(), diag[k].den())) return false;
  }
  return true;
}

SmCertificate certify(const SmDecomposition& dec, const TransferMatrix& p) {
  SmCertificate c;
  c.u_unimodular = is_unimodular(dec.U);
  c.v_unimodular = is_unimodular(dec.V);
  if (dec.U.rows() == p.rows() && dec.V.cols() == p.cols() && dec.U.cols() == p.rows() &&
      dec.V.rows() == p.cols()) {
    c.relation_exact =
        TransferMatrix(dec.U) * p * TransferMatrix(dec.V) == dec.diagonal_matrix();
  }
  c.divisibility_chains = divisibility_chains_hold(dec.diag);
  return c;
}

}  // namespace smdec
