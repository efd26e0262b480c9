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

#include "smdec/poly.hpp"

namespace smdec {

inline constexpr double kDefaultRootTol = 1e-10;

/// Distinct roots with multiplicities. residual is the worst normalized
/// backward error |f(z)| / sum_k |f_k| |z|^k over the square-free factors f
/// the roots were extracted from.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<int> multiplicities;
  double residual = 0.0;

  int total_multiplicity() const;
  bool empty() const noexcept { return roots.empty(); }
  double max_real_part() const;
};

/// Roots of a nonconstant polynomial.
///
/// Multiplicities come from an exact square-free decomposition; each
/// square-free factor is solved with Aberth-Ehrlich simultaneous iteration
/// and polished with Newton steps. Roots are returned sorted by real part,
/// then imaginary part. Throws kNonConvergence when the iteration cap is hit
/// or the polished residual exceeds tol.
RootSet poly_roots(const Poly& p, double tol = kDefaultRootTol);

/// Monic polynomial with the given complex roots, expanded numerically.
std::vector<Complex> expand_roots(const RootSet& rs);

}  // namespace smdec
