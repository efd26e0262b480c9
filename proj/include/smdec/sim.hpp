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

#include <iosfwd>
#include <vector>

#include "smdec/ratfunc.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec {

/// f = direct + strictly_proper, exactly.
struct ProperSplit {
  Poly direct;
  RatFunc strictly_proper;
};

ProperSplit split_proper(const RatFunc& f);

/// coefficient / (s - pole)^order
struct PartialFraction {
  Complex pole;
  int order = 1;
  Complex coefficient;
};

inline constexpr int kMaxPoleOrder = 3;

/// Expansion of a strictly proper f over the roots of its denominator.
/// Coefficients of a pole of multiplicity m are the first m Taylor
/// coefficients of (s - p)^m f(s) at p. Poles of multiplicity above
/// kMaxPoleOrder are rejected with kUnsupported. Terms whose coefficient is
/// exactly zero are omitted.
std::vector<PartialFraction> partial_fractions(const RatFunc& f);

/// Sum of the expansion at s.
Complex evaluate(const std::vector<PartialFraction>& terms, Complex s);

struct TimeResponse {
  std::vector<double> times;
  std::size_t input = 0;
  /// outputs[i][k] is output i at times[k].
  std::vector<std::vector<double>> outputs;
};

/// Uniform grid 0, dt, ..., t_end.
std::vector<double> linspace_time(double t_end, std::size_t points);

/// Unit-step response of every output to input `input`, by analytic inverse
/// Laplace transform of T_ij(s)/s. T must be proper with every pole strictly
/// in the left half-plane (tolerance pole_tol); otherwise kUnstable.
TimeResponse step_response(const TransferMatrix& t, std::size_t input,
                           const std::vector<double>& times, double pole_tol = 1e-9);

/// CSV: time, then y<i>_u<j> per output.
void write_time_csv(std::ostream& os, const TimeResponse& r);

}  // namespace smdec
