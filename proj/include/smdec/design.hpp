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

#include "smdec/poly_matrix.hpp"
#include "smdec/ratfunc.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec {

/// Two-mass spring-damper parameters (kg, N/m, kg/s), all strictly positive.
struct MechParams {
  Rational m1{1}, m2{1};
  Rational k1{10}, k2{10};
  Rational c1{10}, c2{10};

  /// m1 = m2 = 1, k1 = k2 = 10, c1 = c2 = 10.
  static MechParams table_one() { return {}; }
  bool valid() const;
};

/// Transfer matrix from forces (F1, F2) to positions (x1, x2) of
///   m1 x1'' = F1 - F2 - k1 x1 - c1 x1' - k2 (x1 - x2) - c2 (x1' - x2')
///   m2 x2'' = F2 + k2 (x1 - x2) + c2 (x1' - x2')
/// assembled exactly in the Laplace domain.
/// Degenerate couplings (k2 = c2 = 0) are accepted; only masses must be positive.
TransferMatrix build_example_plant(const MechParams& p);

/// The published decomposition of the Table I plant, entered as data.
PolyMatrix reference_u();
PolyMatrix reference_v();
/// diag(1/(s^4+30s^3+130s^2+200s+100), 1)
TransferMatrix reference_psm();

/// Structure of a SISO loop-shaping controller
///   C = k / s^integrator_order * prod lead(s) * prod 1/(s + roll_off)
/// with lead(s) = (s + wc/lead_spread) / (s + wc*lead_spread). The roll-off
/// poles are added to reach min_reldeg and sit at roll_off_factor * wc.
struct LoopShapeSpec {
  double crossover_hz = 10.0;
  int min_reldeg = 0;
  int integrator_order = 0;
  int lead_count = 0;
  double lead_spread = 3.0;
  double roll_off_factor = 10.0;
};

/// Controller of the declared structure with |plant(jwc) C(jwc)| = 1 at
/// wc = 2*pi*crossover_hz. Corner frequencies and gain are rationalized to
/// ten significant digits so everything downstream stays exact. Throws
/// kInfeasible on a malformed spec and kUnstable when the unity-feedback
/// loop is not internally stable.
RatFunc loopshape_siso(const RatFunc& plant, const LoopShapeSpec& spec);

/// C2sm = P1sm * C1sm for the plant whose second Smith-McMillan channel is 1,
/// giving T2sm = T1sm. Throws kInfeasible when the product has relative
/// degree below min_reldeg.
RatFunc make_design2(const RatFunc& c1sm, const RatFunc& p1sm, int min_reldeg = 5);

/// Lead spread used for the first channel of the example. The default spread
/// of 3 leaves that loop unstable; 40 gives a stable loop with the required
/// crossover.
inline constexpr double kExampleChannel1Spread = 40.0;

struct ExampleDesign {
  RatFunc c1sm;
  RatFunc c2sm;
  TransferMatrix csm() const { return TransferMatrix::diagonal({c1sm, c2sm}); }
};

/// Integrator plus three leads on channel 1; double integrator, one lead and
/// three roll-off poles on channel 2. Both cross over at 10 Hz.
ExampleDesign example_design1();
/// Channel 1 as in design 1, channel 2 equal to the channel-1 loop gain.
ExampleDesign example_design2();

}  // namespace smdec
