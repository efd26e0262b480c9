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

#include "smdec/design.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "smdec/error.hpp"
#include "smdec/freq.hpp"
#include "smdec/stability.hpp"

namespace smdec {

bool MechParams::valid() const {
  return m1 > 0 && m2 > 0 && k1 > 0 && k2 > 0 && c1 > 0 && c2 > 0;
}

TransferMatrix build_example_plant(const MechParams& p) {
  if (!(p.m1 > 0) || !(p.m2 > 0) || p.k1 < 0 || p.k2 < 0 || p.c1 < 0 || p.c2 < 0) {
    throw Error(ErrorCode::kInvalidArgument, "masses must be positive and couplings nonnegative");
  }
  // A(s) X = B F
  const Poly coupling{p.k2, p.c2};
  const Poly a11{p.k1 + p.k2, p.c1 + p.c2, p.m1};
  const Poly a22{p.k2, p.c2, p.m2};
  const TransferMatrix a{{RatFunc(a11), RatFunc(-1 * coupling)},
                         {RatFunc(-1 * coupling), RatFunc(a22)}};
  const TransferMatrix b{{RatFunc(Poly::constant(1)), RatFunc(Poly::constant(-1))},
                         {RatFunc(), RatFunc(Poly::constant(1))}};
  return inverse(a) * b;
}

PolyMatrix reference_u() {
  return PolyMatrix{{Poly{}, Poly{1}},
                    {Poly{1}, Poly{9, 10, Rational(29, 10), Rational(1, 10)}}};
}

PolyMatrix reference_v() {
  return PolyMatrix{{Poly{Rational(-9, 10), Rational(-1, 10)}, Poly{10, 10, 1}},
                    {Poly{1}, Poly{-10, -10}}};
}

TransferMatrix reference_psm() {
  return TransferMatrix::diagonal(
      {RatFunc(Poly{1}, Poly{100, 200, 130, 30, 1}), RatFunc(Poly{1})});
}

RatFunc loopshape_siso(const RatFunc& plant, const LoopShapeSpec& spec) {
  if (!(spec.crossover_hz > 0) || spec.min_reldeg < 0 || spec.integrator_order < 0 ||
      spec.lead_count < 0 || (spec.lead_count > 0 && !(spec.lead_spread > 1)) ||
      !(spec.roll_off_factor > 0)) {
    throw Error(ErrorCode::kInfeasible, "malformed loop-shaping spec");
  }
  if (plant.is_zero()) throw Error(ErrorCode::kInfeasible, "cannot shape a loop around a zero plant");
  const double wc = kTwoPi * spec.crossover_hz;
  Poly num{1};
  Poly den = Poly::monomial(1, spec.integrator_order);
  const Rational zero = rationalize(wc / spec.lead_spread);
  const Rational pole = rationalize(wc * spec.lead_spread);
  for (int i = 0; i < spec.lead_count; ++i) {
    num *= Poly{zero, 1};
    den *= Poly{pole, 1};
  }
  const Rational roll = rationalize(wc * spec.roll_off_factor);
  for (int i = spec.integrator_order; i < spec.min_reldeg; ++i) den *= Poly{roll, 1};

  const RatFunc shape(num, den);
  const double mag = std::abs((plant * shape).evaluate(Complex(0.0, wc)));
  if (!(mag > 0) || !std::isfinite(mag)) {
    throw Error(ErrorCode::kInfeasible, "loop gain vanishes or diverges at the crossover");
  }
  const RatFunc c = RatFunc(Poly::constant(rationalize(1.0 / mag))) * shape;

  const StabilityReport rep =
      check_internal_stability(TransferMatrix{{plant}}, TransferMatrix{{c}});
  if (!rep.stable()) {
    double worst = -INFINITY;
    for (const auto& e : rep.entries) worst = std::max(worst, e.max_real_part);
    std::ostringstream os;
    os << "shaped loop is not internally stable (verdict " << to_string(rep.verdict)
       << ", max pole real part " << format_double(worst) << ")";
    throw Error(ErrorCode::kUnstable, os.str());
  }
  return c;
}

RatFunc make_design2(const RatFunc& c1sm, const RatFunc& p1sm, int min_reldeg) {
  RatFunc c2 = p1sm * c1sm;
  const auto rd = c2.relative_degree();
  if (rd && *rd < min_reldeg) {
    throw Error(ErrorCode::kInfeasible, "loop gain relative degree " + std::to_string(*rd) +
                                            " is below the required " + std::to_string(min_reldeg));
  }
  return c2;
}

namespace {

RatFunc channel1_controller() {
  LoopShapeSpec spec;
  spec.min_reldeg = 1;
  spec.integrator_order = 1;
  spec.lead_count = 3;
  spec.lead_spread = kExampleChannel1Spread;
  return loopshape_siso(reference_psm()(0, 0), spec);
}

}  // namespace

ExampleDesign example_design1() {
  LoopShapeSpec spec2;
  spec2.min_reldeg = 5;
  spec2.integrator_order = 2;
  spec2.lead_count = 1;
  return {channel1_controller(), loopshape_siso(RatFunc(Poly{1}), spec2)};
}

ExampleDesign example_design2() {
  const RatFunc c1 = channel1_controller();
  return {c1, make_design2(c1, reference_psm()(0, 0))};
}

}  // namespace smdec
