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
#include <string>
#include <vector>

#include "smdec/poly_matrix.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kDefaultSigmaTol = 1e-12;
inline constexpr int kDefaultPointsPerDecade = 400;

/// Strictly ascending, strictly positive angular frequencies (rad/s).
class FrequencyGrid {
 public:
  /// Log-spaced grid between two frequencies in Hz, inclusive; converted to
  /// rad/s with w = 2*pi*f.
  static FrequencyGrid log_hz(double f_min_hz, double f_max_hz,
                              int points_per_decade = kDefaultPointsPerDecade);
  static FrequencyGrid log_rad(double w_min, double w_max,
                               int points_per_decade = kDefaultPointsPerDecade);
  static FrequencyGrid from_rad(std::vector<double> omega, bool hz_input = false);

  const std::vector<double>& omega() const noexcept { return omega_; }
  std::size_t size() const noexcept { return omega_.size(); }
  double hz(std::size_t i) const { return omega_[i] / kTwoPi; }
  bool hz_input() const noexcept { return hz_input_; }

 private:
  std::vector<double> omega_;
  bool hz_input_ = false;
};

/// Small dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest singular value by one-sided (Hestenes) Jacobi, which applies
/// cyclic Jacobi rotations to A^H A implicitly. Converges when every column
/// pair is orthogonal to `tol` relative; throws kNonConvergence otherwise.
double max_singular_value(const ComplexMatrix& a, double tol = kDefaultSigmaTol);

/// M(j w) at every grid point. Throws kPoleOnGrid naming the frequency.
std::vector<ComplexMatrix> freq_response(const TransferMatrix& m, const FrequencyGrid& grid);
std::vector<ComplexMatrix> freq_response(const PolyMatrix& m, const FrequencyGrid& grid);

struct SigmaCurve {
  FrequencyGrid grid;
  std::vector<double> values;
};

SigmaCurve sigma_curve(const TransferMatrix& m, const FrequencyGrid& grid);

enum class NormSemantics { kHinfNorm, kGridSupremum };
const char* to_string(NormSemantics s);

/// Grid maximum of sigma_max refined by three bisection passes around the
/// arg-max. Labeled kHinfNorm only when M is certified proper and stable;
/// otherwise the number is a grid supremum and says so.
struct NormEstimate {
  double value = 0.0;
  double omega = 0.0;
  NormSemantics semantics = NormSemantics::kGridSupremum;
};

NormEstimate hinf_norm_estimate(const TransferMatrix& m, const FrequencyGrid& grid);

/// sigma_max(w1(jw) S(jw)) <= 1 at every grid point.
struct PerformanceResult {
  bool pass = false;
  SigmaCurve curve;
  /// Largest curve value minus one (<= 0 on pass) and where it occurs.
  double worst_margin = 0.0;
  double worst_omega = 0.0;
};

PerformanceResult performance_check_original(const TransferMatrix& s, const RatFunc& w1,
                                             const FrequencyGrid& grid);

/// Sufficient condition in the essential domain:
///   sigma_max(Ssm) <= 1 / (|w1| sigma_max(U^-1) sigma_max(U)) per point.
/// A pass guarantees the original-domain requirement on the grid; a failure
/// is inconclusive. rhs is +inf where w1 vanishes.
struct BoundResult {
  bool pass = false;
  SigmaCurve lhs;
  SigmaCurve rhs;
  double worst_margin = 0.0;
  double worst_omega = 0.0;
};

BoundResult essential_bound_check(const TransferMatrix& ssm, const RatFunc& w1,
                                  const PolyMatrix& u, const FrequencyGrid& grid);

/// Magnitude (dB) and unwrapped phase (deg) per entry, row-major entries.
struct BodeTable {
  std::vector<double> freq_hz;
  std::vector<std::string> entry_names;
  /// [entry][point]
  std::vector<std::vector<double>> mag_db;
  std::vector<std::vector<double>> phase_deg;
};

BodeTable bode_export(const TransferMatrix& m, const FrequencyGrid& grid);

/// CSV: freq_hz, then <name>_mag_db,<name>_phase_deg per entry.
void write_bode_csv(std::ostream& os, const BodeTable& table);

/// Frequencies (Hz) where |f(jw)| crosses 1 inside the grid, refined by
/// bisection in log frequency.
std::vector<double> gain_crossovers_hz(const RatFunc& f, const FrequencyGrid& grid);

/// Fixed 17-significant-digit rendering used by every numeric output;
/// infinities print as "inf"/"-inf".
std::string format_double(double x);

}  // namespace smdec
