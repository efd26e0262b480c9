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

#include "smdec/freq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "smdec/error.hpp"
#include "smdec/stability.hpp"

namespace smdec {

FrequencyGrid FrequencyGrid::log_hz(double f_min_hz, double f_max_hz, int points_per_decade) {
  FrequencyGrid g = log_rad(kTwoPi * f_min_hz, kTwoPi * f_max_hz, points_per_decade);
  g.hz_input_ = true;
  return g;
}

FrequencyGrid FrequencyGrid::log_rad(double w_min, double w_max, int points_per_decade) {
  if (!(w_min > 0) || !(w_max > w_min) || points_per_decade < 1) {
    throw Error(ErrorCode::kInvalidArgument, "frequency range must be positive and ascending");
  }
  const double decades = std::log10(w_max / w_min);
  const auto n = static_cast<std::size_t>(std::ceil(decades * points_per_decade)) + 1;
  std::vector<double> w(n);
  const double lo = std::log10(w_min);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::pow(10.0, lo + decades * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  w.front() = w_min;
  w.back() = w_max;
  return from_rad(std::move(w));
}

FrequencyGrid FrequencyGrid::from_rad(std::vector<double> omega, bool hz_input) {
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0) || (i > 0 && !(omega[i] > omega[i - 1]))) {
      throw Error(ErrorCode::kInvalidArgument, "frequency grid must be positive and strictly ascending");
    }
  }
  FrequencyGrid g;
  g.omega_ = std::move(omega);
  g.hz_input_ = hz_input;
  return g;
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "complex matrix product");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

double max_singular_value(const ComplexMatrix& a, double tol) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) return 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        throw Error(ErrorCode::kInvalidArgument, "non-finite matrix entry");
      }
    }
  }
  // Columns of the working copy, rotated until mutually orthogonal.
  std::vector<std::vector<Complex>> col(n, std::vector<Complex>(m));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) col[j][i] = a(i, j);
  }
  constexpr int kMaxSweeps = 60;
  bool converged = n == 1;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0, beta = 0;
        Complex gamma = 0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(col[p][i]);
          beta += std::norm(col[q][i]);
          gamma += std::conj(col[p][i]) * col[q][i];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
        converged = false;
        // Rotate column q by the phase of gamma so the pair is real, then
        // apply the real Jacobi rotation.
        const Complex phase = std::conj(gamma) / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const Complex xp = col[p][i];
          const Complex xq = col[q][i] * phase;
          col[p][i] = c * xp - s * xq;
          col[q][i] = s * xp + c * xq;
        }
      }
    }
  }
  if (!converged) throw Error(ErrorCode::kNonConvergence, "Jacobi singular value iteration did not converge");
  double best = 0.0;
  for (const auto& cj : col) {
    double nrm = 0;
    for (const auto& x : cj) nrm += std::norm(x);
    best = std::max(best, std::sqrt(nrm));
  }
  return best;
}

namespace {

[[noreturn]] void pole_on_grid(double omega) {
  std::ostringstream os;
  os << "pole on the frequency grid at w = " << format_double(omega) << " rad/s ("
     << format_double(omega / kTwoPi) << " Hz)";
  throw Error(ErrorCode::kPoleOnGrid, os.str());
}

ComplexMatrix eval_at(const TransferMatrix& m, double omega) {
  ComplexMatrix out(m.rows(), m.cols());
  const Complex s(0.0, omega);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      try {
        out(i, j) = m(i, j).evaluate(s);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kDivisionByZero) pole_on_grid(omega);
        throw;
      }
    }
  }
  return out;
}

Complex eval_scalar(const RatFunc& f, double omega) {
  try {
    return f.evaluate(Complex(0.0, omega));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDivisionByZero) pole_on_grid(omega);
    throw;
  }
}

}  // namespace

std::vector<ComplexMatrix> freq_response(const TransferMatrix& m, const FrequencyGrid& grid) {
  std::vector<ComplexMatrix> out;
  out.reserve(grid.size());
  for (double w : grid.omega()) out.push_back(eval_at(m, w));
  return out;
}

std::vector<ComplexMatrix> freq_response(const PolyMatrix& m, const FrequencyGrid& grid) {
  std::vector<ComplexMatrix> out;
  out.reserve(grid.size());
  for (double w : grid.omega()) {
    ComplexMatrix x(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) x(i, j) = m(i, j).eval(Complex(0.0, w));
    }
    out.push_back(std::move(x));
  }
  return out;
}

SigmaCurve sigma_curve(const TransferMatrix& m, const FrequencyGrid& grid) {
  SigmaCurve c{grid, {}};
  c.values.reserve(grid.size());
  for (double w : grid.omega()) c.values.push_back(max_singular_value(eval_at(m, w)));
  return c;
}

const char* to_string(NormSemantics s) {
  return s == NormSemantics::kHinfNorm ? "hinf_norm" : "grid_supremum";
}

NormEstimate hinf_norm_estimate(const TransferMatrix& m, const FrequencyGrid& grid) {
  if (grid.size() == 0) throw Error(ErrorCode::kInvalidArgument, "empty frequency grid");
  const SigmaCurve curve = sigma_curve(m, grid);
  const auto& w = grid.omega();
  std::size_t k = static_cast<std::size_t>(
      std::max_element(curve.values.begin(), curve.values.end()) - curve.values.begin());
  NormEstimate est{curve.values[k], w[k], NormSemantics::kGridSupremum};

  double lo = k > 0 ? w[k - 1] : w[k];
  double hi = k + 1 < w.size() ? w[k + 1] : w[k];
  for (int pass = 0; pass < 3 && hi > lo; ++pass) {
    const double left = std::sqrt(lo * est.omega);
    const double right = std::sqrt(est.omega * hi);
    const double sl = max_singular_value(eval_at(m, left));
    const double sr = max_singular_value(eval_at(m, right));
    if (sl > est.value && sl >= sr) {
      hi = est.omega;
      est.value = sl;
      est.omega = left;
    } else if (sr > est.value) {
      lo = est.omega;
      est.value = sr;
      est.omega = right;
    } else {
      lo = left;
      hi = right;
    }
  }
  if (m.is_proper() && check_rh_inf(m).stable()) est.semantics = NormSemantics::kHinfNorm;
  return est;
}

PerformanceResult performance_check_original(const TransferMatrix& s, const RatFunc& w1,
                                             const FrequencyGrid& grid) {
  PerformanceResult r;
  r.curve.grid = grid;
  r.worst_margin = -std::numeric_limits<double>::infinity();
  for (double w : grid.omega()) {
    const double mag_w = std::abs(eval_scalar(w1, w));
    const double v = mag_w == 0.0 ? 0.0 : mag_w * max_singular_value(eval_at(s, w));
    r.curve.values.push_back(v);
    if (v - 1.0 > r.worst_margin) {
      r.worst_margin = v - 1.0;
      r.worst_omega = w;
    }
  }
  r.pass = r.worst_margin <= 0.0;
  return r;
}

BoundResult essential_bound_check(const TransferMatrix& ssm, const RatFunc& w1, const PolyMatrix& u,
                                  const FrequencyGrid& grid) {
  if (!is_unimodular(u)) throw Error(ErrorCode::kNotUnimodular, "bound needs a unimodular U");
  const PolyMatrix ui = unimodular_inverse(u);
  const auto ur = freq_response(u, grid);
  const auto uir = freq_response(ui, grid);
  BoundResult r;
  r.lhs.grid = grid;
  r.rhs.grid = grid;
  r.worst_margin = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double w = grid.omega()[k];
    const double lhs = max_singular_value(eval_at(ssm, w));
    const double mag_w = std::abs(eval_scalar(w1, w));
    const double rhs = mag_w == 0.0 ? std::numeric_limits<double>::infinity()
                                    : 1.0 / (mag_w * max_singular_value(uir[k]) *
                                             max_singular_value(ur[k]));
    r.lhs.values.push_back(lhs);
    r.rhs.values.push_back(rhs);
    const double margin = std::isinf(rhs) ? -std::numeric_limits<double>::infinity() : lhs - rhs;
    if (margin > r.worst_margin) {
      r.worst_margin = margin;
      r.worst_omega = w;
    }
  }
  r.pass = r.worst_margin <= 0.0;
  return r;
}

BodeTable bode_export(const TransferMatrix& m, const FrequencyGrid& grid) {
  BodeTable t;
  for (double w : grid.omega()) t.freq_hz.push_back(w / kTwoPi);
  const auto resp = freq_response(m, grid);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      t.entry_names.push_back("m" + std::to_string(i + 1) + std::to_string(j + 1));
      std::vector<double> mag, ph;
      double prev = 0.0;
      bool have_prev = false;
      for (const auto& x : resp) {
        const Complex v = x(i, j);
        mag.push_back(20.0 * std::log10(std::abs(v)));
        if (v == 0.0) {
          ph.push_back(0.0);
          continue;
        }
        double deg = std::arg(v) * 360.0 / kTwoPi;
        if (have_prev) {
          while (deg - prev > 180.0) deg -= 360.0;
          while (deg - prev < -180.0) deg += 360.0;
        }
        ph.push_back(deg);
        prev = deg;
        have_prev = true;
      }
      t.mag_db.push_back(std::move(mag));
      t.phase_deg.push_back(std::move(ph));
    }
  }
  return t;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_bode_csv(std::ostream& os, const BodeTable& t) {
  os << "freq_hz";
  for (const auto& name : t.entry_names) os << ',' << name << "_mag_db," << name << "_phase_deg";
  os << '\n';
  for (std::size_t k = 0; k < t.freq_hz.size(); ++k) {
    os << format_double(t.freq_hz[k]);
    for (std::size_t e = 0; e < t.entry_names.size(); ++e) {
      os << ',' << format_double(t.mag_db[e][k]) << ',' << format_double(t.phase_deg[e][k]);
    }
    os << '\n';
  }
}

std::vector<double> gain_crossovers_hz(const RatFunc& f, const FrequencyGrid& grid) {
  std::vector<double> out;
  auto excess = [&](double w) { return std::log(std::abs(eval_scalar(f, w))); };
  const auto& w = grid.omega();
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    double a = w[k], b = w[k + 1];
    double fa = excess(a), fb = excess(b);
    if (fa == 0.0) {
      out.push_back(a / kTwoPi);
      continue;
    }
    if ((fa > 0) == (fb > 0) || fb == 0.0) continue;
    for (int it = 0; it < 60; ++it) {
      const double mid = std::sqrt(a * b);
      const double fm = excess(mid);
      if ((fm > 0) == (fa > 0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    out.push_back(std::sqrt(a * b) / kTwoPi);
  }
  if (!w.empty() && excess(w.back()) == 0.0) out.push_back(w.back() / kTwoPi);
  return out;
}

}  // namespace smdec
