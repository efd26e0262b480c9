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

#include "smdec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "smdec/error.hpp"

namespace smdec {
namespace {

using LComplex = std::complex<long double>;

constexpr int kMaxAberthIterations = 500;
constexpr int kNewtonPolishSteps = 4;
constexpr double kPi = 3.14159265358979323846;

// Ascending double coefficients of a monic square-free factor.
std::vector<double> to_double(const Poly& p) {
  std::vector<double> c(p.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeffs()[k].get_d();
  return c;
}

// p(z) and p'(z) by Horner.
template <typename T>
std::pair<std::complex<T>, std::complex<T>> horner2(const std::vector<double>& c,
                                                    std::complex<T> z) {
  std::complex<T> p = 0, dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + static_cast<T>(*it);
  }
  return {p, dp};
}

double backward_error(const std::vector<double>& c, Complex z) {
  LComplex zl(z.real(), z.imag());
  LComplex acc = 0;
  long double scale = 0, power = 1;
  const long double az = std::abs(zl);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * zl + static_cast<long double>(*it);
  for (double ck : c) {
    scale += std::abs(static_cast<long double>(ck)) * power;
    power *= az;
  }
  if (scale == 0) return 0.0;
  return static_cast<double>(std::abs(acc) / scale);
}

std::vector<Complex> aberth(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) return {Complex(-c[0] / c[1], 0.0)};

  // Start on a circle whose radius is the geometric mean of the root moduli.
  const double r = std::pow(std::abs(c[0] / c[static_cast<std::size_t>(n)]), 1.0 / n);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] = std::polar(r > 0 ? r : 1.0, 2 * kPi * k / n + 0.4);
  }

  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int it = 0; it < kMaxAberthIterations; ++it) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      auto uk = static_cast<std::size_t>(k);
      if (done[uk]) continue;
      auto [p, dp] = horner2<double>(c, z[uk]);
      if (p == 0.0) {
        done[uk] = true;
        continue;
      }
      const Complex ratio = p / dp;
      Complex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0 / (z[uk] - z[static_cast<std::size_t>(j)]);
      }
      const Complex w = ratio / (1.0 - ratio * sum);
      z[uk] -= w;
      if (!std::isfinite(z[uk].real()) || !std::isfinite(z[uk].imag())) {
        throw Error(ErrorCode::kNonConvergence, "root iteration diverged");
      }
      if (std::abs(w) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(z[uk]))) {
        done[uk] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return z;
  }
  // Not all corrections settled; the residual check below decides.
  return z;
}

void newton_polish(const std::vector<double>& c, Complex& z) {
  LComplex zl(z.real(), z.imag());
  for (int step = 0; step < kNewtonPolishSteps; ++step) {
    auto [p, dp] = horner2<long double>(c, zl);
    if (p == 0.0L || dp == 0.0L) break;
    zl -= p / dp;
  }
  z = Complex(static_cast<double>(zl.real()), static_cast<double>(zl.imag()));
}

}  // namespace

int RootSet::total_multiplicity() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

double RootSet::max_real_part() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& r : roots) m = std::max(m, r.real());
  return m;
}

RootSet poly_roots(const Poly& p, double tol) {
  if (p.is_zero() || p.is_constant()) {
    throw Error(ErrorCode::kInvalidArgument, "root finding needs degree >= 1");
  }
  RootSet out;
  for (const auto& [factor, mult] : square_free_factors(p)) {
    Poly f = factor;
    if (sgn(f.coeff(0)) == 0) {
      out.roots.emplace_back(0.0, 0.0);
      out.multiplicities.push_back(mult);
      f = exact_div(f, Poly::s());
      if (f.is_constant()) continue;
    }
    const std::vector<double> c = to_double(f);
    std::vector<Complex> z = aberth(c);
    for (auto& root : z) {
      newton_polish(c, root);
      // Real factors give conjugate pairs; tiny imaginary parts are noise.
      if (std::abs(root.imag()) <= 1e-10 * std::max(1.0, std::abs(root))) {
        root = Complex(root.real(), 0.0);
      }
      const double be = backward_error(c, root);
      out.residual = std::max(out.residual, be);
      out.roots.push_back(root);
      out.multiplicities.push_back(mult);
    }
  }
  if (out.residual > tol) {
    std::ostringstream os;
    os << "root finder did not converge (residual " << out.residual << " > " << tol << ")";
    throw Error(ErrorCode::kNonConvergence, os.str());
  }
  std::vector<std::size_t> idx(out.roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = out.roots[a];
    const auto& rb = out.roots[b];
    if (ra.real() != rb.real()) return ra.real() < rb.real();
    return ra.imag() < rb.imag();
  });
  RootSet sorted;
  sorted.residual = out.residual;
  for (auto i : idx) {
    sorted.roots.push_back(out.roots[i]);
    sorted.multiplicities.push_back(out.multiplicities[i]);
  }
  return sorted;
}

std::vector<Complex> expand_roots(const RootSet& rs) {
  std::vector<Complex> c{1.0};
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    for (int m = 0; m < rs.multiplicities[i]; ++m) {
      std::vector<Complex> next(c.size() + 1, 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= rs.roots[i] * c[k];
      }
      c = std::move(next);
    }
  }
  return c;
}

}  // namespace smdec
