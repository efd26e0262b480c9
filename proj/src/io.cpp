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

#include "smdec/io.hpp"

#include <fstream>
#include <sstream>

#include "smdec/error.hpp"

namespace smdec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

std::size_t dim(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) bad(std::string("missing or invalid '") + key + "'");
  return j[key].get<std::size_t>();
}

const Json& entry_rows(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows) {
    bad("'entries' must be an array of rows");
  }
  for (const auto& r : j["entries"]) {
    if (!r.is_array() || r.size() != cols) bad("entry row length does not match 'cols'");
  }
  return j["entries"];
}

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Json curve_json(const SigmaCurve& c) {
  Json out = Json::array();
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    out.push_back({{"freq_hz", c.grid.hz(k)}, {"value", c.values[k]}});
  }
  return out;
}

// JSON cannot hold infinities; they are written as strings.
Json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

}  // namespace

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational_to_string(c));
  return out;
}

Json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const TransferMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const SmCertificate& c) {
  return {{"unimodular", {c.u_unimodular, c.v_unimodular}},
          {"relation_exact", c.relation_exact},
          {"divisibility_chains", c.divisibility_chains}};
}

Json to_json(const StabilityReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json poles = Json::array();
    for (std::size_t k = 0; k < e.poles.roots.size(); ++k) {
      poles.push_back({{"pole", complex_pair(e.poles.roots[k])},
                       {"multiplicity", e.poles.multiplicities[k]}});
    }
    Json je{{"row", e.row},
            {"col", e.col},
            {"proper", e.proper},
            {"status", to_string(e.status)},
            {"max_real_part", number(e.max_real_part)},
            {"poles", std::move(poles)}};
    if (!e.failure.empty()) je["failure"] = e.failure;
    entries.push_back(std::move(je));
  }
  return {{"verdict", to_string(r.verdict)}, {"well_posed", r.well_posed}, {"entries", std::move(entries)}};
}

Json to_json(const IdentityReport& r) {
  Json out = Json::object();
  for (const auto& [name, ok] : r.results) out[name] = ok ? "exact-equal" : "mismatch";
  return out;
}

Json to_json(const PerformanceResult& r) {
  return {{"pass", r.pass},
          {"semantics", "grid"},
          {"worst_margin", number(r.worst_margin)},
          {"worst_freq_hz", r.worst_omega / kTwoPi},
          {"curve", curve_json(r.curve)}};
}

Json to_json(const BoundResult& r) {
  Json points = Json::array();
  for (std::size_t k = 0; k < r.lhs.values.size(); ++k) {
    points.push_back({{"freq_hz", r.lhs.grid.hz(k)},
                      {"lhs", r.lhs.values[k]},
                      {"rhs", number(r.rhs.values[k])}});
  }
  return {{"pass", r.pass},
          {"conclusive", r.pass},
          {"worst_margin", number(r.worst_margin)},
          {"worst_freq_hz", r.worst_omega / kTwoPi},
          {"curve", std::move(points)}};
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) {
    if (x.is_string()) {
      c.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number()) {
      c.push_back(parse_rational(x.dump()));
    } else {
      bad("coefficient must be a string or a number");
    }
  }
  return Poly(std::move(c));
}

RatFunc ratfunc_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("num")) bad("rational function needs 'num'");
    const Poly den = j.contains("den") ? poly_from_json(j["den"]) : Poly{1};
    if (den.is_zero()) bad("zero denominator");
    return RatFunc(poly_from_json(j["num"]), den);
  }
  if (j.is_array()) return RatFunc(poly_from_json(j));
  return RatFunc(poly_from_json(Json::array({j})));
}

PolyMatrix poly_matrix_from_json(const Json& j) {
  if (!j.is_object()) bad("matrix must be an object");
  const std::size_t rows = dim(j, "rows"), cols = dim(j, "cols");
  const Json& e = entry_rows(j, rows, cols);
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = poly_from_json(e[i][k]);
  }
  return m;
}

TransferMatrix transfer_matrix_from_json(const Json& j) {
  if (!j.is_object()) bad("matrix must be an object");
  const std::size_t rows = dim(j, "rows"), cols = dim(j, "cols");
  const Json& e = entry_rows(j, rows, cols);
  TransferMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = ratfunc_from_json(e[i][k]);
  }
  return m;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << text;
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace smdec
