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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "smdec/freq.hpp"
#include "smdec/loops.hpp"
#include "smdec/poly_matrix.hpp"
#include "smdec/smith_mcmillan.hpp"
#include "smdec/stability.hpp"
#include "smdec/transfer_matrix.hpp"

namespace smdec {

using Json = nlohmann::ordered_json;

// Polynomials are ascending coefficient arrays of exact "p/q" strings. On
// input, JSON numbers are accepted too; decimals are read exactly from their
// textual form. Every from_json throws kParse on malformed input.

Json to_json(const Poly& p);
Json to_json(const RatFunc& f);
Json to_json(const PolyMatrix& m);
Json to_json(const TransferMatrix& m);
Json to_json(const SmCertificate& c);
Json to_json(const StabilityReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const PerformanceResult& r);
Json to_json(const BoundResult& r);

Poly poly_from_json(const Json& j);
/// {"num": [...], "den": [...]}, or a bare coefficient / coefficient array.
RatFunc ratfunc_from_json(const Json& j);
PolyMatrix poly_matrix_from_json(const Json& j);
TransferMatrix transfer_matrix_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
/// Two-space indented, trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace smdec
