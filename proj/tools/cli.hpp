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

namespace smdec::cli {

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitPropertyFail = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNonConvergence = 3;

/// Runs the command line; argv[0] is the program name. Errors are reported on
/// err as a one-line JSON object {"error": <code>, "message": <text>}.
int run(const std::vector<const char*>& argv, std::ostream& out, std::ostream& err);

}  // namespace smdec::cli
