// Copyright 2026 The totalcoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohere::cli {

// Seed used by every subcommand unless --seed is given.
inline constexpr unsigned long long kDefaultSeed = 1;

/// Runs one `cohere` invocation. Returns 0 on success, 1 on validation
/// failures (bad matrix file, invariant violation, failed verification),
/// 2 on usage errors. Never throws on malformed input.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace cohere::cli
