// Copyright 2026 The fracdim Authors
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

#ifndef FRACDIM_VERIFY_HPP
#define FRACDIM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracdim {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  // First failing case, or a summary for passing checks.
  std::string detail;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteOptions {
  // Largest denominator for the enumeration suites; nullopt uses the suite's
  // default (500 for roundtrip, 100 for covers).
  std::optional<std::uint64_t> max_denom;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

// roundtrip, gaps, ordering, lemma31, lemma41, covers, bounds, oracle.
const std::vector<std::string_view>& suite_names();

// Runs one suite. Throws DomainError for an unknown name.
std::vector<CheckResult> run_suite(std::string_view name,
                                   const SuiteOptions& options = {});

}  // namespace fracdim

#endif  // FRACDIM_VERIFY_HPP
