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

#ifndef FRACDIM_CLI_HPP
#define FRACDIM_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracdim/interval.hpp"
#include "fracdim/rational.hpp"
#include "fracdim/set_descriptor.hpp"
#include "fracdim/verify.hpp"
#include "fracdim/word.hpp"

namespace fracdim {

enum class Command { kExpand, kApprox, kMesh, kDim, kCoverEgf, kVerify };
enum class Format { kText, kJson, kCsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_args for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::kExpand;
  std::optional<SetDescriptor> set;
  WordKind kind = WordKind::kContinuedFraction;
  Rational x;
  unsigned m = 1;
  unsigned long n = 2;
  unsigned scale_log2 = 0;
  unsigned j_lo = 0;
  unsigned j_hi = 0;
  std::optional<Interval> domain;
  std::string suite;
  std::optional<std::uint64_t> max_denom;
  std::uint64_t seed = kDefaultSeed;
  // Side CSV file for dim / cover-egf.
  std::optional<std::string> csv_path;
  // Main output file; standard output when unset.
  std::optional<std::string> output;
  Format format = Format::kText;
  // From FRACDIM_THREADS; 0 means one worker per hardware thread.
  unsigned threads = 0;
};

// argv excludes the program name. Throws UsageError naming the offending flag
// and HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& argv);

// Executes the command and returns the exit status. Diagnostics go to `err`
// as one line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fracdim

#endif  // FRACDIM_CLI_HPP
