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

#ifndef FRACDIM_BOXCOUNT_HPP
#define FRACDIM_BOXCOUNT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fracdim/constructions.hpp"
#include "fracdim/interval.hpp"
#include "fracdim/rational.hpp"
#include "fracdim/set_descriptor.hpp"
#include "fracdim/word.hpp"

namespace fracdim {

// Upper limit on the number of grid cells a single mesh count may address.
inline constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 26;

// A uniform grid of width r over a domain. Cells are [lo + k r, lo + (k+1) r)
// except the last, which is closed and clipped to the domain's right end.
class Grid {
 public:
  // r = 2^-j.
  static Grid dyadic(unsigned scale_log2, const Interval& domain);
  static Grid with_width(const Rational& width, const Interval& domain);

  const Rational& width() const { return width_; }
  std::optional<unsigned> scale_log2() const { return scale_log2_; }
  const Interval& domain() const { return domain_; }

  // ceil(length(domain) / r).
  const BigInt& cell_count() const { return cells_; }

  Interval cell(std::uint64_t k) const { return cells(k, k + 1); }
  // Union of cells [begin, end).
  Interval cells(std::uint64_t begin, std::uint64_t end) const;

 private:
  Grid(Rational width, std::optional<unsigned> scale_log2, Interval domain);

  Rational width_;
  std::optional<unsigned> scale_log2_;
  Interval domain_;
  BigInt cells_;
};

// A concrete member of a set: the digit word that generates it and, when it
// is rational, its value. Sumset words list the nonzero terms' denominators.
struct Witness {
  Word word;
  std::optional<Rational> value;
};

// Exact search for a member of `set` inside `cell`. Each family reduces the
// question to a chain of interval preimages under the digit maps, accepting
// at accumulation points. Throws DomainError for a sumset with non-integer
// alpha and m >= 2.
std::optional<Witness> find_member(const SetDescriptor& set,
                                   const Interval& cell);

// Checks a witness independently of the search: the value lies in `cell` and
// re-expanding it reproduces the word with the right length.
bool verify_witness(const SetDescriptor& set, const Interval& cell,
                    const Witness& witness);

// find_member followed by verify_witness. A witness failing verification is
// an internal error (std::logic_error).
bool cell_contains(const SetDescriptor& set, const Interval& cell);

struct MeshOptions {
  // Worker count; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

struct MeshReport {
  SetDescriptor set;
  Rational scale;
  std::uint64_t occupied_cells = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Number of grid cells meeting the set. Throws ResourceError when the grid
// has more than kMaxCells cells.
MeshReport mesh_count(const SetDescriptor& set, const Grid& grid,
                      const MeshOptions& options = {});

struct SlopeFit {
  std::vector<unsigned> scale_log2;
  std::vector<Rational> scales;
  std::vector<std::uint64_t> counts;
  double slope = 0;
  double intercept = 0;
  std::vector<double> per_step_slopes;
  // Root-mean-square deviation of log2(count) from the fitted line.
  double residual = 0;
};

// Least-squares slope of log2(count) against j. Needs at least two scales
// and positive counts.
SlopeFit fit_slope(const std::vector<unsigned>& scale_log2,
                   const std::vector<std::uint64_t>& counts);

// Mesh counts over r = 2^-j, j = j_lo..j_hi on the set's default domain.
SlopeFit dim_estimate(const SetDescriptor& set, unsigned j_lo, unsigned j_hi,
                      const MeshOptions& options = {});

// Every point lies in at least one (closed) cover interval.
bool verify_cover(const std::vector<Rational>& points,
                  const std::vector<CoverElement>& cover);

// Samples x = k * grid_step in (0, 1/n) and checks that egy_approximate lands
// within n^(-2^m) on a point of E_m. Throws DomainError when grid_step
// exceeds n^(-2^m).
bool neighborhood_covers(unsigned m, unsigned long n, const Rational& grid_step);

// Lebesgue measure of a finite union of intervals.
Rational measure_union(std::vector<Interval> intervals);

enum class BoundFamily { kCf, kSumset, kEngel };

std::string_view to_string(BoundFamily family);

struct BoundReport {
  BoundFamily family;
  unsigned m;
  unsigned long n;
  Rational scale;
  std::uint64_t mesh_count = 0;
  Rational bound;
  bool pass = false;
};

// Mesh count at the covering scale (n^-2m for C_m, n^-(2^m) for F_m,
// n^-(m+1) for A*_m) checked against twice the closed-form bound.
BoundReport verify_bounds(BoundFamily family, unsigned m, unsigned long n,
                          const MeshOptions& options = {});

}  // namespace fracdim

#endif  // FRACDIM_BOXCOUNT_HPP
