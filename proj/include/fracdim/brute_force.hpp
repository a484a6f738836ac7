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

#ifndef FRACDIM_BRUTE_FORCE_HPP
#define FRACDIM_BRUTE_FORCE_HPP

#include <cstdint>
#include <vector>

#include "fracdim/set_descriptor.hpp"

namespace fracdim {

// Enumeration limits: CF digits and Egyptian/Engel/sumset denominators.
struct EnumerationBounds {
  std::uint64_t cf_digit = 64;
  std::uint64_t denominator = 4096;
};

// occupied[j][k]: some enumerated member lies in cell k of the dyadic grid
// 2^-j over the set's default domain (same cell convention as Grid).
struct BruteForceOccupancy {
  EnumerationBounds bounds;
  std::vector<std::vector<std::uint8_t>> occupied;
};

// Enumerates every member with bounded digits in machine arithmetic and marks
// its cells for j = 0..j_max. Egyptian and Engel members are accepted only
// after re-expanding the value. Supports m <= 2 and alpha = 1; throws
// DomainError otherwise.
BruteForceOccupancy brute_force_occupancy(const SetDescriptor& set,
                                          unsigned j_max,
                                          const EnumerationBounds& bounds = {});

}  // namespace fracdim

#endif  // FRACDIM_BRUTE_FORCE_HPP
