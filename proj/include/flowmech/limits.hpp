// Copyright 2026 The flowmech Authors
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

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace flowmech {

/// Thrown when an exponential-time routine is asked to run on an instance
/// above its desk-scale guard.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Desk-scale guards for the exponential routines.
struct Limits {
  std::size_t subset_edges = 20;       // 2^n coalition / edge-subset tables
  std::size_t permutation_edges = 9;   // n! permutation oracle
  std::size_t core_bound_edges = 12;   // LP over 2^n core constraints
  std::size_t subset_nodes = 22;       // 2^(n-2) node-subset cut enumeration
};

/// Process-wide limits. `FLOWMECH_MAX_EDGES`, when set to a positive
/// integer, replaces every edge guard with that value (and the node guard
/// with that value plus the two terminals).
inline const Limits& limits() {
  static const Limits cached = [] {
    Limits l;
    if (const char* env = std::getenv("FLOWMECH_MAX_EDGES")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        l.subset_edges = v;
        l.permutation_edges = v;
        l.core_bound_edges = v;
        l.subset_nodes = v + 2;
      }
    }
    return l;
  }();
  return cached;
}

inline void require_at_most(std::size_t value, std::size_t limit,
                            const char* what) {
  if (value > limit) {
    throw SizeLimitError(std::string(what) + ": size " + std::to_string(value) +
                         " exceeds desk-scale limit " + std::to_string(limit) +
                         " (override with FLOWMECH_MAX_EDGES)");
  }
}

}  // namespace flowmech
