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
//
// Machine transformations: splitting rules into single-symbol reads,
// flattening a deterministic system into one multihead automaton, and
// lifting a single-strand system onto a uniletter upper strand.

#pragma once

#include <cstddef>
#include <utility>

#include "wkpc/core.hpp"

namespace wkpc {

struct NormalizationReport {
  int m = 0;  // longest total read of any rule
  std::size_t rules_before = 0;
  std::size_t rules_after = 0;
  std::size_t fresh_states = 0;
  bool identity = false;  // m <= 1, returned unchanged
  std::size_t lower_first_states = 0;
};

/// Replaces each rule reading k upper and k' lower symbols by m+1 rules:
/// k single upper reads, k' single lower reads, then empty steps, threaded
/// through fresh states `r__<j>__<t>` (j = 1-based global rule index).
/// A source state whose rules would start with conflicting single reads in
/// that order, but not with lower reads first, has all its rules split lower
/// strand first instead.
std::pair<PCWKSystem, NormalizationReport> normalize_one_limited(const PCWKSystem& s);

/// 2n-head automaton simulating a deterministic system whose relation is
/// injective and whose rules read at most one symbol. Heads 2i-1 and 2i
/// follow component i's upper and lower strands; lower reads are mapped back
/// through the relation. Product state names join the component
/// states with the first of + . $ - * that no state name contains.
MultiheadAutomaton product_multihead(const PCWKSystem& s);

/// Reads each symbol y of the single-strand system as the pair
/// (upper_symbol / y); empty reads become (eps / eps).
PCWKSystem lift_pcfa(const PCFASystem& s, const Symbol& upper_symbol);

}  // namespace wkpc
