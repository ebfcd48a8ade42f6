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
// Subclass and determinism checks for Watson-Crick automata, systems of
// them, and multihead automata.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wkpc/core.hpp"

namespace wkpc {

/// True iff one word is a prefix of the other.
bool prefix_comparable(const Word& u, const Word& v);

/// Indices into the rule list of the conflicting pair, first < second.
using RulePair = std::pair<std::size_t, std::size_t>;

struct WKClassReport {
  bool stateless = false;
  bool all_final = false;
  bool simple = false;
  bool one_limited = false;        // every rule reads exactly one symbol
  bool reads_at_most_one = false;  // every rule reads at most one symbol
  bool dwk = false;
  bool sdwk = false;
  std::optional<RulePair> dwk_witness;
};

enum class BoundedStatus { unchecked, holds_up_to_bound, violated };

struct WeakDeterminismWitness {
  Word upper;
  Word lower;
  std::size_t component = 0;  // 1-based
  std::vector<StateId> states;
  std::vector<std::size_t> upper_pos;
  std::vector<std::size_t> lower_pos;
};

struct BoundedWeakDeterminism {
  BoundedStatus status = BoundedStatus::unchecked;
  int bound = 0;
  std::optional<WeakDeterminismWitness> witness;
};

struct SystemClassReport {
  std::vector<WKClassReport> per_component;
  bool dpcwks = false;
  bool sdpcwks = false;
  BoundedWeakDeterminism wdpcwks_bounded;
};

WKClassReport classify_wk(const WKAutomaton& m);
SystemClassReport classify_system(const PCWKSystem& s);

/// Explores every reachable configuration on every double strand whose upper
/// word has length <= `max_len`. A configuration violates weak determinism
/// when one component has two applicable rules leading to different
/// successors. Throws ResourceLimitError past `node_limit` configurations.
BoundedWeakDeterminism bounded_weak_determinism(const PCWKSystem& s, int max_len,
                                                std::size_t node_limit = 5'000'000);

struct MultiheadDeterminism {
  bool deterministic = true;
  std::optional<RulePair> witness;
};

MultiheadDeterminism multihead_is_deterministic(const MultiheadAutomaton& m);

std::string to_string(BoundedStatus s);

}  // namespace wkpc
