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
// Run engines. Watson-Crick runs search over the existential lower strand by
// committing it lazily, one symbol at a time, as rules read it; every
// component of a system reads the same committed prefix.

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wkpc/core.hpp"

namespace wkpc {

enum class RunReason { accepted, exhausted, component_stuck, cycle_without_progress, resource_limit };

std::string to_string(RunReason r);

/// Snapshot of a system configuration. For single-strand systems `lower_pos`
/// is empty; for multihead runs `states` has one entry and `upper_pos` holds
/// the head positions.
struct PCConfiguration {
  std::vector<StateId> states;
  std::vector<std::size_t> upper_pos;
  std::vector<std::size_t> lower_pos;
  Word committed;

  bool operator==(const PCConfiguration&) const = default;
};

struct TraceStep {
  PCConfiguration config;
  /// Rule index (within its component) fired by each component to reach
  /// `config`; empty on the initial configuration and after communication.
  std::vector<std::optional<std::size_t>> fired;
  bool communication = false;
};

struct RunResult {
  bool accepted = false;
  std::optional<Word> witness_lower;
  std::optional<std::vector<TraceStep>> trace;  // accepting path, when requested
  RunReason reason = RunReason::exhausted;
  std::size_t nodes = 0;  // configurations visited
};

/// 5,000,000 unless the WKPC_NODE_LIMIT environment variable holds a
/// positive integer.
std::size_t default_node_limit();

struct RunOptions {
  std::size_t node_limit = 0;  // 0 = default_node_limit()
  bool trace = false;
};

class ConfigVisit;

/// Compiles a system once for repeated runs.
class PCWKRunner {
 public:
  explicit PCWKRunner(const PCWKSystem& s);
  explicit PCWKRunner(const PCFASystem& s);
  ~PCWKRunner();
  PCWKRunner(PCWKRunner&&) noexcept;
  PCWKRunner& operator=(PCWKRunner&&) noexcept;

  RunResult accepts(const Word& upper, const RunOptions& opts = {});
  /// Both strands fixed (double-stranded systems only).
  RunResult accepts_fixed(const Word& upper, const Word& lower, const RunOptions& opts = {});

  /// Visits every configuration reachable on the fixed double strand, calling
  /// `visit` once per configuration. Returns false if `visit` stopped the
  /// walk early, or if the strand pair is malformed. Throws
  /// ResourceLimitError past `node_limit` configurations.
  bool explore_fixed(const Word& upper, const Word& lower,
                     const std::function<bool(const ConfigVisit&)>& visit, std::size_t node_limit = 0);

  std::vector<PCConfiguration> step(const PCConfiguration& c, const Word& upper) const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

/// Read-only view of one configuration during explore_fixed.
class ConfigVisit {
 public:
  std::size_t degree() const;
  bool communication() const;
  /// Applicable rules of component `comp` (0-based).
  int applicable(std::size_t comp) const;
  /// Distinct successor (state, positions) among those rules.
  int distinct_outcomes(std::size_t comp) const;
  PCConfiguration config() const;

 private:
  friend struct PCWKRunner::Impl;
  explicit ConfigVisit(const void* ctx) : ctx_(ctx) {}
  const void* ctx_;
};

RunResult wk_accepts_fixed(const WKAutomaton& m, const Word& upper, const Word& lower,
                           const RunOptions& opts = {});
RunResult wk_accepts(const WKAutomaton& m, const Word& upper, const RunOptions& opts = {});
RunResult pcwk_accepts(const PCWKSystem& s, const Word& upper, const RunOptions& opts = {});
RunResult pcwk_accepts_fixed(const PCWKSystem& s, const Word& upper, const Word& lower,
                             const RunOptions& opts = {});
RunResult pcfa_accepts(const PCFASystem& s, const Word& w, const RunOptions& opts = {});

/// Successors of `c` on upper word `upper`. A communication step whose
/// queried targets are all querying returns `{c}` unchanged.
std::vector<PCConfiguration> pcwk_step(const PCWKSystem& s, const PCConfiguration& c, const Word& upper);

class MultiheadRunner {
 public:
  explicit MultiheadRunner(const MultiheadAutomaton& m);
  ~MultiheadRunner();
  MultiheadRunner(MultiheadRunner&&) noexcept;
  MultiheadRunner& operator=(MultiheadRunner&&) noexcept;

  RunResult accepts(const Word& w, const RunOptions& opts = {});
  /// Every configuration reachable on `w` has at most this many applicable rules.
  int max_applicable(const Word& w, std::size_t node_limit = 0);

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

RunResult multihead_accepts(const MultiheadAutomaton& m, const Word& w, const RunOptions& opts = {});

}  // namespace wkpc
