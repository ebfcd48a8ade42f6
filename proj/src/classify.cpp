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

#include "wkpc/classify.hpp"

#include <algorithm>
#include <set>

#include "wkpc/engine.hpp"
#include "wkpc/oracle.hpp"

namespace wkpc {

std::string to_string(BoundedStatus s) {
  switch (s) {
    case BoundedStatus::unchecked: return "unchecked";
    case BoundedStatus::holds_up_to_bound: return "holds-up-to-bound";
    case BoundedStatus::violated: return "violated";
  }
  return "unknown";
}

bool prefix_comparable(const Word& u, const Word& v) {
  const std::size_t n = std::min(u.size(), v.size());
  return std::equal(u.begin(), u.begin() + static_cast<long>(n), v.begin());
}

WKClassReport classify_wk(const WKAutomaton& m) {
  WKClassReport r;
  const std::set<StateId> states(m.states.begin(), m.states.end());
  const std::set<StateId> finals(m.finals.begin(), m.finals.end());
  r.all_final = states == finals;
  r.stateless = r.all_final && states.size() == 1;
  r.simple = std::all_of(m.rules.begin(), m.rules.end(),
                         [](const WKRule& x) { return x.upper.empty() || x.lower.empty(); });
  r.one_limited = std::all_of(m.rules.begin(), m.rules.end(),
                              [](const WKRule& x) { return x.upper.size() + x.lower.size() == 1; });
  r.reads_at_most_one = std::all_of(m.rules.begin(), m.rules.end(),
                                    [](const WKRule& x) { return x.upper.size() + x.lower.size() <= 1; });
  for (std::size_t i = 0; i < m.rules.size() && !r.dwk_witness; ++i) {
    for (std::size_t j = i + 1; j < m.rules.size(); ++j) {
      const auto& a = m.rules[i];
      const auto& b = m.rules[j];
      if (a.from != b.from || a == b) continue;
      if (prefix_comparable(a.upper, b.upper) && prefix_comparable(a.lower, b.lower)) {
        r.dwk_witness = RulePair{i, j};
        break;
      }
    }
  }
  r.dwk = !r.dwk_witness;
  r.sdwk = r.dwk && rho_is_injective(m.rho);
  return r;
}

SystemClassReport classify_system(const PCWKSystem& s) {
  SystemClassReport r;
  r.dpcwks = true;
  for (const auto& comp : s.components) {
    r.per_component.push_back(classify_wk(comp));
    r.dpcwks = r.dpcwks && r.per_component.back().dwk;
  }
  r.sdpcwks = r.dpcwks && rho_is_injective(s.rho);
  return r;
}

BoundedWeakDeterminism bounded_weak_determinism(const PCWKSystem& s, int max_len, std::size_t node_limit) {
  if (max_len < 0) throw PreconditionError("bound must be non-negative");
  PCWKRunner runner(s);
  BoundedWeakDeterminism out;
  out.bound = max_len;
  WordEnumerator words(s.alphabet, static_cast<std::size_t>(max_len));
  Word upper;
  while (words.next(upper)) {
    ComplementStrands strands(s.rho, s.alphabet, upper);
    Word lower;
    while (strands.next(lower)) {
      runner.explore_fixed(
          upper, lower,
          [&](const ConfigVisit& v) {
            if (v.communication()) return true;
            for (std::size_t i = 0; i < v.degree(); ++i) {
              if (v.distinct_outcomes(i) < 2) continue;
              const auto pc = v.config();
              out.witness = WeakDeterminismWitness{upper, lower, i + 1, pc.states, pc.upper_pos, pc.lower_pos};
              return false;
            }
            return true;
          },
          node_limit);
      if (out.witness) {
        out.status = BoundedStatus::violated;
        return out;
      }
    }
  }
  out.status = BoundedStatus::holds_up_to_bound;
  return out;
}

MultiheadDeterminism multihead_is_deterministic(const MultiheadAutomaton& m) {
  MultiheadDeterminism r;
  auto compatible = [](const Read& a, const Read& b) { return !a || !b || *a == *b; };
  for (std::size_t i = 0; i < m.rules.size(); ++i) {
    for (std::size_t j = i + 1; j < m.rules.size(); ++j) {
      const auto& a = m.rules[i];
      const auto& b = m.rules[j];
      if (a.from != b.from || a == b || a.reads.size() != b.reads.size()) continue;
      bool all = true;
      for (std::size_t h = 0; h < a.reads.size() && all; ++h) all = compatible(a.reads[h], b.reads[h]);
      if (all) {
        r.deterministic = false;
        r.witness = RulePair{i, j};
        return r;
      }
    }
  }
  return r;
}

}  // namespace wkpc
