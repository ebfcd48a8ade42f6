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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "wkpc/core.hpp"

namespace wkpc::testing {

class MachineGenerator {
 public:
  explicit MachineGenerator(unsigned seed) : rng_(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Distinct tokens over the full file-format character set.
  std::vector<std::string> tokens(int count) {
    static const std::string chars = "abcxyzQK019_#*$+.-";
    std::set<std::string> seen;
    std::vector<std::string> out;
    while (static_cast<int>(out.size()) < count) {
      std::string t;
      const int len = pick(1, 3);
      for (int i = 0; i < len; ++i) t += chars[static_cast<std::size_t>(pick(0, static_cast<int>(chars.size()) - 1))];
      if (t == "eps" || t == "_" || !seen.insert(t).second) continue;
      out.push_back(t);
    }
    return out;
  }

  Alphabet alphabet() { return Alphabet{tokens(pick(1, 4))}; }

  ComplementRelation relation(const Alphabet& a) {
    ComplementRelation r;
    for (const auto& x : a.symbols)
      for (const auto& y : a.symbols)
        if (coin(0.4)) r.pairs.emplace_back(x, y);
    return r;
  }

  Word word(const Alphabet& a, int max_len) {
    Word w;
    const int len = pick(0, max_len);
    for (int i = 0; i < len; ++i) w.push_back(symbol(a));
    return w;
  }

  Symbol symbol(const Alphabet& a) {
    return a.symbols[static_cast<std::size_t>(pick(0, static_cast<int>(a.size()) - 1))];
  }

  const StateId& state(const std::vector<StateId>& s) {
    return s[static_cast<std::size_t>(pick(0, static_cast<int>(s.size()) - 1))];
  }

  std::vector<StateId> finals(const std::vector<StateId>& states) {
    std::vector<StateId> f;
    for (const auto& q : states)
      if (coin(0.3)) f.push_back(q);
    return f;
  }

  WKAutomaton wk(const Alphabet& a, const ComplementRelation& rho, std::vector<StateId> states) {
    WKAutomaton m;
    m.alphabet = a;
    m.rho = rho;
    m.states = std::move(states);
    m.start = state(m.states);
    m.finals = finals(m.states);
    const int rules = pick(0, 6);
    for (int i = 0; i < rules; ++i) m.rules.push_back({state(m.states), word(a, 2), word(a, 2), state(m.states)});
    return m;
  }

  WKAutomaton wk() {
    const Alphabet a = alphabet();
    return wk(a, relation(a), tokens(pick(1, 4)));
  }

  PCWKSystem pcwk() {
    PCWKSystem s;
    s.alphabet = alphabet();
    s.rho = relation(s.alphabet);
    const int n = pick(1, 3);
    std::vector<StateId> all;
    for (int k = 0; k < n; ++k) {
      s.components.push_back(wk(s.alphabet, s.rho, tokens(pick(1, 4))));
      all.insert(all.end(), s.components.back().states.begin(), s.components.back().states.end());
    }
    s.queries = queries(all, n);
    return s;
  }

  MultiheadAutomaton mhdfa() {
    MultiheadAutomaton m;
    m.heads = pick(1, 4);
    m.alphabet = alphabet();
    m.states = tokens(pick(1, 4));
    m.start = state(m.states);
    m.finals = finals(m.states);
    m.deterministic_intent = coin();
    const int rules = pick(0, 6);
    for (int i = 0; i < rules; ++i) {
      MultiheadRule r{state(m.states), {}, state(m.states)};
      for (int h = 0; h < m.heads; ++h) r.reads.push_back(coin() ? Read(symbol(m.alphabet)) : Read());
      m.rules.push_back(std::move(r));
    }
    return m;
  }

  PCFASystem pcfa() {
    PCFASystem s;
    s.alphabet = alphabet();
    const int n = pick(1, 3);
    std::vector<StateId> all;
    for (int k = 0; k < n; ++k) {
      FAComponent c;
      c.states = tokens(pick(1, 4));
      c.start = state(c.states);
      c.finals = finals(c.states);
      const int rules = pick(0, 6);
      for (int i = 0; i < rules; ++i)
        c.rules.push_back({state(c.states), coin() ? Read(symbol(s.alphabet)) : Read(), state(c.states)});
      all.insert(all.end(), c.states.begin(), c.states.end());
      s.components.push_back(std::move(c));
    }
    s.queries = queries(all, n);
    return s;
  }

  Machine any() {
    switch (pick(0, 3)) {
      case 0: return wk();
      case 1: return pcwk();
      case 2: return mhdfa();
      default: return pcfa();
    }
  }

 private:
  std::vector<QueryBinding> queries(const std::vector<StateId>& all, int n) {
    std::set<StateId> bound;
    std::vector<QueryBinding> out;
    const int count = pick(0, 2);
    for (int i = 0; i < count; ++i) {
      const StateId& q = state(all);
      if (bound.insert(q).second) out.push_back({q, pick(1, n)});
    }
    return out;
  }

  std::mt19937 rng_;
};

}  // namespace wkpc::testing
