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

#include "wkpc/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "wkpc/classify.hpp"

namespace wkpc {
namespace {

// The single read a split rule starts with.
WKRule first_step(const WKRule& r, bool lower_first) {
  if (lower_first ? !r.lower.empty() : r.upper.empty() && !r.lower.empty()) return {r.from, {}, {r.lower.front()}, r.to};
  if (!r.upper.empty()) return {r.from, {r.upper.front()}, {}, r.to};
  return {r.from, {}, {}, r.to};
}

bool first_steps_conflict(const std::vector<WKRule>& rules, const StateId& q, bool lower_first) {
  std::vector<WKRule> steps;
  for (const auto& r : rules)
    if (r.from == q) steps.push_back(first_step(r, lower_first));
  for (std::size_t a = 0; a < steps.size(); ++a)
    for (std::size_t b = a + 1; b < steps.size(); ++b)
      if (prefix_comparable(steps[a].upper, steps[b].upper) && prefix_comparable(steps[a].lower, steps[b].lower))
        return true;
  return false;
}

}  // namespace

std::pair<PCWKSystem, NormalizationReport> normalize_one_limited(const PCWKSystem& s) {
  require_valid(s);
  NormalizationReport rep;
  for (const auto& comp : s.components) {
    rep.rules_before += comp.rules.size();
    for (const auto& r : comp.rules)
      rep.m = std::max(rep.m, static_cast<int>(r.upper.size() + r.lower.size()));
  }
  if (rep.m <= 1) {
    rep.identity = true;
    rep.rules_after = rep.rules_before;
    return {s, rep};
  }

  std::set<StateId> taken;
  for (const auto& comp : s.components) taken.insert(comp.states.begin(), comp.states.end());
  for (const auto& q : s.queries) taken.insert(q.query_state);
  // Lengthen the separator until no fresh name collides with a declared state.
  std::size_t total_rules = rep.rules_before;
  std::string sep = "__";
  auto fresh_name = [&](std::size_t j, int t) {
    return "r" + sep + std::to_string(j) + sep + std::to_string(t);
  };
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t j = 1; j <= total_rules && !clash; ++j)
      for (int t = 1; t <= rep.m && !clash; ++t) clash = taken.count(fresh_name(j, t)) > 0;
    if (clash) sep += "_";
  }

  PCWKSystem out = s;
  std::size_t j = 0;
  for (auto& comp : out.components) {
    std::set<StateId> lower_first;
    for (const auto& q : comp.states) {
      if (first_steps_conflict(comp.rules, q, false) && !first_steps_conflict(comp.rules, q, true)) {
        lower_first.insert(q);
        ++rep.lower_first_states;
      }
    }
    std::vector<WKRule> rules;
    for (const auto& r : comp.rules) {
      ++j;
      std::vector<StateId> chain{r.from};
      for (int t = 1; t <= rep.m; ++t) {
        chain.push_back(fresh_name(j, t));
        comp.states.push_back(chain.back());
        ++rep.fresh_states;
      }
      chain.push_back(r.to);
      std::size_t step = 0;
      auto link = [&](Word up, Word low) {
        rules.push_back(WKRule{chain[step], std::move(up), std::move(low), chain[step + 1]});
        ++step;
      };
      if (lower_first.count(r.from)) {
        for (const auto& y : r.lower) link({}, {y});
        for (const auto& x : r.upper) link({x}, {});
      } else {
        for (const auto& x : r.upper) link({x}, {});
        for (const auto& y : r.lower) link({}, {y});
      }
      while (step < chain.size() - 1) link({}, {});
    }
    comp.rules = std::move(rules);
    rep.rules_after += comp.rules.size();
  }
  return {out, rep};
}

namespace {

std::string pick_separator(const PCWKSystem& s) {
  for (const char* sep : {"+", ".", "$", "-", "*"}) {
    bool used = false;
    for (const auto& comp : s.components)
      for (const auto& q : comp.states) used = used || q.find(sep) != std::string::npos;
    if (!used) return sep;
  }
  return "";
}

}  // namespace

MultiheadAutomaton product_multihead(const PCWKSystem& s) {
  require_valid(s);
  if (!rho_is_injective(s.rho))
    throw PreconditionError("product construction needs an injective complementarity relation");
  const auto cls = classify_system(s);
  for (std::size_t i = 0; i < cls.per_component.size(); ++i) {
    if (!cls.per_component[i].reads_at_most_one)
      throw PreconditionError("component " + std::to_string(i + 1) +
                              " has a rule reading more than one symbol; normalize first");
    if (!cls.per_component[i].dwk)
      throw PreconditionError("component " + std::to_string(i + 1) + " is not deterministic");
  }

  const std::size_t n = s.components.size();
  const ComplementRelation inv = s.rho.inverse();
  std::map<StateId, int> query_target;
  for (const auto& q : s.queries) query_target[q.query_state] = q.target - 1;
  auto is_query = [&](const StateId& q) { return query_target.count(q) > 0; };

  using Tuple = std::vector<StateId>;
  const std::string sep = pick_separator(s);
  std::map<Tuple, std::string> names;
  std::deque<Tuple> queue;
  auto name_of = [&](const Tuple& t) -> const std::string& {
    auto it = names.find(t);
    if (it != names.end()) return it->second;
    std::string name;
    if (sep.empty()) {
      name = "p" + std::to_string(names.size());
    } else {
      for (std::size_t i = 0; i < t.size(); ++i) name += (i ? sep : std::string()) + t[i];
    }
    queue.push_back(t);
    return names.emplace(t, name).first->second;
  };

  MultiheadAutomaton out;
  out.heads = static_cast<int>(2 * n);
  out.alphabet = s.alphabet;
  out.deterministic_intent = true;
  Tuple start;
  for (const auto& comp : s.components) start.push_back(comp.start);
  out.start = name_of(start);

  std::vector<std::set<StateId>> finals;
  for (const auto& comp : s.components) finals.emplace_back(comp.finals.begin(), comp.finals.end());

  while (!queue.empty()) {
    const Tuple t = queue.front();
    queue.pop_front();
    const std::string from = names.at(t);
    out.states.push_back(from);
    bool fin = true;
    for (std::size_t i = 0; i < n; ++i) fin = fin && finals[i].count(t[i]) > 0;
    if (fin) out.finals.push_back(from);

    if (std::any_of(t.begin(), t.end(), is_query)) {
      Tuple next = t;
      for (std::size_t i = 0; i < n; ++i) {
        if (!is_query(t[i])) continue;
        const StateId& target_state = t[static_cast<std::size_t>(query_target.at(t[i]))];
        if (!is_query(target_state)) next[i] = target_state;
      }
      if (next != t) out.rules.push_back({from, std::vector<Read>(2 * n), name_of(next)});
      continue;
    }

    // One rule per combination of component rules leaving this tuple.
    std::vector<std::vector<const WKRule*>> options(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& r : s.components[i].rules)
        if (r.from == t[i]) options[i].push_back(&r);
    if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) continue;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::vector<Read> reads(2 * n);
      Tuple next(n);
      bool viable = true;
      for (std::size_t i = 0; i < n && viable; ++i) {
        const WKRule& r = *options[i][pick[i]];
        if (!r.upper.empty()) reads[2 * i] = r.upper.front();
        if (!r.lower.empty()) {
          const auto pre = rho_complements(inv, r.lower.front());
          if (pre.empty()) viable = false;
          else reads[2 * i + 1] = pre.front();
        }
        next[i] = r.to;
      }
      if (viable) out.rules.push_back({from, std::move(reads), name_of(next)});
      std::size_t i = n;
      while (i > 0 && ++pick[i - 1] == options[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

PCWKSystem lift_pcfa(const PCFASystem& s, const Symbol& upper_symbol) {
  require_valid(s);
  if (s.alphabet.contains(upper_symbol))
    throw PreconditionError("upper symbol '" + upper_symbol + "' already belongs to the alphabet");
  if (!is_valid_symbol_token(upper_symbol)) throw PreconditionError("invalid symbol token '" + upper_symbol + "'");
  PCWKSystem out;
  out.alphabet.symbols.push_back(upper_symbol);
  for (const auto& y : s.alphabet.symbols) {
    out.alphabet.symbols.push_back(y);
    out.rho.pairs.emplace_back(upper_symbol, y);
  }
  out.queries = s.queries;
  for (const auto& comp : s.components) {
    WKAutomaton m;
    m.alphabet = out.alphabet;
    m.rho = out.rho;
    m.states = comp.states;
    m.start = comp.start;
    m.finals = comp.finals;
    for (const auto& r : comp.rules) {
      if (r.read) m.rules.push_back({r.from, {upper_symbol}, {*r.read}, r.to});
      else m.rules.push_back({r.from, {}, {}, r.to});
    }
    out.components.push_back(std::move(m));
  }
  return out;
}

}  // namespace wkpc
