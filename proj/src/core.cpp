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

#include "wkpc/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <set>
#include <sstream>

namespace wkpc {

bool Alphabet::contains(const Symbol& s) const {
  return std::find(symbols.begin(), symbols.end(), s) != symbols.end();
}

std::optional<std::size_t> Alphabet::index_of(const Symbol& s) const {
  auto it = std::find(symbols.begin(), symbols.end(), s);
  if (it == symbols.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols.begin());
}

bool ComplementRelation::contains(const Symbol& upper, const Symbol& lower) const {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(upper, lower)) != pairs.end();
}

ComplementRelation ComplementRelation::inverse() const {
  ComplementRelation inv;
  inv.pairs.reserve(pairs.size());
  for (const auto& [u, l] : pairs) inv.pairs.emplace_back(l, u);
  return inv;
}

ComplementRelation ComplementRelation::identity(const Alphabet& alphabet) {
  ComplementRelation rel;
  for (const auto& s : alphabet.symbols) rel.pairs.emplace_back(s, s);
  return rel;
}

std::vector<Symbol> rho_complements(const ComplementRelation& rel, const Symbol& s) {
  std::vector<Symbol> out;
  for (const auto& [u, l] : rel.pairs) {
    if (u == s && std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

bool rho_is_injective(const ComplementRelation& rel) {
  std::map<Symbol, std::set<Symbol>> forward, backward;
  for (const auto& [u, l] : rel.pairs) {
    forward[u].insert(l);
    backward[l].insert(u);
  }
  auto at_most_one = [](const auto& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second.size() <= 1; });
  };
  return at_most_one(forward) && at_most_one(backward);
}

PCWKSystem PCWKSystem::degree_one(const WKAutomaton& m) {
  PCWKSystem s;
  s.alphabet = m.alphabet;
  s.rho = m.rho;
  s.components.push_back(m);
  return s;
}

bool is_valid_symbol_token(const std::string& token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isalnum(c) || std::strchr("_#*$+.-", c) != nullptr;
  });
}

std::string format_word(const Word& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(std::string prefix = {}) : prefix_(std::move(prefix)) {}

  void add(const std::string& field, const std::string& message) {
    out_.push_back({prefix_ + field, message});
  }

  void alphabet(const Alphabet& a) {
    if (a.symbols.empty()) add("alphabet", "alphabet is empty");
    std::set<Symbol> seen;
    for (const auto& s : a.symbols) {
      if (!is_valid_symbol_token(s)) add("alphabet", "invalid symbol token '" + s + "'");
      if (!seen.insert(s).second) add("alphabet", "duplicate symbol '" + s + "'");
    }
  }

  void rho(const ComplementRelation& rel, const Alphabet& a) {
    std::set<std::pair<Symbol, Symbol>> seen;
    for (const auto& p : rel.pairs) {
      if (!a.contains(p.first) || !a.contains(p.second))
        add("rho", "pair (" + p.first + "," + p.second + ") outside the alphabet");
      if (!seen.insert(p).second) add("rho", "duplicate pair (" + p.first + "," + p.second + ")");
    }
  }

  // Checks the state set, start and finals; returns the declared set.
  std::set<StateId> states(const std::vector<StateId>& states, const StateId& start,
                           const std::vector<StateId>& finals) {
    std::set<StateId> declared;
    if (states.empty()) add("states", "state set is empty");
    for (const auto& q : states) {
      if (!is_valid_symbol_token(q)) add("states", "invalid state token '" + q + "'");
      if (!declared.insert(q).second) add("states", "duplicate state '" + q + "'");
    }
    if (!declared.count(start)) add("start", "start state '" + start + "' is not declared");
    std::set<StateId> seen;
    for (const auto& f : finals) {
      if (!declared.count(f)) add("finals", "final state '" + f + "' is not declared");
      if (!seen.insert(f).second) add("finals", "duplicate final state '" + f + "'");
    }
    return declared;
  }

  void word(const Word& w, const Alphabet& a, const std::string& field) {
    for (const auto& s : w)
      if (!a.contains(s)) add(field, "symbol '" + s + "' is not in the alphabet");
  }

  void endpoints(const std::set<StateId>& declared, const StateId& from, const StateId& to,
                 const std::string& field) {
    if (!declared.count(from)) add(field, "source state '" + from + "' is not declared");
    if (!declared.count(to)) add(field, "target state '" + to + "' is not declared");
  }

  void append(std::vector<Violation> more) {
    for (auto& v : more) out_.push_back(std::move(v));
  }

  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::string prefix_;
  std::vector<Violation> out_;
};

std::string rule_field(std::size_t i) { return "rules[" + std::to_string(i) + "]"; }

std::vector<Violation> validate_wk(const WKAutomaton& m, const std::string& prefix) {
  Checker c(prefix);
  c.alphabet(m.alphabet);
  c.rho(m.rho, m.alphabet);
  auto declared = c.states(m.states, m.start, m.finals);
  for (std::size_t i = 0; i < m.rules.size(); ++i) {
    const auto& r = m.rules[i];
    c.endpoints(declared, r.from, r.to, rule_field(i));
    c.word(r.upper, m.alphabet, rule_field(i));
    c.word(r.lower, m.alphabet, rule_field(i));
  }
  return c.take();
}

void check_queries(Checker& c, const std::vector<QueryBinding>& queries, std::size_t degree,
                   const std::set<StateId>& all_states) {
  std::set<StateId> seen;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const auto& q = queries[i];
    const std::string field = "queries[" + std::to_string(i) + "]";
    if (q.target < 1 || static_cast<std::size_t>(q.target) > degree)
      c.add(field, "target " + std::to_string(q.target) + " is outside 1.." + std::to_string(degree));
    if (!all_states.count(q.query_state))
      c.add(field, "query state '" + q.query_state + "' is not a state of any component");
    if (!seen.insert(q.query_state).second)
      c.add(field, "query state '" + q.query_state + "' is bound twice");
  }
}

}  // namespace

std::vector<Violation> validate(const WKAutomaton& m) { return validate_wk(m, ""); }

std::vector<Violation> validate(const MultiheadAutomaton& m) {
  Checker c;
  if (m.heads < 1) c.add("heads", "head count must be at least 1");
  c.alphabet(m.alphabet);
  auto declared = c.states(m.states, m.start, m.finals);
  for (std::size_t i = 0; i < m.rules.size(); ++i) {
    const auto& r = m.rules[i];
    c.endpoints(declared, r.from, r.to, rule_field(i));
    if (static_cast<int>(r.reads.size()) != m.heads)
      c.add(rule_field(i), "reads " + std::to_string(r.reads.size()) + " heads, machine has " +
                               std::to_string(m.heads));
    for (const auto& rd : r.reads)
      if (rd && !m.alphabet.contains(*rd))
        c.add(rule_field(i), "symbol '" + *rd + "' is not in the alphabet");
  }
  return c.take();
}

std::vector<Violation> validate(const PCFASystem& s) {
  Checker c;
  c.alphabet(s.alphabet);
  if (s.components.empty()) c.add("components", "system has no components");
  std::set<StateId> all_states;
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const auto& comp = s.components[k];
    Checker cc("components[" + std::to_string(k) + "].");
    auto declared = cc.states(comp.states, comp.start, comp.finals);
    all_states.insert(declared.begin(), declared.end());
    for (std::size_t i = 0; i < comp.rules.size(); ++i) {
      const auto& r = comp.rules[i];
      cc.endpoints(declared, r.from, r.to, rule_field(i));
      if (r.read && !s.alphabet.contains(*r.read))
        cc.add(rule_field(i), "symbol '" + *r.read + "' is not in the alphabet");
    }
    c.append(cc.take());
  }
  check_queries(c, s.queries, s.components.size(), all_states);
  return c.take();
}

std::vector<Violation> validate(const PCWKSystem& s) {
  Checker c;
  c.alphabet(s.alphabet);
  c.rho(s.rho, s.alphabet);
  if (s.components.empty()) c.add("components", "system has no components");
  std::set<StateId> all_states;
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const auto& comp = s.components[k];
    const std::string prefix = "components[" + std::to_string(k) + "].";
    if (comp.alphabet != s.alphabet) c.add(prefix + "alphabet", "differs from the system alphabet");
    if (comp.rho != s.rho) c.add(prefix + "rho", "differs from the system complementarity relation");
    c.append(validate_wk(comp, prefix));
    all_states.insert(comp.states.begin(), comp.states.end());
  }
  check_queries(c, s.queries, s.components.size(), all_states);
  return c.take();
}

std::vector<Violation> validate(const Machine& m) {
  return std::visit([](const auto& x) { return validate(x); }, m);
}

void require_valid(const Machine& m) {
  auto violations = validate(m);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid machine:";
  for (const auto& v : violations) msg << "\n  " << v.field << ": " << v.message;
  throw PreconditionError(msg.str());
}

const Alphabet& input_alphabet(const Machine& m) {
  return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet; }, m);
}

}  // namespace wkpc
