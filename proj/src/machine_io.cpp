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

#include "wkpc/machine_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wkpc {

std::string to_string(MachineKind k) {
  switch (k) {
    case MachineKind::wk: return "wk";
    case MachineKind::pcwk: return "pcwk";
    case MachineKind::mhdfa: return "mhdfa";
    case MachineKind::pcfa: return "pcfa";
  }
  return "unknown";
}

MachineKind kind_of(const Machine& m) {
  switch (m.index()) {
    case 0: return MachineKind::wk;
    case 1: return MachineKind::pcwk;
    case 2: return MachineKind::mhdfa;
    default: return MachineKind::pcfa;
  }
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

bool token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || std::strchr("_#*$+.-", c) != nullptr;
}

enum class Tok { word, arrow, colon, slash, lbracket, rbracket, lparen, rparen };

struct Token {
  Tok kind;
  std::string text;
  int col;
};

std::vector<Token> lex_line(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == ';') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", col});
      i += 2;
      continue;
    }
    const char* punct = ":/[]()";
    if (const char* p = std::strchr(punct, c); p && c != '\0') {
      static const Tok kinds[] = {Tok::colon, Tok::slash, Tok::lbracket, Tok::rbracket, Tok::lparen, Tok::rparen};
      out.push_back({kinds[p - punct], std::string(1, c), col});
      ++i;
      continue;
    }
    if (!token_char(c)) throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    std::size_t j = i;
    while (j < line.size() && token_char(line[j]) && !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
      ++j;
    out.push_back({Tok::word, std::string(line.substr(i, j - i)), col});
    i = j;
  }
  return out;
}

struct PendingComponent {
  int line = 0;
  std::vector<StateId> states;
  std::optional<StateId> start;
  std::vector<StateId> finals;
  bool has_states = false, has_final = false;
  std::vector<WKRule> wk_rules;
  std::vector<MultiheadRule> mh_rules;
  std::vector<FARule> fa_rules;
  std::set<StateId> declared;
};

class Parser {
 public:
  MachineDocument run(std::string_view text) {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no;
      line_ = line_no;
      auto toks = lex_line(line, line_no);
      if (!toks.empty()) directive(toks);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.col, msg); }
  [[noreturn]] void fail_line(const std::string& msg) const { throw ParseError(line_, 1, msg); }

  const Token& expect_word(const std::vector<Token>& t, std::size_t i, const char* what) const {
    if (i >= t.size()) throw ParseError(line_, t.empty() ? 1 : t.back().col, std::string("expected ") + what);
    if (t[i].kind != Tok::word) fail(t[i], std::string("expected ") + what + ", found '" + t[i].text + "'");
    return t[i];
  }

  void expect_end(const std::vector<Token>& t, std::size_t i) const {
    if (i < t.size()) fail(t[i], "unexpected '" + t[i].text + "'");
  }

  int parse_int(const Token& t) const {
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        t.text.size() > 9)
      fail(t, "expected a non-negative integer, found '" + t.text + "'");
    return std::stoi(t.text);
  }

  void need_header(const Token& t) const {
    if (!have_machine_) fail(t, "the first directive must be 'machine'");
  }

  bool multi_component() const { return kind_ == MachineKind::pcwk || kind_ == MachineKind::pcfa; }

  void directive(const std::vector<Token>& t) {
    const Token& head = t[0];
    if (head.kind != Tok::word) fail(head, "expected a directive, found '" + head.text + "'");
    const std::string& d = head.text;
    if (d == "machine") return machine(t);
    need_header(head);
    if (d == "alphabet") return alphabet(t);
    if (d == "rho") return rho(t);
    if (d == "heads") return heads(t);
    if (d == "deterministic") return deterministic(t);
    if (d == "query") return query(t);
    if (d == "component") return component(t);
    if (d == "states" || d == "start" || d == "final" || d == "trans") return body(t);
    fail(head, "unknown directive '" + d + "'");
  }

  void machine(const std::vector<Token>& t) {
    if (have_machine_) fail(t[0], "duplicate 'machine' directive");
    name_ = expect_word(t, 1, "machine name").text;
    if (t.size() < 3 || t[2].kind != Tok::colon) throw ParseError(line_, t.size() > 2 ? t[2].col : t[1].col, "expected ':' after the machine name");
    const Token& k = expect_word(t, 3, "machine kind");
    if (k.text == "wk") kind_ = MachineKind::wk;
    else if (k.text == "pcwk") kind_ = MachineKind::pcwk;
    else if (k.text == "mhdfa") kind_ = MachineKind::mhdfa;
    else if (k.text == "pcfa") kind_ = MachineKind::pcfa;
    else fail(k, "unknown machine kind '" + k.text + "'");
    expect_end(t, 4);
    have_machine_ = true;
  }

  void header_only(const Token& t) const {
    if (!components_.empty() || (!multi_component() && single_started_))
      fail(t, "'" + t.text + "' must precede states and transitions");
  }

  void alphabet(const std::vector<Token>& t) {
    header_only(t[0]);
    if (have_alphabet_) fail(t[0], "duplicate 'alphabet' directive");
    if (t.size() < 2) fail(t[0], "alphabet needs at least one symbol");
    for (std::size_t i = 1; i < t.size(); ++i) {
      const Token& s = expect_word(t, i, "symbol");
      if (s.text == "eps" || (kind_ == MachineKind::mhdfa && s.text == "_"))
        fail(s, "'" + s.text + "' is reserved and cannot be a symbol");
      if (alphabet_.contains(s.text)) fail(s, "duplicate symbol '" + s.text + "'");
      alphabet_.symbols.push_back(s.text);
    }
    have_alphabet_ = true;
  }

  void need_alphabet(const Token& t) const {
    if (!have_alphabet_) fail(t, "'alphabet' must come first");
  }

  void check_symbol(const Token& s) const {
    if (!alphabet_.contains(s.text)) fail(s, "symbol '" + s.text + "' is not in the alphabet");
  }

  void rho(const std::vector<Token>& t) {
    header_only(t[0]);
    need_alphabet(t[0]);
    if (kind_ != MachineKind::wk && kind_ != MachineKind::pcwk) fail(t[0], "'rho' only applies to wk and pcwk machines");
    if (have_rho_) fail(t[0], "duplicate 'rho' directive");
    std::vector<const Token*> words;
    int depth = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i].kind == Tok::lparen && depth == 0 && words.size() % 2 == 0) {
        ++depth;
      } else if (t[i].kind == Tok::rparen && depth == 1 && words.size() % 2 == 0) {
        --depth;
      } else if (t[i].kind == Tok::word) {
        words.push_back(&t[i]);
      } else {
        fail(t[i], "unexpected '" + t[i].text + "' in rho");
      }
    }
    if (depth != 0) fail(t.back(), "unbalanced parenthesis in rho");
    if (words.empty() || words.size() % 2 != 0) fail(t[0], "rho needs a non-empty list of symbol pairs");
    for (std::size_t i = 0; i < words.size(); i += 2) {
      check_symbol(*words[i]);
      check_symbol(*words[i + 1]);
      std::pair<Symbol, Symbol> p{words[i]->text, words[i + 1]->text};
      if (rho_.contains(p.first, p.second)) fail(*words[i], "duplicate pair (" + p.first + "," + p.second + ")");
      rho_.pairs.push_back(std::move(p));
    }
    have_rho_ = true;
  }

  void heads(const std::vector<Token>& t) {
    header_only(t[0]);
    if (kind_ != MachineKind::mhdfa) fail(t[0], "'heads' only applies to mhdfa machines");
    if (heads_ > 0) fail(t[0], "duplicate 'heads' directive");
    heads_ = parse_int(expect_word(t, 1, "head count"));
    if (heads_ < 1) fail(t[1], "head count must be at least 1");
    expect_end(t, 2);
  }

  void deterministic(const std::vector<Token>& t) {
    header_only(t[0]);
    if (kind_ != MachineKind::mhdfa) fail(t[0], "'deterministic' only applies to mhdfa machines");
    expect_end(t, 1);
    deterministic_ = true;
  }

  void query(const std::vector<Token>& t) {
    header_only(t[0]);
    if (!multi_component()) fail(t[0], "'query' only applies to pcwk and pcfa machines");
    const Token& q = expect_word(t, 1, "query state");
    if (t.size() < 3 || t[2].kind != Tok::arrow) fail(t.size() > 2 ? t[2] : q, "expected '->'");
    const Token& target = expect_word(t, 3, "component index");
    const int k = parse_int(target);
    if (k < 1) fail(target, "component index must be at least 1");
    expect_end(t, 4);
    for (const auto& b : queries_)
      if (b.query_state == q.text) fail(q, "query state '" + q.text + "' is bound twice");
    queries_.push_back({q.text, k});
    query_lines_.push_back({line_, target.col});
  }

  void component(const std::vector<Token>& t) {
    if (!multi_component()) fail(t[0], "'component' only applies to pcwk and pcfa machines");
    need_alphabet(t[0]);
    const Token& idx = expect_word(t, 1, "component index");
    const int k = parse_int(idx);
    if (k != static_cast<int>(components_.size()) + 1)
      fail(idx, components_.size() >= static_cast<std::size_t>(k) && k >= 1
                    ? "duplicate component index " + std::to_string(k)
                    : "expected component " + std::to_string(components_.size() + 1));
    expect_end(t, 2);
    close_component();
    components_.emplace_back();
    components_.back().line = line_;
  }

  PendingComponent& current(const Token& t) {
    if (multi_component()) {
      if (components_.empty()) fail(t, "'" + t.text + "' outside a component block");
      return components_.back();
    }
    need_alphabet(t);
    if (kind_ == MachineKind::mhdfa && heads_ == 0) fail(t, "'heads' must precede states and transitions");
    single_started_ = true;
    if (components_.empty()) {
      components_.emplace_back();
      components_.back().line = line_;
    }
    return components_.back();
  }

  void body(const std::vector<Token>& t) {
    PendingComponent& c = current(t[0]);
    const std::string& d = t[0].text;
    if (d == "states") {
      if (c.has_states) fail(t[0], "duplicate 'states' directive");
      if (t.size() < 2) fail(t[0], "states needs at least one state");
      for (std::size_t i = 1; i < t.size(); ++i) {
        const Token& q = expect_word(t, i, "state");
        if (!c.declared.insert(q.text).second) fail(q, "duplicate state '" + q.text + "'");
        c.states.push_back(q.text);
      }
      c.has_states = true;
    } else if (d == "start") {
      need_states(c, t[0]);
      if (c.start) fail(t[0], "duplicate 'start' directive");
      const Token& q = expect_word(t, 1, "start state");
      check_state(c, q);
      expect_end(t, 2);
      c.start = q.text;
    } else if (d == "final") {
      need_states(c, t[0]);
      if (c.has_final) fail(t[0], "duplicate 'final' directive");
      std::set<StateId> seen;
      for (std::size_t i = 1; i < t.size(); ++i) {
        const Token& q = expect_word(t, i, "state");
        check_state(c, q);
        if (!seen.insert(q.text).second) fail(q, "duplicate final state '" + q.text + "'");
        c.finals.push_back(q.text);
      }
      c.has_final = true;
    } else {
      need_states(c, t[0]);
      trans(c, t);
    }
  }

  void need_states(const PendingComponent& c, const Token& t) const {
    if (!c.has_states) fail(t, "'states' must precede '" + t.text + "'");
  }

  void check_state(const PendingComponent& c, const Token& q) const {
    if (!c.declared.count(q.text)) fail(q, "undeclared state '" + q.text + "'");
  }

  // Reads symbols up to a token of kind `stop`; a lone `eps` is the empty word.
  Word side(const std::vector<Token>& t, std::size_t& i, Tok stop, const char* what) const {
    Word w;
    const std::size_t first = i;
    while (i < t.size() && t[i].kind != stop) {
      const Token& s = expect_word(t, i, what);
      if (s.text == "eps") {
        if (i != first || (i + 1 < t.size() && t[i + 1].kind != stop)) fail(s, "'eps' must stand alone");
      } else {
        check_symbol(s);
        w.push_back(s.text);
      }
      ++i;
    }
    if (i == first) throw ParseError(line_, i < t.size() ? t[i].col : t.back().col, std::string("missing ") + what + " (use 'eps' for the empty word)");
    if (i >= t.size()) fail(t.back(), std::string("expected '") + (stop == Tok::slash ? "/" : "->") + "'");
    return w;
  }

  void trans(PendingComponent& c, const std::vector<Token>& t) {
    const Token& from = expect_word(t, 1, "source state");
    check_state(c, from);
    std::size_t i = 2;
    switch (kind_) {
      case MachineKind::wk:
      case MachineKind::pcwk: {
        Word up = side(t, i, Tok::slash, "upper word");
        ++i;
        Word low = side(t, i, Tok::arrow, "lower word");
        ++i;
        const Token& to = expect_word(t, i, "target state");
        check_state(c, to);
        expect_end(t, i + 1);
        c.wk_rules.push_back({from.text, std::move(up), std::move(low), to.text});
        break;
      }
      case MachineKind::mhdfa: {
        if (i >= t.size() || t[i].kind != Tok::lbracket) fail(i < t.size() ? t[i] : from, "expected '['");
        ++i;
        std::vector<Read> reads;
        while (i < t.size() && t[i].kind != Tok::rbracket) {
          const Token& s = expect_word(t, i, "head read");
          if (s.text == "_") {
            reads.emplace_back();
          } else {
            check_symbol(s);
            reads.emplace_back(s.text);
          }
          ++i;
        }
        if (i >= t.size()) fail(t.back(), "expected ']'");
        if (static_cast<int>(reads.size()) != heads_)
          fail(t[i], "expected " + std::to_string(heads_) + " head reads, found " + std::to_string(reads.size()));
        ++i;
        if (i >= t.size() || t[i].kind != Tok::arrow) fail(i < t.size() ? t[i] : t.back(), "expected '->'");
        const Token& to = expect_word(t, i + 1, "target state");
        check_state(c, to);
        expect_end(t, i + 2);
        c.mh_rules.push_back({from.text, std::move(reads), to.text});
        break;
      }
      case MachineKind::pcfa: {
        const Token& s = expect_word(t, i, "read symbol");
        Read read;
        if (s.text != "eps") {
          check_symbol(s);
          read = s.text;
        }
        if (i + 1 >= t.size() || t[i + 1].kind != Tok::arrow) fail(i + 1 < t.size() ? t[i + 1] : s, "expected '->'");
        const Token& to = expect_word(t, i + 2, "target state");
        check_state(c, to);
        expect_end(t, i + 3);
        c.fa_rules.push_back({from.text, read, to.text});
        break;
      }
    }
  }

  void close_component() {
    if (components_.empty()) return;
    const auto& c = components_.back();
    if (!c.has_states) throw ParseError(c.line, 1, "component is missing 'states'");
    if (!c.start) throw ParseError(c.line, 1, "component is missing 'start'");
  }

  MachineDocument finish() {
    if (!have_machine_) throw ParseError(line_ ? line_ : 1, 1, "missing 'machine' directive");
    if (!have_alphabet_) throw ParseError(line_, 1, "missing 'alphabet' directive");
    if (kind_ == MachineKind::mhdfa && heads_ == 0) throw ParseError(line_, 1, "missing 'heads' directive");
    if (components_.empty()) throw ParseError(line_, 1, multi_component() ? "no component blocks" : "missing 'states'");
    close_component();

    MachineDocument doc;
    doc.kind = kind_;
    doc.name = name_;
    std::set<StateId> all_states;
    for (const auto& c : components_) all_states.insert(c.states.begin(), c.states.end());
    for (std::size_t i = 0; i < queries_.size(); ++i) {
      if (queries_[i].target > static_cast<int>(components_.size()))
        throw ParseError(query_lines_[i].first, query_lines_[i].second,
                         "query target " + std::to_string(queries_[i].target) + " exceeds the component count");
      if (!all_states.count(queries_[i].query_state))
        throw ParseError(query_lines_[i].first, 1,
                         "query state '" + queries_[i].query_state + "' is not a state of any component");
    }
    switch (kind_) {
      case MachineKind::wk: {
        const auto& c = components_.front();
        doc.machine = WKAutomaton{alphabet_, rho_, c.states, *c.start, c.finals, c.wk_rules};
        break;
      }
      case MachineKind::pcwk: {
        PCWKSystem s;
        s.alphabet = alphabet_;
        s.rho = rho_;
        s.queries = queries_;
        for (const auto& c : components_)
          s.components.push_back(WKAutomaton{alphabet_, rho_, c.states, *c.start, c.finals, c.wk_rules});
        doc.machine = std::move(s);
        break;
      }
      case MachineKind::mhdfa: {
        const auto& c = components_.front();
        MultiheadAutomaton m;
        m.heads = heads_;
        m.alphabet = alphabet_;
        m.states = c.states;
        m.start = *c.start;
        m.finals = c.finals;
        m.rules = c.mh_rules;
        m.deterministic_intent = deterministic_;
        doc.machine = std::move(m);
        break;
      }
      case MachineKind::pcfa: {
        PCFASystem s;
        s.alphabet = alphabet_;
        s.queries = queries_;
        for (const auto& c : components_) s.components.push_back(FAComponent{c.states, *c.start, c.finals, c.fa_rules});
        doc.machine = std::move(s);
        break;
      }
    }
    const auto violations = validate(doc.machine);
    if (!violations.empty())
      throw ParseError(line_, 1, violations.front().field + ": " + violations.front().message);
    return doc;
  }

  int line_ = 0;
  bool have_machine_ = false, have_alphabet_ = false, have_rho_ = false, deterministic_ = false;
  bool single_started_ = false;
  MachineKind kind_ = MachineKind::wk;
  std::string name_;
  Alphabet alphabet_;
  ComplementRelation rho_;
  int heads_ = 0;
  std::vector<QueryBinding> queries_;
  std::vector<std::pair<int, int>> query_lines_;
  std::vector<PendingComponent> components_;
};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += " " + s;
  return out;
}

std::string side_text(const Word& w) { return w.empty() ? "eps" : format_word(w); }

void write_states(std::ostringstream& o, const std::vector<StateId>& states, const StateId& start,
                  const std::vector<StateId>& finals) {
  o << "states" << join(states) << "\n";
  o << "start " << start << "\n";
  o << "final" << join(finals) << "\n";
}

void write_wk_rules(std::ostringstream& o, const std::vector<WKRule>& rules) {
  for (const auto& r : rules)
    o << "trans " << r.from << " " << side_text(r.upper) << " / " << side_text(r.lower) << " -> " << r.to << "\n";
}

void write_header(std::ostringstream& o, const MachineDocument& doc, const Alphabet& a) {
  o << "machine " << doc.name << " : " << to_string(doc.kind) << "\n";
  o << "alphabet" << join(a.symbols) << "\n";
}

void write_rho(std::ostringstream& o, const ComplementRelation& rho) {
  if (rho.pairs.empty()) return;
  o << "rho";
  for (const auto& [u, l] : rho.pairs) o << " " << u << " " << l;
  o << "\n";
}

void write_queries(std::ostringstream& o, const std::vector<QueryBinding>& qs) {
  for (const auto& q : qs) o << "query " << q.query_state << " -> " << q.target << "\n";
}

void check_reserved(const Alphabet& a, bool underscore) {
  for (const auto& s : a.symbols)
    if (s == "eps" || (underscore && s == "_"))
      throw PreconditionError("symbol '" + s + "' cannot be written in the file format");
}

}  // namespace

MachineDocument parse_machine(std::string_view text) { return Parser().run(text); }

std::string serialize_machine(const MachineDocument& doc) {
  require_valid(doc.machine);
  if (kind_of(doc.machine) != doc.kind) throw PreconditionError("document kind does not match its machine");
  if (!is_valid_symbol_token(doc.name)) throw PreconditionError("invalid machine name '" + doc.name + "'");
  std::ostringstream o;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        check_reserved(m.alphabet, std::is_same_v<T, MultiheadAutomaton>);
        write_header(o, doc, m.alphabet);
        if constexpr (std::is_same_v<T, WKAutomaton>) {
          write_rho(o, m.rho);
          write_states(o, m.states, m.start, m.finals);
          write_wk_rules(o, m.rules);
        } else if constexpr (std::is_same_v<T, PCWKSystem>) {
          write_rho(o, m.rho);
          write_queries(o, m.queries);
          for (std::size_t k = 0; k < m.components.size(); ++k) {
            const auto& c = m.components[k];
            o << "component " << k + 1 << "\n";
            write_states(o, c.states, c.start, c.finals);
            write_wk_rules(o, c.rules);
          }
        } else if constexpr (std::is_same_v<T, MultiheadAutomaton>) {
          o << "heads " << m.heads << "\n";
          if (m.deterministic_intent) o << "deterministic\n";
          write_states(o, m.states, m.start, m.finals);
          for (const auto& r : m.rules) {
            o << "trans " << r.from << " [";
            for (const auto& rd : r.reads) o << " " << (rd ? *rd : "_");
            o << " ] -> " << r.to << "\n";
          }
        } else {
          write_queries(o, m.queries);
          for (std::size_t k = 0; k < m.components.size(); ++k) {
            const auto& c = m.components[k];
            o << "component " << k + 1 << "\n";
            write_states(o, c.states, c.start, c.finals);
            for (const auto& r : c.rules)
              o << "trans " << r.from << " " << (r.read ? *r.read : "eps") << " -> " << r.to << "\n";
          }
        }
      },
      doc.machine);
  return o.str();
}

Word expand_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string tok(text.substr(i, j - i));
    const int col = static_cast<int>(i) + 1;
    std::string sym = tok;
    long count = 1;
    if (const auto caret = tok.rfind('^'); caret != std::string::npos) {
      sym = tok.substr(0, caret);
      const std::string n = tok.substr(caret + 1);
      if (n.empty() || n.size() > 9 ||
          !std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(1, col, "repeat count in '" + tok + "' is not a positive integer");
      count = std::stol(n);
      if (count < 1) throw ParseError(1, col, "repeat count in '" + tok + "' is not a positive integer");
    }
    if (!is_valid_symbol_token(sym)) throw ParseError(1, col, "invalid symbol '" + sym + "'");
    out.insert(out.end(), static_cast<std::size_t>(count), sym);
    i = j;
  }
  return out;
}

MachineDocument read_machine_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_machine(buf.str());
}

void write_machine_file(const std::string& path, const MachineDocument& doc) {
  const std::string text = serialize_machine(doc);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace wkpc
