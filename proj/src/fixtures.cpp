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

#include "wkpc/fixtures.hpp"

#include <sstream>

namespace wkpc {
namespace {

// Rows are "from read to". A `{x}` placeholder expands to one row per x in
// {b, c}, in that order.
std::vector<std::vector<std::string>> expand_rows(const std::vector<std::string>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : rows) {
    const bool templated = row.find("{x}") != std::string::npos;
    for (const char* x : {"b", "c"}) {
      std::string r = row;
      for (auto p = r.find("{x}"); p != std::string::npos; p = r.find("{x}")) r.replace(p, 3, x);
      std::istringstream in(r);
      std::vector<std::string> toks;
      for (std::string t; in >> t;) toks.push_back(t);
      out.push_back(std::move(toks));
      if (!templated) break;
    }
  }
  return out;
}

std::vector<std::string> with_x(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& row : expand_rows(std::vector<std::string>(names.begin(), names.end()))) out.push_back(row[0]);
  return out;
}

const std::vector<std::string> kQueryStates = {"K1", "K2", "K3"};
const std::vector<std::string> kControl = {"q0", "q1", "q2", "q3", "q4", "q5", "q6"};
const std::vector<std::string> kPairs = {"q0_b", "q0_c", "q1_eps", "q2_eps", "q3_c",
                                         "q3_b", "q3_#", "q4_b", "q4_c", "q5_eps"};
const std::vector<std::string> kTriples = {"q0_b_eps", "q0_c_eps", "q1_eps_b", "q2_eps_eps", "q3_c_b",   "q3_b_c",
                                           "q3_#_c",   "q4_b_c",   "q4_c_eps", "q5_eps_c",   "q5_eps_#"};
const std::vector<std::string> kQuads = {"q0_b_eps_eps", "q0_c_eps_{x}", "q1_eps_b_{x}", "q2_eps_eps_{x}",
                                         "q3_c_b_{x}",   "q3_b_c_{x}",   "q3_#_c_#",     "q4_b_c_{x}",
                                         "q4_c_eps_{x}", "q5_eps_c_eps", "q5_eps_#_eps"};

std::vector<StateId> component_states(int k) {
  std::vector<StateId> s = kQueryStates;
  s.insert(s.end(), kControl.begin(), kControl.end());
  auto add = [&](const std::vector<std::string>& v) { s.insert(s.end(), v.begin(), v.end()); };
  switch (k) {
    case 1:
      add(kPairs);
      add({"s2", "s3"});
      break;
    case 2:
      add(kPairs);
      add(kTriples);
      add({"s3"});
      break;
    default:
      add(kTriples);
      add(with_x(kQuads));
      add({"p1"});
      break;
  }
  return s;
}

// Rows shared by the single-strand tables: "for every q in Q" rows are
// written with `{q}` and expanded here.
std::vector<std::string> for_each_control(const std::string& row) {
  std::vector<std::string> out;
  for (const auto& q : kControl) {
    std::string r = row;
    r.replace(r.find("{q}"), 3, q);
    out.push_back(r);
  }
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word parse_side(const std::string& s) { return s == "eps" ? Word{} : Word{s}; }

// Single-strand table, one row per transition.
const std::vector<std::string> kSingleStrand1 = {
    "s2 eps s3",         "s3 eps K3",         "q0 b q0_b",         "q0_b eps s2",     "q0 c q0_c",
    "q0_c eps s2",       "q1 eps q1_eps",     "q1_eps eps s2",     "q2 eps q2_eps",   "q2_eps eps s2",
    "q3 c q3_c",         "q3_c eps s2",       "q3 b q3_b",         "q3_b eps s2",     "q3 # q3_#",
    "q3_# eps s2",       "q4 b q4_b",         "q4_b eps s2",       "q4 c q4_c",       "q4_c eps s2",
    "q5 eps q5_eps",     "q5_eps eps s2",
};

const std::vector<std::string> kSingleStrand2 = concat(for_each_control("{q} eps K1"), {
    "s3 eps K3",                 "q0_b eps q0_b_eps",     "q0_b_eps eps s3",       "q0_c eps q0_c_eps",
    "q0_c_eps eps s3",           "q1_eps b q1_eps_b",     "q1_eps_b eps s3",       "q2_eps eps q2_eps_eps",
    "q2_eps_eps eps s3",         "q3_c b q3_c_b",         "q3_c_b eps s3",         "q3_b c q3_b_c",
    "q3_b_c eps s3",             "q3_# c q3_#_c",         "q3_#_c eps s3",         "q4_b c q4_b_c",
    "q4_b_c eps s3",             "q4_c eps q4_c_eps",     "q4_c_eps eps s3",       "q5_eps c q5_eps_c",
    "q5_eps_c eps s3",           "q5_eps # q5_eps_#",     "q5_eps_# eps s3",
});

const std::vector<std::string> kSingleStrand3 = concat(for_each_control("{q} eps p1"), {
    "p1 eps K2",
    "q0_b_eps eps q0_b_eps_eps",
    "q0_b_eps_eps eps q0",
    "q0_c_eps {x} q0_c_eps_{x}",
    "q0_c_eps_{x} eps q1",
    "q1_eps_b {x} q1_eps_b_{x}",
    "q1_eps_b_{x} eps q2",
    "q2_eps_eps {x} q2_eps_eps_{x}",
    "q2_eps_eps_{x} eps q3",
    "q3_c_b {x} q3_c_b_{x}",
    "q3_c_b_{x} eps q3",
    "q3_b_c {x} q3_b_c_{x}",
    "q3_b_c_{x} eps q4",
    "q3_#_c # q3_#_c_#",
    "q3_#_c_# eps q5",
    "q4_b_c {x} q4_b_c_{x}",
    "q4_b_c_{x} eps q4",
    "q4_c_eps {x} q4_c_eps_{x}",
    "q4_c_eps_{x} eps q1",
    "q5_eps_c eps q5_eps_c_eps",
    "q5_eps_c_eps eps q5",
    "q5_eps_# eps q5_eps_#_eps",
    "q5_eps_#_eps eps q6",
});

// Double-strand table, reads written upper/lower.
const std::vector<std::string> kDoubleStrand1 = {
    "s2 eps/eps s3",     "s3 eps/eps K3",     "q0 a/b q0_b",       "q0_b eps/eps s2",   "q0 a/c q0_c",
    "q0_c eps/eps s2",   "q1 eps/eps q1_eps", "q1_eps eps/eps s2", "q2 eps/eps q2_eps", "q2_eps eps/eps s2",
    "q3 a/c q3_c",       "q3_c eps/eps s2",   "q3 a/b q3_b",       "q3_b eps/eps s2",   "q3 a/# q3_#",
    "q3_# eps/eps s2",   "q4 a/b q4_b",       "q4_b eps/eps s2",   "q4 a/c q4_c",       "q4_c eps/eps s2",
    "q5 eps/eps q5_eps", "q5_eps eps/eps s2",
};

const std::vector<std::string> kDoubleStrand2 = concat(for_each_control("{q} eps/eps K1"), {
    "s3 eps/eps K3",             "q0_b eps/eps q0_b_eps", "q0_b_eps eps/eps s3",   "q0_c eps/eps q0_c_eps",
    "q0_c_eps eps/eps s3",       "q1_eps a/b q1_eps_b",   "q1_eps_b eps/eps s3",   "q2_eps eps/eps q2_eps_eps",
    "q2_eps_eps eps/eps s3",     "q3_c a/b q3_c_b",       "q3_c_b eps/eps s3",     "q3_b a/c q3_b_c",
    "q3_b_c eps/eps s3",         "q3_# a/c q3_#_c",       "q3_#_c eps/eps s3",     "q4_b a/c q4_b_c",
    "q4_b_c eps/eps s3",         "q4_c eps/eps q4_c_eps", "q4_c_eps eps/eps s3",   "q5_eps a/c q5_eps_c",
    "q5_eps_c eps/eps s3",       "q5_eps a/# q5_eps_#",   "q5_eps_# eps/eps s3",
});

const std::vector<std::string> kDoubleStrand3 = concat(for_each_control("{q} eps/eps p1"), {
    "p1 eps/eps K2",
    "q0_b_eps eps/eps q0_b_eps_eps",
    "q0_b_eps_eps eps/eps q0",
    "q0_c_eps a/{x} q0_c_eps_{x}",
    "q0_c_eps_{x} eps/eps q1",
    "q1_eps_b a/{x} q1_eps_b_{x}",
    "q1_eps_b_{x} eps/eps q2",
    "q2_eps_eps a/{x} q2_eps_eps_{x}",
    "q2_eps_eps_{x} eps/eps q3",
    "q3_c_b a/{x} q3_c_b_{x}",
    "q3_c_b_{x} eps/eps q3",
    "q3_b_c a/{x} q3_b_c_{x}",
    "q3_b_c_{x} eps/eps q4",
    "q3_#_c a/# q3_#_c_#",
    "q3_#_c_# eps/eps q5",
    "q4_b_c a/{x} q4_b_c_{x}",
    "q4_b_c_{x} eps/eps q4",
    "q4_c_eps a/{x} q4_c_eps_{x}",
    "q4_c_eps_{x} eps/eps q1",
    "q5_eps_c eps/eps q5_eps_c_eps",
    "q5_eps_c_eps eps/eps q5",
    "q5_eps_# eps/eps q5_eps_#_eps",
    "q5_eps_#_eps eps/eps q6",
});

std::vector<QueryBinding> three_queries() { return {{"K1", 1}, {"K2", 2}, {"K3", 3}}; }

}  // namespace

MultiheadAutomaton build_appendix_m() {
  MultiheadAutomaton m;
  m.heads = 3;
  m.alphabet.symbols = {"b", "c", "#"};
  m.states = kControl;
  m.start = "q0";
  m.finals = {"q6"};
  m.deterministic_intent = true;
  auto rule = [&](const StateId& from, Read h1, Read h2, Read h3, const StateId& to) {
    m.rules.push_back({from, {std::move(h1), std::move(h2), std::move(h3)}, to});
  };
  const Read eps;
  rule("q0", "b", eps, eps, "q0");
  for (const char* x : {"b", "c"}) rule("q0", "c", eps, x, "q1");
  for (const char* x : {"b", "c"}) rule("q1", eps, "b", x, "q2");
  for (const char* x : {"b", "c"}) rule("q2", eps, eps, x, "q3");
  for (const char* x : {"b", "c"}) rule("q3", "c", "b", x, "q3");
  for (const char* x : {"b", "c"}) rule("q3", "b", "c", x, "q4");
  rule("q3", "#", "c", "#", "q5");
  for (const char* x : {"b", "c"}) rule("q4", "b", "c", x, "q4");
  for (const char* x : {"b", "c"}) rule("q4", "c", eps, x, "q1");
  rule("q5", eps, "c", eps, "q5");
  rule("q5", eps, "#", eps, "q6");
  return m;
}

PCFASystem build_appendix_a_prime() {
  PCFASystem s;
  s.alphabet.symbols = {"b", "c", "#"};
  s.queries = three_queries();
  int k = 0;
  for (const auto* table : {&kSingleStrand1, &kSingleStrand2, &kSingleStrand3}) {
    FAComponent comp;
    comp.states = component_states(++k);
    comp.start = "q0";
    comp.finals = {"q6"};
    for (const auto& row : expand_rows(*table)) {
      Read read;
      if (row[1] != "eps") read = row[1];
      comp.rules.push_back({row[0], read, row[2]});
    }
    s.components.push_back(std::move(comp));
  }
  return s;
}

PCWKSystem build_example1() {
  PCWKSystem s;
  s.alphabet.symbols = {"a", "b", "c", "#"};
  s.rho.pairs = {{"a", "b"}, {"a", "c"}, {"a", "#"}};
  s.queries = three_queries();
  int k = 0;
  for (const auto* table : {&kDoubleStrand1, &kDoubleStrand2, &kDoubleStrand3}) {
    WKAutomaton comp;
    comp.alphabet = s.alphabet;
    comp.rho = s.rho;
    comp.states = component_states(++k);
    comp.start = "q0";
    comp.finals = {"q6"};
    for (const auto& row : expand_rows(*table)) {
      const auto slash = row[1].find('/');
      comp.rules.push_back(
          {row[0], parse_side(row[1].substr(0, slash)), parse_side(row[1].substr(slash + 1)), row[2]});
    }
    s.components.push_back(std::move(comp));
  }
  return s;
}

WKAutomaton build_example2() {
  WKAutomaton m;
  m.alphabet.symbols = {"a", "b", "v_m1", "v_m2", "#", "*"};
  m.rho.pairs = {{"a", "a"},    {"b", "b"},    {"*", "*"},    {"#", "#"},   {"#", "v_m1"},
                 {"#", "v_m2"}, {"a", "v_m1"}, {"*", "v_m1"}, {"b", "#"}};
  // Phases: scan to the first chosen block (q0*), skip the lower strand to
  // the second chosen block (q1), compare w parts (q_w) and x parts (q_x),
  // then finish whichever strand is behind (q_lf_*, q_uf_*, q_r).
  m.states = {"q0", "q0_w", "q0_x", "q1", "q_w", "q_x", "q_lf_w", "q_lf_x", "q_uf_w", "q_uf_need", "q_r"};
  m.start = "q0";
  m.finals = {"q_r"};
  auto rule = [&](const StateId& from, const std::string& up, const std::string& low, const StateId& to) {
    m.rules.push_back({from, parse_side(up), parse_side(low), to});
  };
  rule("q0", "#", "#", "q0_w");
  rule("q0", "#", "v_m1", "q1");
  for (const char* s : {"a", "b"}) rule("q0_w", s, s, "q0_w");
  rule("q0_w", "*", "*", "q0_x");
  for (const char* s : {"a", "b"}) rule("q0_x", s, s, "q0_x");
  rule("q0_x", "#", "#", "q0_w");
  rule("q0_x", "#", "v_m1", "q1");
  for (const char* s : {"a", "b", "*", "#"}) rule("q1", "eps", s, "q1");
  rule("q1", "eps", "v_m2", "q_w");
  for (const char* s : {"a", "b"}) rule("q_w", s, s, "q_w");
  rule("q_w", "*", "*", "q_x");
  rule("q_w", "*", "v_m1", "q_uf_need");
  for (const char* s : {"a", "b"}) rule("q_x", s, s, "q_x");
  rule("q_x", "a", "b", "q_lf_x");
  rule("q_x", "b", "a", "q_lf_x");
  rule("q_x", "a", "v_m2", "q_lf_x");
  rule("q_x", "b", "v_m2", "q_lf_x");
  rule("q_x", "#", "a", "q_lf_w");
  rule("q_x", "#", "b", "q_lf_w");
  rule("q_x", "#", "v_m1", "q_uf_w");
  rule("q_x", "#", "#", "q_uf_w");
  rule("q_x", "a", "v_m1", "q_uf_need");
  rule("q_x", "b", "#", "q_uf_need");
  rule("q_x", "a", "#", "q_r");
  rule("q_x", "b", "v_m1", "q_r");
  for (const char* f : {"q_lf_w", "q_lf_x"})
    for (const char* s : {"a", "b", "*", "v_m2"}) rule(f, "eps", s, f);
  rule("q_lf_w", "eps", "v_m1", "q_uf_w");
  rule("q_lf_w", "eps", "#", "q_uf_w");
  rule("q_lf_x", "eps", "v_m1", "q_r");
  rule("q_lf_x", "eps", "#", "q_r");
  for (const char* s : {"a", "b"}) {
    rule("q_uf_w", s, "eps", "q_uf_w");
    rule("q_r", s, "eps", "q_r");
    rule("q_uf_need", s, "eps", "q_r");
  }
  rule("q_uf_w", "*", "eps", "q_r");
  rule("q_r", "#", "eps", "q_uf_w");
  return m;
}

PCWKSystem build_marker_copy() {
  PCWKSystem s;
  s.alphabet.symbols = {"a", "b", "c"};
  s.rho = ComplementRelation::identity(s.alphabet);
  s.queries = {{"K1", 1}};
  for (int k = 1; k <= 2; ++k) {
    WKAutomaton m;
    m.alphabet = s.alphabet;
    m.rho = s.rho;
    m.states = {"K1", "s", "m", "u"};
    m.start = k == 1 ? "s" : "K1";
    m.finals = {"u"};
    // Skip the lower head past the marker, then compare and finish the upper.
    m.rules = {{"s", {}, {"a"}, "s"},        {"s", {}, {"b"}, "s"},        {"s", {}, {"c"}, "m"},
               {"m", {"a"}, {"a"}, "m"},     {"m", {"b"}, {"b"}, "m"},     {"m", {"c"}, {}, "u"},
               {"u", {"a"}, {}, "u"},        {"u", {"b"}, {}, "u"}};
    s.components.push_back(std::move(m));
  }
  return s;
}

std::vector<NamedFixture> all_fixtures() {
  return {
      {"example1", "example1.pcwk", build_example1()},
      {"example2", "example2.wk", build_example2()},
      {"appendix-m", "appendix_m.mhdfa", build_appendix_m()},
      {"appendix-aprime", "appendix_aprime.pcfa", build_appendix_a_prime()},
      {"marker-copy", "marker_copy.pcwk", build_marker_copy()},
  };
}

}  // namespace wkpc
