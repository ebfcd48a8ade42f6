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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "reference.hpp"
#include "wkpc/classify.hpp"
#include "wkpc/constructions.hpp"
#include "wkpc/engine.hpp"
#include "wkpc/fixtures.hpp"
#include "wkpc/machine_io.hpp"
#include "wkpc/oracle.hpp"

using namespace wkpc;

namespace {

Word w(std::initializer_list<const char*> t) { return Word(t.begin(), t.end()); }

Word repeat(const char* s, std::size_t n) { return Word(n, s); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Word blocks(std::initializer_list<int> ns) {
  Word out;
  for (int n : ns) {
    out.insert(out.end(), n, "b");
    out.insert(out.end(), n, "c");
  }
  out.push_back("#");
  return out;
}

}  // namespace

TEST_CASE("checked-in files match the builders byte for byte") {
  for (const auto& f : all_fixtures()) {
    INFO(f.file_name);
    const std::string text = slurp(std::string(FIXTURE_DIR) + "/" + f.file_name);
    const MachineDocument doc{kind_of(f.machine), f.name, f.machine};
    CHECK(serialize_machine(doc) == text);
    const MachineDocument back = parse_machine(text);
    CHECK(back.name == f.name);
    CHECK(back.kind == doc.kind);
    CHECK(back.machine == f.machine);
    CHECK(validate(f.machine).empty());
  }
}

TEST_CASE("fixture kinds and shapes") {
  CHECK(build_example1().degree() == 3);
  CHECK(build_marker_copy().degree() == 2);
  CHECK(build_appendix_m().heads == 3);
  CHECK(build_appendix_a_prime().components.size() == 3);
  CHECK(rho_is_injective(build_marker_copy().rho));
  CHECK_FALSE(rho_is_injective(build_example1().rho));
}

TEST_CASE("three-head machine") {
  const MultiheadAutomaton m = build_appendix_m();
  const auto bbcc = multihead_accepts(m, blocks({2}));
  CHECK(bbcc.accepted);
  CHECK(reference::multihead(m, blocks({2})));
  CHECK(multihead_accepts(m, blocks({4, 4})).accepted);
  CHECK(reference::multihead(m, blocks({4, 4})));
  // Two blocks of b^2 c^2 would be n = 2 with the wrong block count.
  CHECK_FALSE(multihead_accepts(m, blocks({2, 2})).accepted);
  CHECK_FALSE(multihead_accepts(m, {}).accepted);
  CHECK_FALSE(multihead_accepts(m, blocks({4})).accepted);
  CHECK_FALSE(multihead_accepts(m, blocks({3, 3})).accepted);
  CHECK(multihead_is_deterministic(m).deterministic);
  CHECK(m.deterministic_intent);
}

TEST_CASE("three-component finite system") {
  const PCFASystem a = build_appendix_a_prime();
  CHECK(pcfa_accepts(a, blocks({2})).accepted);
  CHECK(reference::pcfa(a, blocks({2})));
  CHECK(pcfa_accepts(a, blocks({4, 4})).accepted);
  CHECK_FALSE(pcfa_accepts(a, w({"b", "b", "c", "c"})).accepted);
  CHECK_FALSE(pcfa_accepts(a, w({"b", "c", "#"})).accepted);
  CHECK_FALSE(pcfa_accepts(a, blocks({2, 2})).accepted);
  CHECK_FALSE(pcfa_accepts(a, {}).accepted);
}

TEST_CASE("square-plus-one system") {
  const PCWKSystem s = build_example1();
  const auto five = pcwk_accepts(s, repeat("a", 5));
  CHECK(five.accepted);
  CHECK(five.witness_lower == blocks({2}));
  const auto seventeen = pcwk_accepts(s, repeat("a", 17));
  CHECK(seventeen.accepted);
  CHECK(seventeen.witness_lower == blocks({4, 4}));
  CHECK(reference::pcwk_fixed(s, repeat("a", 17), blocks({4, 4})));
  for (std::size_t k : {0u, 1u, 2u, 4u, 6u, 10u, 16u}) CHECK_FALSE(pcwk_accepts(s, repeat("a", k)).accepted);
  const auto cls = classify_system(s);
  CHECK(cls.dpcwks);
  CHECK_FALSE(cls.sdpcwks);
}

TEST_CASE("lifting the finite system gives the same lower strands") {
  const PCWKSystem l = lift_pcfa(build_appendix_a_prime(), "a");
  for (std::size_t k : {5u, 17u}) {
    const auto lifted = pcwk_accepts(l, repeat("a", k));
    const auto direct = pcwk_accepts(build_example1(), repeat("a", k));
    CHECK(lifted.accepted);
    CHECK(lifted.witness_lower == direct.witness_lower);
  }
}

TEST_CASE("block-copy automaton") {
  const WKAutomaton m = build_example2();
  const auto r = wk_accepts(m, w({"#", "a", "*", "a", "#", "a", "*", "b"}));
  CHECK(r.accepted);
  CHECK(r.witness_lower == w({"v_m1", "a", "*", "a", "v_m2", "a", "*", "#"}));
  const auto r2 = wk_accepts(m, w({"#", "a", "b", "*", "a", "#", "a", "b", "*", "b"}));
  CHECK(r2.accepted);
  CHECK(r2.witness_lower == w({"v_m1", "a", "b", "*", "a", "v_m2", "a", "b", "*", "#"}));
  CHECK_FALSE(wk_accepts(m, w({"#", "a", "*", "a", "#", "a", "*", "a"})).accepted);
  CHECK_FALSE(wk_accepts(m, w({"#", "a", "*", "b", "#", "b", "*", "a"})).accepted);
  CHECK(classify_wk(m).dwk);
}

TEST_CASE("marker-copy system") {
  const PCWKSystem s = build_marker_copy();
  CHECK(pcwk_accepts(s, w({"a", "b", "c", "a", "b"})).accepted);
  CHECK(pcwk_accepts(s, w({"c"})).accepted);
  CHECK_FALSE(pcwk_accepts(s, w({"a", "c", "b"})).accepted);
  CHECK_FALSE(pcwk_accepts(s, w({"a", "b"})).accepted);
  const auto cls = classify_system(s);
  CHECK(cls.dpcwks);
  CHECK(cls.sdpcwks);
}
