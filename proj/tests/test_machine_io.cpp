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

#include <filesystem>

#include "random_machines.hpp"
#include "wkpc/fixtures.hpp"
#include "wkpc/machine_io.hpp"

using namespace wkpc;

namespace {

Word w(std::initializer_list<const char*> t) { return Word(t.begin(), t.end()); }

const char* const kSmallWk =
    "machine small : wk\n"
    "alphabet a b\n"
    "rho a b\n"
    "states q0 p\n"
    "start q0\n"
    "final p\n"
    "trans q0 a / b -> p\n";

// Parses `text` expecting a failure; returns the error for inspection.
ParseError parse_error(const std::string& text) {
  try {
    parse_machine(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed without error:\n" << text);
  return ParseError(0, 0, "");
}

void check_error(const std::string& text, int line, int column, const std::string& needle) {
  const ParseError e = parse_error(text);
  CHECK(e.line() == line);
  CHECK(e.column() == column);
  CHECK_MESSAGE(e.detail().find(needle) != std::string::npos, e.detail());
  CHECK(std::string(e.what()).find(std::to_string(line)) != std::string::npos);
}

}  // namespace

TEST_CASE("a single double-strand rule") {
  const MachineDocument doc = parse_machine(kSmallWk);
  CHECK(doc.kind == MachineKind::wk);
  CHECK(doc.name == "small");
  const auto& m = std::get<WKAutomaton>(doc.machine);
  REQUIRE(m.rules.size() == 1);
  CHECK(m.rules[0] == WKRule{"q0", {"a"}, {"b"}, "p"});
  CHECK(m.rho.contains("a", "b"));
  CHECK(serialize_machine(doc) == kSmallWk);
}

TEST_CASE("a multihead rule with idle heads") {
  const MachineDocument doc = parse_machine(
      "machine h : mhdfa\n"
      "alphabet b\n"
      "heads 3\n"
      "states q0\n"
      "start q0\n"
      "final q0\n"
      "trans q0 [b _ _] -> q0\n");
  const auto& m = std::get<MultiheadAutomaton>(doc.machine);
  CHECK(m.heads == 3);
  CHECK_FALSE(m.deterministic_intent);
  REQUIRE(m.rules.size() == 1);
  CHECK(m.rules[0].reads == std::vector<Read>{Read("b"), Read(), Read()});
  CHECK(serialize_machine(doc).find("trans q0 [ b _ _ ] -> q0\n") != std::string::npos);
}

TEST_CASE("fixture files load with the expected kind") {
  const std::string dir = FIXTURE_DIR;
  CHECK(read_machine_file(dir + "/example1.pcwk").kind == MachineKind::pcwk);
  CHECK(std::get<PCWKSystem>(read_machine_file(dir + "/example1.pcwk").machine).degree() == 3);
  CHECK(read_machine_file(dir + "/example2.wk").kind == MachineKind::wk);
  CHECK(read_machine_file(dir + "/appendix_m.mhdfa").kind == MachineKind::mhdfa);
  CHECK(std::get<PCFASystem>(read_machine_file(dir + "/appendix_aprime.pcfa").machine).components.size() == 3);
  CHECK_THROWS_AS(read_machine_file(dir + "/no_such_file.wk"), Error);
}

TEST_CASE("comments, blank lines and parenthesized pairs") {
  const MachineDocument doc = parse_machine(
      "; leading comment\n"
      "\n"
      "machine small : wk   ; trailing comment\n"
      "alphabet a b\n"
      "rho (a b) (b a)\n"
      "   \n"
      "states q0 p\n"
      "start q0\n"
      "final\n"
      "trans q0 eps / eps -> p\n"
      "trans p a b / eps -> p\n");
  const auto& m = std::get<WKAutomaton>(doc.machine);
  CHECK(m.rho.pairs.size() == 2);
  CHECK(m.finals.empty());
  CHECK(m.rules[0] == WKRule{"q0", {}, {}, "p"});
  CHECK(m.rules[1] == WKRule{"p", {"a", "b"}, {}, "p"});
  const std::string text = serialize_machine(doc);
  CHECK(text.find("rho a b b a\n") != std::string::npos);
  CHECK(text.find("final\n") != std::string::npos);
  CHECK(text.find("trans q0 eps / eps -> p\n") != std::string::npos);
  CHECK(text.find("trans p a b / eps -> p\n") != std::string::npos);
  CHECK(parse_machine(text).machine == doc.machine);
}

TEST_CASE("parse errors carry a location") {
  const std::string head = "machine small : wk\nalphabet a b\n";
  SUBCASE("symbol outside the alphabet") {
    check_error(head + "states q p\nstart q\ntrans q z / eps -> p\n", 5, 9, "not in the alphabet");
  }
  SUBCASE("undeclared state") { check_error(head + "states q p\nstart r\n", 4, 7, "undeclared state"); }
  SUBCASE("rho pair outside the alphabet") { check_error(head + "rho a c\n", 3, 7, "not in the alphabet"); }
  SUBCASE("reserved symbol") {
    check_error("machine x : wk\nalphabet a eps\n", 2, 12, "reserved");
    check_error("machine x : mhdfa\nalphabet a _\n", 2, 12, "reserved");
  }
  SUBCASE("header after the states") {
    check_error(head + "states q\nstart q\nrho a b\n", 5, 1, "must precede");
  }
  SUBCASE("components out of order") {
    check_error("machine s : pcfa\nalphabet a\ncomponent 2\n", 3, 11, "component");
  }
  SUBCASE("duplicate component") {
    check_error("machine s : pcfa\nalphabet a\ncomponent 1\nstates q\nstart q\ncomponent 1\n", 6, 11, "component");
  }
  SUBCASE("wrong head count") {
    check_error("machine h : mhdfa\nalphabet b\nheads 2\nstates q\nstart q\ntrans q [ b ] -> q\n", 6, 13,
                "head reads");
  }
  SUBCASE("unexpected character") { check_error("machine x : wk\nalphabet a, b\n", 2, 11, "unexpected character"); }
  SUBCASE("unknown kind") { check_error("machine x : dfa\n", 1, 13, "unknown machine kind"); }
  SUBCASE("missing start") { check_error(head + "states q\n", 3, 1, "missing 'start'"); }
  SUBCASE("missing machine") { check_error("alphabet a\n", 1, 1, "'machine'"); }
  SUBCASE("eps mixed with symbols") {
    check_error(head + "states q\nstart q\ntrans q a eps / eps -> q\n", 5, 11, "'eps' must stand alone");
  }
  SUBCASE("query target out of range") {
    check_error("machine s : pcfa\nalphabet a\nquery K -> 2\ncomponent 1\nstates q K\nstart q\n", 3, 12,
                "exceeds the component count");
  }
}

TEST_CASE("serializing refuses a reserved symbol") {
  WKAutomaton m;
  m.alphabet = Alphabet{{"eps"}};
  m.states = {"q"};
  m.start = "q";
  CHECK_THROWS_AS(serialize_machine(MachineDocument{MachineKind::wk, "bad", m}), Error);
}

TEST_CASE("parse and serialize are inverse on random machines") {
  testing::MachineGenerator gen(1234);
  for (int i = 0; i < 1000; ++i) {
    const Machine m = gen.any();
    const MachineDocument doc{kind_of(m), "random" + std::to_string(i), m};
    const std::string text = serialize_machine(doc);
    INFO(text);
    const MachineDocument back = parse_machine(text);
    CHECK(back.kind == doc.kind);
    CHECK(back.name == doc.name);
    CHECK(back.machine == m);
    CHECK(serialize_machine(back) == text);
  }
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "wkpc_io_roundtrip.pcwk";
  const MachineDocument doc{MachineKind::pcwk, "example1", build_example1()};
  write_machine_file(path.string(), doc);
  CHECK(read_machine_file(path.string()).machine == doc.machine);
  std::filesystem::remove(path);
}

TEST_CASE("word expansion") {
  CHECK(expand_word("a^5") == Word(5, "a"));
  CHECK(expand_word("b^2 c^2 #") == w({"b", "b", "c", "c", "#"}));
  CHECK(expand_word("  v_m1 a  ") == w({"v_m1", "a"}));
  CHECK(expand_word("") == Word{});
  CHECK(expand_word("x^1") == w({"x"}));
  CHECK_THROWS_AS(expand_word("a^0"), ParseError);
  CHECK_THROWS_AS(expand_word("a^"), ParseError);
  CHECK_THROWS_AS(expand_word("a^-1"), ParseError);
  CHECK_THROWS_AS(expand_word("a^1234567890"), ParseError);
  CHECK_THROWS_AS(expand_word("a/b"), ParseError);
}

TEST_CASE("machine kind names") {
  CHECK(to_string(MachineKind::wk) == "wk");
  CHECK(to_string(MachineKind::pcwk) == "pcwk");
  CHECK(to_string(MachineKind::mhdfa) == "mhdfa");
  CHECK(to_string(MachineKind::pcfa) == "pcfa");
  CHECK(kind_of(Machine{build_appendix_m()}) == MachineKind::mhdfa);
}
