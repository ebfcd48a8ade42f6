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
#include <json.hpp>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "wkpc/cli.hpp"
#include "wkpc/constructions.hpp"
#include "wkpc/fixtures.hpp"
#include "wkpc/machine_io.hpp"

using namespace wkpc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* file) { return std::string(FIXTURE_DIR) + "/" + file; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("wkpc_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const char* name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("run accepts with a witness") {
  const auto r = cli({"run", fixture("example1.pcwk"), "--input", "a^5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "ACCEPT\nwitness: b b c c #\n");
}

TEST_CASE("run rejects with a reason") {
  const auto r = cli({"run", fixture("example1.pcwk"), "--input", "a^4"});
  CHECK(r.code == kExitNo);
  CHECK(r.out == "REJECT (component-stuck)\n");
  CHECK(cli({"run", fixture("example1.pcwk"), "--input", ""}).code == kExitNo);
}

TEST_CASE("run with a fixed lower strand") {
  CHECK(cli({"run", fixture("example1.pcwk"), "--input", "a^5", "--lower", "b^2 c^2 #"}).code == kExitOk);
  CHECK(cli({"run", fixture("example1.pcwk"), "--input", "a^5", "--lower", "b c b c #"}).code == kExitNo);
}

TEST_CASE("single-strand kinds print no witness") {
  const auto r = cli({"run", fixture("appendix_m.mhdfa"), "--input", "b b c c #"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "ACCEPT\n");
  CHECK(cli({"run", fixture("appendix_aprime.pcfa"), "--input", "b^2 c^2 b^2 c^2 #"}).code == kExitNo);
}

TEST_CASE("run trace lists synchronous steps") {
  const auto r = cli({"run", fixture("example1.pcwk"), "--input", "a^5", "--trace"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "  0: (q0, 0, 0)"));
  CHECK(contains(r.out, "[rules "));
  CHECK(contains(r.out, "[communication]"));
}

TEST_CASE("run JSON") {
  const auto r = cli({"run", fixture("example1.pcwk"), "--input", "a^5", "--json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["accepted"] == true);
  CHECK(j["reason"] == "accepted");
  CHECK(j["witness"] == nlohmann::json::array({"b", "b", "c", "c", "#"}));
  const auto rej = nlohmann::json::parse(cli({"run", fixture("example1.pcwk"), "--input", "a", "--json"}).out);
  CHECK(rej["accepted"] == false);
  CHECK_FALSE(rej.contains("witness"));
}

TEST_CASE("search ceiling") {
  const auto r = cli({"run", fixture("example1.pcwk"), "--input", "a^17", "--limit", "3"});
  CHECK(r.code == kExitLimit);
  CHECK(contains(r.out, "UNKNOWN (resource-limit after"));
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"bogus"}).code == kExitUsage);
  CHECK(cli({"run", fixture("example1.pcwk")}).code == kExitUsage);
  CHECK(cli({"run", fixture("example1.pcwk"), "--input", "z"}).code == kExitUsage);
  CHECK(cli({"run", fixture("example1.pcwk"), "--input", "a^0"}).code == kExitUsage);
  CHECK(cli({"run", "/no/such/file.pcwk", "--input", "a"}).code == kExitUsage);
  CHECK(cli({"classify", fixture("appendix_aprime.pcfa")}).code == kExitUsage);
  CHECK(cli({"fixture", "nothing"}).code == kExitUsage);
  const auto r = cli({"run", fixture("example1.pcwk"), "--input", "q"});
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("help") {
  const auto r = cli({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "run"));
  CHECK(contains(r.out, "to-multihead"));
  CHECK(cli({"run", "--help"}).code == kExitOk);
}

TEST_CASE("classify") {
  const auto r = cli({"classify", fixture("example1.pcwk")});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "component 1: "));
  CHECK(contains(r.out, "dpcwks=true\n"));
  CHECK(contains(r.out, "sdpcwks=false\n"));
  CHECK(contains(r.out, "wdpcwks=unchecked\n"));
  CHECK(cli({"classify", fixture("appendix_m.mhdfa")}).out == "heads=3 deterministic=true\n");
  const auto bounded = cli({"classify", fixture("marker_copy.pcwk"), "--weak-bound", "3"});
  CHECK(contains(bounded.out, "wdpcwks=holds-up-to-bound (bound 3)"));
  const auto j = nlohmann::json::parse(cli({"classify", fixture("example1.pcwk"), "--json"}).out);
  CHECK(j["components"].size() == 3);
  CHECK(j["components"][0]["dwk"] == true);
}

TEST_CASE("normalize writes a file") {
  TempDir dir;
  const auto r = cli({"normalize", fixture("example1.pcwk"), "-o", dir.file("n.pcwk")});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "m=2 rules 96 -> 288 fresh_states=192"));
  const auto doc = read_machine_file(dir.file("n.pcwk"));
  CHECK(doc.machine == Machine{normalize_one_limited(build_example1()).first});
  CHECK(cli({"run", dir.file("n.pcwk"), "--input", "a^5"}).code == kExitOk);
}

TEST_CASE("to-multihead needs normalized input") {
  TempDir dir;
  CHECK(cli({"to-multihead", fixture("marker_copy.pcwk"), "-o", dir.file("p.mhdfa")}).code == kExitUsage);
  REQUIRE(cli({"normalize", fixture("marker_copy.pcwk"), "-o", dir.file("n.pcwk")}).code == kExitOk);
  const auto r = cli({"to-multihead", dir.file("n.pcwk"), "-o", dir.file("p.mhdfa")});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "heads=4"));
  const auto doc = read_machine_file(dir.file("p.mhdfa"));
  CHECK(doc.name == "marker-copy-product");
  CHECK(doc.kind == MachineKind::mhdfa);
  CHECK(cli({"run", dir.file("p.mhdfa"), "--input", "a b c a b"}).code == kExitOk);
  CHECK(cli({"run", dir.file("p.mhdfa"), "--input", "a b c b a"}).code == kExitNo);
  const auto eq = cli({"equiv", fixture("marker_copy.pcwk"), dir.file("p.mhdfa"), "--max-len", "6"});
  CHECK(eq.out == "EQUAL up to length 6\n");
}

TEST_CASE("lift") {
  TempDir dir;
  const auto r = cli({"lift", fixture("appendix_aprime.pcfa"), "--upper-symbol", "a", "-o", dir.file("l.pcwk")});
  CHECK(r.code == kExitOk);
  const auto doc = read_machine_file(dir.file("l.pcwk"));
  CHECK(doc.name == "appendix-aprime-lifted");
  CHECK(doc.machine == Machine{lift_pcfa(build_appendix_a_prime(), "a")});
  CHECK(cli({"run", dir.file("l.pcwk"), "--input", "a^5"}).out == "ACCEPT\nwitness: b b c c #\n");
  CHECK(cli({"lift", fixture("appendix_aprime.pcfa"), "--upper-symbol", "b", "-o", dir.file("x.pcwk")}).code ==
        kExitUsage);
  CHECK(cli({"lift", fixture("example1.pcwk"), "--upper-symbol", "u", "-o", dir.file("x.pcwk")}).code == kExitUsage);
}

TEST_CASE("enum") {
  const auto r = cli({"enum", fixture("appendix_m.mhdfa"), "--max-len", "9"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "b b c c #\ncount: 1\n");
  const auto e1 = cli({"enum", fixture("example1.pcwk"), "--max-len", "6", "--alphabet", "a"});
  CHECK(e1.out == "a a a a a\ncount: 1\n");
  const auto j = nlohmann::json::parse(cli({"enum", fixture("appendix_m.mhdfa"), "--max-len", "5", "--json"}).out);
  CHECK(j["max_len"] == 5);
  CHECK(j["words"].size() == 1);
}

TEST_CASE("equiv") {
  CHECK(cli({"equiv", fixture("appendix_m.mhdfa"), fixture("appendix_aprime.pcfa"), "--max-len", "8"}).out ==
        "EQUAL up to length 8\n");
  TempDir dir;
  MultiheadAutomaton broken = build_appendix_m();
  broken.finals.clear();
  write_machine_file(dir.file("b.mhdfa"), {MachineKind::mhdfa, "broken", broken});
  const auto r = cli({"equiv", fixture("appendix_m.mhdfa"), dir.file("b.mhdfa"), "--max-len", "8"});
  CHECK(r.code == kExitNo);
  CHECK(r.out == "DIFFERENT\ncounterexample: b b c c #\n");
}

TEST_CASE("fixture") {
  for (const auto& f : all_fixtures()) {
    const auto r = cli({"fixture", f.name});
    CHECK(r.code == kExitOk);
    CHECK(r.out == serialize_machine({kind_of(f.machine), f.name, f.machine}));
  }
  TempDir dir;
  CHECK(cli({"fixture", "example2", "-o", dir.file("e2.wk")}).code == kExitOk);
  CHECK(read_machine_file(dir.file("e2.wk")).machine == Machine{build_example2()});
}
