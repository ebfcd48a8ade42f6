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

#include "wkpc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wkpc/classify.hpp"
#include "wkpc/constructions.hpp"
#include "wkpc/engine.hpp"
#include "wkpc/fixtures.hpp"
#include "wkpc/machine_io.hpp"
#include "wkpc/oracle.hpp"

namespace wkpc {
namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

json word_json(const Word& w) { return json(w); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

Alphabet parse_alphabet(const std::string& text) {
  Alphabet a;
  for (auto& s : expand_word(text)) {
    if (a.contains(s)) throw UsageError("duplicate symbol '" + s + "' in --alphabet");
    a.symbols.push_back(std::move(s));
  }
  if (a.symbols.empty()) throw UsageError("--alphabet needs at least one symbol");
  return a;
}

Alphabet union_alphabet(const Machine& a, const Machine& b) {
  Alphabet out = input_alphabet(a);
  for (const auto& s : input_alphabet(b).symbols)
    if (!out.contains(s)) out.symbols.push_back(s);
  return out;
}

void check_symbols(const Alphabet& a, const Word& w, const char* option) {
  for (const auto& s : w)
    if (!a.contains(s)) throw UsageError(std::string(option) + ": symbol '" + s + "' is not in the alphabet");
}

PCWKSystem as_system(const MachineDocument& doc, const char* command) {
  if (const auto* wk = std::get_if<WKAutomaton>(&doc.machine)) return PCWKSystem::degree_one(*wk);
  if (const auto* s = std::get_if<PCWKSystem>(&doc.machine)) return *s;
  throw UsageError(std::string(command) + " needs a wk or pcwk machine, got " + to_string(doc.kind));
}

std::string config_text(const PCConfiguration& c) {
  std::string out;
  for (std::size_t i = 0; i < c.states.size(); ++i) {
    if (i) out += "  ";
    out += "(" + c.states[i] + ", " + std::to_string(c.upper_pos[i]) + ", " + std::to_string(c.lower_pos[i]) + ")";
  }
  return out + "  lower: " + format_word(c.committed);
}

json config_json(const PCConfiguration& c) {
  return {{"states", c.states}, {"upper_pos", c.upper_pos}, {"lower_pos", c.lower_pos}, {"committed", c.committed}};
}

struct RunArgs {
  std::string file;
  std::string input;
  std::optional<std::string> lower;
  bool trace = false;
  std::size_t limit = 0;
  bool as_json = false;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
  const MachineDocument doc = read_machine_file(a.file);
  const Word w = expand_word(a.input);
  RunOptions opts;
  opts.node_limit = a.limit;
  opts.trace = a.trace;
  std::optional<Word> lower;
  if (a.lower) lower = expand_word(*a.lower);
  check_symbols(input_alphabet(doc.machine), w, "--input");
  if (lower) check_symbols(input_alphabet(doc.machine), *lower, "--lower");

  RunResult r;
  switch (doc.kind) {
    case MachineKind::wk:
    case MachineKind::pcwk: {
      const PCWKSystem s = as_system(doc, "run");
      r = lower ? pcwk_accepts_fixed(s, w, *lower, opts) : pcwk_accepts(s, w, opts);
      break;
    }
    case MachineKind::pcfa:
      if (lower) throw UsageError("--lower applies only to wk and pcwk machines");
      r = pcfa_accepts(std::get<PCFASystem>(doc.machine), w, opts);
      break;
    case MachineKind::mhdfa:
      if (lower) throw UsageError("--lower applies only to wk and pcwk machines");
      r = multihead_accepts(std::get<MultiheadAutomaton>(doc.machine), w, opts);
      break;
  }

  const bool double_strand = doc.kind == MachineKind::wk || doc.kind == MachineKind::pcwk;
  if (a.as_json) {
    json j{{"accepted", r.accepted}, {"reason", to_string(r.reason)}, {"nodes", r.nodes}};
    if (r.witness_lower && double_strand) j["witness"] = word_json(*r.witness_lower);
    if (r.trace) {
      json steps = json::array();
      for (const auto& st : *r.trace) {
        json f = json::array();
        for (const auto& x : st.fired) f.push_back(x ? json(*x) : json(nullptr));
        steps.push_back({{"config", config_json(st.config)}, {"fired", f}, {"communication", st.communication}});
      }
      j["trace"] = steps;
    }
    out << j.dump(2) << "\n";
  } else {
    if (r.accepted) {
      out << "ACCEPT\n";
      if (r.witness_lower && double_strand) out << "witness: " << format_word(*r.witness_lower) << "\n";
    } else if (r.reason == RunReason::resource_limit) {
      out << "UNKNOWN (" << to_string(r.reason) << " after " << r.nodes << " configurations)\n";
    } else {
      out << "REJECT (" << to_string(r.reason) << ")\n";
    }
    if (r.trace) {
      std::size_t k = 0;
      for (const auto& st : *r.trace) {
        out << "  " << k++ << ": " << config_text(st.config);
        if (st.communication) {
          out << "  [communication]";
        } else if (!st.fired.empty()) {
          out << "  [rules";
          for (const auto& x : st.fired) out << " " << (x ? std::to_string(*x + 1) : "-");
          out << "]";
        }
        out << "\n";
      }
    }
  }
  if (r.accepted) return kExitOk;
  return r.reason == RunReason::resource_limit ? kExitLimit : kExitNo;
}

json wk_report_json(const WKClassReport& c) {
  json j{{"stateless", c.stateless}, {"all_final", c.all_final},   {"simple", c.simple},
         {"one_limited", c.one_limited}, {"reads_at_most_one", c.reads_at_most_one},
         {"dwk", c.dwk}, {"sdwk", c.sdwk}};
  if (c.dwk_witness) j["dwk_witness"] = {c.dwk_witness->first + 1, c.dwk_witness->second + 1};
  return j;
}

void print_wk_report(std::ostream& out, const std::string& prefix, const WKClassReport& c) {
  out << prefix << "stateless=" << yes_no(c.stateless) << " all_final=" << yes_no(c.all_final)
      << " simple=" << yes_no(c.simple) << " one_limited=" << yes_no(c.one_limited)
      << " reads_at_most_one=" << yes_no(c.reads_at_most_one) << " dwk=" << yes_no(c.dwk)
      << " sdwk=" << yes_no(c.sdwk);
  if (c.dwk_witness) out << " conflict=rules " << c.dwk_witness->first + 1 << "," << c.dwk_witness->second + 1;
  out << "\n";
}

int cmd_classify(const std::string& file, int weak_bound, bool as_json, std::ostream& out) {
  const MachineDocument doc = read_machine_file(file);
  json j{{"kind", to_string(doc.kind)}};
  switch (doc.kind) {
    case MachineKind::wk: {
      const auto c = classify_wk(std::get<WKAutomaton>(doc.machine));
      if (as_json) j["report"] = wk_report_json(c);
      else print_wk_report(out, "", c);
      break;
    }
    case MachineKind::pcwk: {
      const auto& s = std::get<PCWKSystem>(doc.machine);
      SystemClassReport c = classify_system(s);
      if (weak_bound >= 0) c.wdpcwks_bounded = bounded_weak_determinism(s, weak_bound);
      if (as_json) {
        json comps = json::array();
        for (const auto& r : c.per_component) comps.push_back(wk_report_json(r));
        j["components"] = comps;
        j["dpcwks"] = c.dpcwks;
        j["sdpcwks"] = c.sdpcwks;
        j["wdpcwks"] = {{"status", to_string(c.wdpcwks_bounded.status)}, {"bound", c.wdpcwks_bounded.bound}};
        if (const auto& w = c.wdpcwks_bounded.witness)
          j["wdpcwks"]["witness"] = {{"upper", w->upper},   {"lower", w->lower},         {"component", w->component},
                                     {"states", w->states}, {"upper_pos", w->upper_pos}, {"lower_pos", w->lower_pos}};
      } else {
        for (std::size_t i = 0; i < c.per_component.size(); ++i)
          print_wk_report(out, "component " + std::to_string(i + 1) + ": ", c.per_component[i]);
        out << "dpcwks=" << yes_no(c.dpcwks) << "\n";
        out << "sdpcwks=" << yes_no(c.sdpcwks) << "\n";
        out << "wdpcwks=" << to_string(c.wdpcwks_bounded.status);
        if (c.wdpcwks_bounded.status != BoundedStatus::unchecked) out << " (bound " << c.wdpcwks_bounded.bound << ")";
        out << "\n";
        if (const auto& w = c.wdpcwks_bounded.witness)
          out << "witness: component " << w->component << " on " << format_word(w->upper) << " / "
              << format_word(w->lower) << "\n";
      }
      break;
    }
    case MachineKind::mhdfa: {
      const auto& m = std::get<MultiheadAutomaton>(doc.machine);
      const auto d = multihead_is_deterministic(m);
      if (as_json) {
        j["deterministic"] = d.deterministic;
        if (d.witness) j["conflict"] = {d.witness->first + 1, d.witness->second + 1};
      } else {
        out << "heads=" << m.heads << " deterministic=" << yes_no(d.deterministic);
        if (d.witness) out << " conflict=rules " << d.witness->first + 1 << "," << d.witness->second + 1;
        out << "\n";
      }
      break;
    }
    case MachineKind::pcfa:
      throw UsageError("classify supports wk, pcwk and mhdfa machines");
  }
  if (as_json) out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_normalize(const std::string& file, const std::string& dest, std::ostream& out) {
  const MachineDocument doc = read_machine_file(file);
  const auto [s, rep] = normalize_one_limited(as_system(doc, "normalize"));
  MachineDocument res{doc.kind, doc.name, {}};
  if (doc.kind == MachineKind::wk) res.machine = s.components.front();
  else res.machine = s;
  write_machine_file(dest, res);
  out << "m=" << rep.m << " rules " << rep.rules_before << " -> " << rep.rules_after << " fresh_states="
      << rep.fresh_states << " lower_first_states=" << rep.lower_first_states << (rep.identity ? " (unchanged)" : "")
      << "\n";
  return kExitOk;
}

int cmd_to_multihead(const std::string& file, const std::string& dest, std::ostream& out) {
  const MachineDocument doc = read_machine_file(file);
  MultiheadAutomaton m = product_multihead(as_system(doc, "to-multihead"));
  out << "heads=" << m.heads << " states=" << m.states.size() << " rules=" << m.rules.size() << "\n";
  write_machine_file(dest, MachineDocument{MachineKind::mhdfa, doc.name + "-product", std::move(m)});
  return kExitOk;
}

int cmd_lift(const std::string& file, const std::string& symbol, const std::string& dest) {
  const MachineDocument doc = read_machine_file(file);
  const auto* s = std::get_if<PCFASystem>(&doc.machine);
  if (!s) throw UsageError("lift needs a pcfa machine, got " + to_string(doc.kind));
  write_machine_file(dest, MachineDocument{MachineKind::pcwk, doc.name + "-lifted", lift_pcfa(*s, symbol)});
  return kExitOk;
}

int cmd_enum(const std::string& file, int max_len, const std::optional<std::string>& alpha, std::size_t limit,
             bool as_json, std::ostream& out) {
  const MachineDocument doc = read_machine_file(file);
  const Alphabet a = alpha ? parse_alphabet(*alpha) : input_alphabet(doc.machine);
  const auto words = enumerate_accepted(doc.machine, a, max_len, limit);
  if (as_json) {
    json ws = json::array();
    for (const auto& w : words) ws.push_back(word_json(w));
    out << json{{"max_len", max_len}, {"alphabet", a.symbols}, {"words", ws}}.dump(2) << "\n";
  } else {
    for (const auto& w : words) out << format_word(w) << "\n";
    out << "count: " << words.size() << "\n";
  }
  return kExitOk;
}

int cmd_equiv(const std::string& fa, const std::string& fb, int max_len, const std::optional<std::string>& alpha,
              std::size_t limit, bool as_json, std::ostream& out) {
  const MachineDocument a = read_machine_file(fa);
  const MachineDocument b = read_machine_file(fb);
  const Alphabet alphabet = alpha ? parse_alphabet(*alpha) : union_alphabet(a.machine, b.machine);
  const auto rep = equivalent_up_to(a.machine, b.machine, alphabet, max_len, limit);
  if (as_json) {
    json j{{"equal", rep.equal}, {"bound", rep.bound}, {"counts_a", rep.counts_a}, {"counts_b", rep.counts_b}};
    if (rep.counterexample) j["counterexample"] = word_json(*rep.counterexample);
    out << j.dump(2) << "\n";
  } else if (rep.equal) {
    out << "EQUAL up to length " << rep.bound << "\n";
  } else {
    out << "DIFFERENT\ncounterexample: " << format_word(*rep.counterexample) << "\n";
  }
  return rep.equal ? kExitOk : kExitNo;
}

int cmd_fixture(const std::string& name, const std::optional<std::string>& dest, std::ostream& out) {
  for (const auto& f : all_fixtures()) {
    if (f.name != name) continue;
    MachineDocument doc{kind_of(f.machine), f.name, f.machine};
    if (dest) write_machine_file(*dest, doc);
    else out << serialize_machine(doc);
    return kExitOk;
  }
  throw UsageError("unknown fixture '" + name + "'");
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Watson-Crick and parallel communicating automata toolkit", "wkpc"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Decide membership of an input word");
  run_cmd->add_option("file", run.file, "Machine file")->required();
  run_cmd->add_option("--input", run.input, "Input word, e.g. \"a^5\" or \"b b c\"")->required();
  run_cmd->add_option("--lower", run.lower, "Fix the lower strand (wk, pcwk)");
  run_cmd->add_flag("--trace", run.trace, "Print the accepting run");
  run_cmd->add_option("--limit", run.limit, "Configuration ceiling");
  run_cmd->add_flag("--json", run.as_json, "JSON output");

  std::string file, file_b, dest, symbol, name;
  std::optional<std::string> alphabet, dest_opt;
  int max_len = 0, weak_bound = -1;
  std::size_t limit = 0;
  bool as_json = false;

  auto* classify_cmd = app.add_subcommand("classify", "Report subclass membership and determinism");
  classify_cmd->add_option("file", file, "Machine file")->required();
  classify_cmd->add_option("--weak-bound", weak_bound, "Check weak determinism on upper words up to this length");
  classify_cmd->add_flag("--json", as_json, "JSON output");

  auto* normalize_cmd = app.add_subcommand("normalize", "Split rules into single-symbol reads");
  normalize_cmd->add_option("file", file, "wk or pcwk file")->required();
  normalize_cmd->add_option("-o,--output", dest, "Output file")->required();

  auto* mh_cmd = app.add_subcommand("to-multihead", "Build the equivalent multihead automaton");
  mh_cmd->add_option("file", file, "wk or pcwk file")->required();
  mh_cmd->add_option("-o,--output", dest, "Output file")->required();

  auto* lift_cmd = app.add_subcommand("lift", "Lift a pcfa system onto a uniletter upper strand");
  lift_cmd->add_option("file", file, "pcfa file")->required();
  lift_cmd->add_option("--upper-symbol", symbol, "Upper-strand symbol")->required();
  lift_cmd->add_option("-o,--output", dest, "Output file")->required();

  auto* enum_cmd = app.add_subcommand("enum", "List accepted words up to a length");
  enum_cmd->add_option("file", file, "Machine file")->required();
  enum_cmd->add_option("--max-len", max_len, "Maximum word length")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--alphabet", alphabet, "Symbols to enumerate over");
  enum_cmd->add_option("--limit", limit, "Configuration ceiling per word");
  enum_cmd->add_flag("--json", as_json, "JSON output");

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two languages up to a length");
  equiv_cmd->add_option("file_a", file, "First machine")->required();
  equiv_cmd->add_option("file_b", file_b, "Second machine")->required();
  equiv_cmd->add_option("--max-len", max_len, "Maximum word length")->required()->check(CLI::NonNegativeNumber);
  equiv_cmd->add_option("--alphabet", alphabet, "Symbols to enumerate over");
  equiv_cmd->add_option("--limit", limit, "Configuration ceiling per word");
  equiv_cmd->add_flag("--json", as_json, "JSON output");

  auto* fixture_cmd = app.add_subcommand("fixture", "Write a reference machine");
  fixture_cmd->add_option("name", name, "example1, example2, appendix-m, appendix-aprime or marker-copy")->required();
  fixture_cmd->add_option("-o,--output", dest_opt, "Output file (stdout if omitted)");

  std::vector<std::string> storage{"wkpc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wkpc: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << "run 'wkpc --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run, out);
    if (classify_cmd->parsed()) return cmd_classify(file, weak_bound, as_json, out);
    if (normalize_cmd->parsed()) return cmd_normalize(file, dest, out);
    if (mh_cmd->parsed()) return cmd_to_multihead(file, dest, out);
    if (lift_cmd->parsed()) return cmd_lift(file, symbol, dest);
    if (enum_cmd->parsed()) return cmd_enum(file, max_len, alphabet, limit, as_json, out);
    if (equiv_cmd->parsed()) return cmd_equiv(file, file_b, max_len, alphabet, limit, as_json, out);
    if (fixture_cmd->parsed()) return cmd_fixture(name, dest_opt, out);
  } catch (const ResourceLimitError& e) {
    err << "wkpc: " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    err << "wkpc: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wkpc
