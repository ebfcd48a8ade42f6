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

#include "wkpc/engine.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "visited_set.hpp"

namespace wkpc {

std::string to_string(RunReason r) {
  switch (r) {
    case RunReason::accepted: return "accepted";
    case RunReason::exhausted: return "exhausted";
    case RunReason::component_stuck: return "component-stuck";
    case RunReason::cycle_without_progress: return "cycle-without-progress";
    case RunReason::resource_limit: return "resource-limit";
  }
  return "unknown";
}

std::size_t default_node_limit() {
  if (const char* env = std::getenv("WKPC_NODE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

namespace {

constexpr int kFiredNone = -1;
constexpr int kFiredComm = -2;

struct CRule {
  int to;
  int index;
  std::vector<int> upper;
  std::vector<int> lower;
};

// Symbols and states are interned to small integers. State ids are global
// across components so communicated states keep their identity.
struct Compiled {
  int n = 0;
  bool single_strand = false;
  std::vector<std::string> symbols;
  std::unordered_map<std::string, int> sym_id;
  std::vector<std::string> state_names;
  std::unordered_map<std::string, int> state_id;
  std::vector<int> query_target;                       // per state, -1 if not a query state
  std::vector<int> start;                              // per component
  std::vector<std::vector<char>> final;                // [comp][state]
  std::vector<std::vector<std::vector<CRule>>> rules;  // [comp][state]
  std::vector<char> compat;                            // [upper * nsym + lower]

  int intern_state(const std::string& q) {
    auto [it, fresh] = state_id.emplace(q, static_cast<int>(state_names.size()));
    if (fresh) state_names.push_back(q);
    return it->second;
  }

  int sym(const std::string& s) const {
    auto it = sym_id.find(s);
    return it == sym_id.end() ? -1 : it->second;
  }

  void set_alphabet(const Alphabet& a) {
    symbols = a.symbols;
    for (std::size_t i = 0; i < symbols.size(); ++i) sym_id.emplace(symbols[i], static_cast<int>(i));
  }

  void finish_states() {
    const std::size_t ns = state_names.size();
    query_target.resize(ns, -1);
    for (auto& f : final) f.resize(ns, 0);
    for (auto& r : rules) r.resize(ns);
  }

  std::vector<int> encode(const Word& w, bool& ok) const {
    std::vector<int> out;
    out.reserve(w.size());
    ok = true;
    for (const auto& s : w) {
      const int id = sym(s);
      if (id < 0) ok = false;
      out.push_back(id);
    }
    return out;
  }

  bool compatible(int u, int l) const {
    return compat[static_cast<std::size_t>(u) * symbols.size() + static_cast<std::size_t>(l)] != 0;
  }
};

std::vector<int> encode_word(const Compiled& c, const Word& w) {
  std::vector<int> out;
  for (const auto& s : w) {
    const int id = c.sym(s);
    if (id < 0) throw Error("symbol '" + s + "' is not in the alphabet");
    out.push_back(id);
  }
  return out;
}

Compiled compile(const PCWKSystem& s) {
  Compiled c;
  c.n = static_cast<int>(s.components.size());
  c.set_alphabet(s.alphabet);
  const std::size_t ns = c.symbols.size();
  c.compat.assign(ns * ns, 0);
  for (const auto& [u, l] : s.rho.pairs) {
    const int a = c.sym(u), b = c.sym(l);
    if (a >= 0 && b >= 0) c.compat[static_cast<std::size_t>(a) * ns + static_cast<std::size_t>(b)] = 1;
  }
  for (const auto& comp : s.components)
    for (const auto& q : comp.states) c.intern_state(q);
  for (const auto& qb : s.queries) c.intern_state(qb.query_state);
  c.final.resize(s.components.size());
  c.rules.resize(s.components.size());
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const auto& comp = s.components[k];
    c.start.push_back(c.intern_state(comp.start));
    for (const auto& r : comp.rules) {
      c.intern_state(r.from);
      c.intern_state(r.to);
    }
  }
  c.finish_states();
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const auto& comp = s.components[k];
    for (const auto& f : comp.finals) c.final[k][c.intern_state(f)] = 1;
    for (std::size_t i = 0; i < comp.rules.size(); ++i) {
      const auto& r = comp.rules[i];
      CRule cr{c.state_id.at(r.to), static_cast<int>(i), encode_word(c, r.upper), encode_word(c, r.lower)};
      c.rules[k][c.state_id.at(r.from)].push_back(std::move(cr));
    }
  }
  for (const auto& qb : s.queries) c.query_target[c.state_id.at(qb.query_state)] = qb.target - 1;
  return c;
}

Compiled compile(const PCFASystem& s) {
  Compiled c;
  c.n = static_cast<int>(s.components.size());
  c.single_strand = true;
  c.set_alphabet(s.alphabet);
  for (const auto& comp : s.components)
    for (const auto& q : comp.states) c.intern_state(q);
  for (const auto& qb : s.queries) c.intern_state(qb.query_state);
  c.final.resize(s.components.size());
  c.rules.resize(s.components.size());
  for (const auto& comp : s.components) {
    c.start.push_back(c.intern_state(comp.start));
    for (const auto& r : comp.rules) {
      c.intern_state(r.from);
      c.intern_state(r.to);
    }
  }
  c.finish_states();
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const auto& comp = s.components[k];
    for (const auto& f : comp.finals) c.final[k][c.intern_state(f)] = 1;
    for (std::size_t i = 0; i < comp.rules.size(); ++i) {
      const auto& r = comp.rules[i];
      CRule cr{c.state_id.at(r.to), static_cast<int>(i), {}, {}};
      if (r.read) cr.upper = encode_word(c, Word{*r.read});
      c.rules[k][c.state_id.at(r.from)].push_back(std::move(cr));
    }
  }
  for (const auto& qb : s.queries) c.query_target[c.state_id.at(qb.query_state)] = qb.target - 1;
  return c;
}

RunResult reject(RunReason reason, std::size_t nodes = 0) {
  RunResult r;
  r.reason = reason;
  r.nodes = nodes;
  return r;
}

RunReason dead_end_reason(std::size_t stuck, std::size_t cycles) {
  if (stuck > 0 && cycles == 0) return RunReason::component_stuck;
  if (cycles > 0 && stuck == 0) return RunReason::cycle_without_progress;
  return RunReason::exhausted;
}

}  // namespace

// Flat configuration layout: [states(n) | upper pos(n) | lower pos(n) | |committed| | committed...].
// Pool entries prepend [entry size | fired(n)].
struct PCWKRunner::Impl {
  Compiled c;
  int n = 0;
  std::vector<int> w;       // upper word
  bool fixed = false;
  std::vector<int> pool;
  std::vector<int> cur;     // configuration being expanded
  std::vector<int> work;    // successor under construction
  std::vector<int> fired;
  std::vector<int> key;
  std::vector<int> comm_codes;
  internal::VisitedSet visited;
  std::size_t stuck = 0, cycles = 0;

  // Visit data for explore_fixed.
  bool visit_comm = false;
  std::vector<int> visit_app, visit_distinct;
  const int* visit_cfg = nullptr;

  explicit Impl(Compiled compiled) : c(std::move(compiled)), n(c.n) {}

  int S(int i) const { return i; }
  int U(int i) const { return n + i; }
  int L(int i) const { return 2 * n + i; }
  int CL() const { return 3 * n; }
  int base() const { return 3 * n + 1; }

  void reset(std::vector<int> upper) {
    w = std::move(upper);
    pool.clear();
    visited.clear();
    stuck = cycles = 0;
    cur.assign(static_cast<std::size_t>(base()) + w.size(), 0);
    work.assign(cur.size(), 0);
    fired.assign(static_cast<std::size_t>(n), kFiredNone);
    comm_codes.assign(static_cast<std::size_t>(n), kFiredComm);
  }

  std::size_t config_size(const int* cfg) const { return static_cast<std::size_t>(base() + cfg[CL()]); }

  void emit(const int* cfg, const int* fired_codes) {
    const std::size_t sz = config_size(cfg);
    pool.push_back(static_cast<int>(1 + n + sz));
    pool.insert(pool.end(), fired_codes, fired_codes + n);
    pool.insert(pool.end(), cfg, cfg + sz);
  }

  bool accepting(const int* cfg) const {
    const int len = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
      if (!c.final[i][cfg[S(i)]]) return false;
      if (cfg[U(i)] != len) return false;
      if (!c.single_strand && cfg[L(i)] != len) return false;
    }
    return true;
  }

  bool is_comm(const int* cfg) const {
    for (int i = 0; i < n; ++i)
      if (c.query_target[cfg[S(i)]] >= 0) return true;
    return false;
  }

  // Inserts the reduced key of `cfg`: committed symbols below every lower
  // head can no longer influence the run.
  std::pair<std::uint32_t, bool> remember(const int* cfg) {
    key.assign(cfg, cfg + base());
    int lo = cfg[CL()];
    for (int i = 0; i < n; ++i) lo = std::min(lo, cfg[L(i)]);
    key.insert(key.end(), cfg + base() + lo, cfg + base() + cfg[CL()]);
    return visited.insert(key.data(), key.size());
  }

  // Tries rule r for component i against `work`; on success applies it and
  // returns true. `work` must be restored by the caller via the saved values.
  bool applicable(const CRule& r, int i, const int* cfg) const {
    const int len = static_cast<int>(w.size());
    int up = cfg[U(i)];
    if (up + static_cast<int>(r.upper.size()) > len) return false;
    for (int s : r.upper)
      if (w[up++] != s) return false;
    int lp = cfg[L(i)];
    if (lp + static_cast<int>(r.lower.size()) > len) return false;
    const int cl = cfg[CL()];
    for (int s : r.lower) {
      if (lp < cl) {
        if (cfg[base() + lp] != s) return false;
      } else if (!c.compatible(w[lp], s)) {
        return false;
      }
      ++lp;
    }
    return true;
  }

  void apply(const CRule& r, int i, int* cfg) const {
    const int cl = cfg[CL()];
    int lp = cfg[L(i)];
    for (int s : r.lower) {
      if (lp >= cl) {
        cfg[base() + lp] = s;
        cfg[CL()] = lp + 1;
      }
      ++lp;
    }
    cfg[S(i)] = r.to;
    cfg[U(i)] += static_cast<int>(r.upper.size());
    cfg[L(i)] = lp;
  }

  void fire(int i) {
    if (i == n) {
      emit(work.data(), fired.data());
      return;
    }
    const int st = cur[S(i)];
    for (const CRule& r : c.rules[i][st]) {
      if (!applicable(r, i, work.data())) continue;
      const int save_u = work[U(i)], save_l = work[L(i)], save_cl = work[CL()];
      apply(r, i, work.data());
      fired[i] = r.index;
      fire(i + 1);
      work[S(i)] = st;
      work[U(i)] = save_u;
      work[L(i)] = save_l;
      work[CL()] = save_cl;
    }
  }

  // Appends the successors of the pool entry at `off` to the pool.
  void expand(std::size_t off) {
    const int* cfg = pool.data() + off + 1 + n;
    const std::size_t sz = config_size(cfg);
    std::copy(cfg, cfg + sz, cur.begin());
    if (is_comm(cur.data())) {
      std::copy(cur.begin(), cur.begin() + static_cast<long>(sz), work.begin());
      bool changed = false;
      for (int i = 0; i < n; ++i) {
        const int t = c.query_target[cur[S(i)]];
        if (t < 0) continue;
        const int ts = cur[S(t)];
        if (c.query_target[ts] >= 0) continue;
        work[S(i)] = ts;
        changed = changed || ts != cur[S(i)];
      }
      if (!changed) {
        ++cycles;
        return;
      }
      emit(work.data(), comm_codes.data());
      return;
    }
    std::copy(cur.begin(), cur.begin() + static_cast<long>(sz), work.begin());
    const std::size_t before = pool.size();
    fire(0);
    if (pool.size() == before) ++stuck;
  }

  void compute_visit(const int* cfg) {
    visit_cfg = cfg;
    visit_comm = is_comm(cfg);
    visit_app.assign(static_cast<std::size_t>(n), 0);
    visit_distinct.assign(static_cast<std::size_t>(n), 0);
    if (visit_comm) return;
    std::vector<std::array<int, 3>> outcomes;
    for (int i = 0; i < n; ++i) {
      outcomes.clear();
      for (const CRule& r : c.rules[i][cfg[S(i)]]) {
        if (!applicable(r, i, cfg)) continue;
        ++visit_app[i];
        std::array<int, 3> o{r.to, cfg[U(i)] + static_cast<int>(r.upper.size()),
                             cfg[L(i)] + static_cast<int>(r.lower.size())};
        if (std::find(outcomes.begin(), outcomes.end(), o) == outcomes.end()) outcomes.push_back(o);
      }
      visit_distinct[i] = static_cast<int>(outcomes.size());
    }
  }

  PCConfiguration materialize(const int* cfg) const {
    PCConfiguration pc;
    for (int i = 0; i < n; ++i) {
      pc.states.push_back(c.state_names[cfg[S(i)]]);
      pc.upper_pos.push_back(static_cast<std::size_t>(cfg[U(i)]));
      if (!c.single_strand) pc.lower_pos.push_back(static_cast<std::size_t>(cfg[L(i)]));
    }
    for (int k = 0; k < cfg[CL()]; ++k) pc.committed.push_back(c.symbols[cfg[base() + k]]);
    return pc;
  }

  TraceStep trace_step(std::size_t off) const {
    TraceStep t;
    const int* f = pool.data() + off + 1;
    t.config = materialize(f + n);
    if (f[0] == kFiredComm) {
      t.communication = true;
    } else if (f[0] != kFiredNone) {
      for (int i = 0; i < n; ++i) t.fired.emplace_back(static_cast<std::size_t>(f[i]));
    }
    return t;
  }

  struct Frame {
    std::size_t self;  // pool offset of this configuration's entry
    std::size_t begin, end, cursor;
    std::uint32_t entry;
  };

  // Depth-first search from the initial configuration. With `visit` set,
  // acceptance does not stop the walk.
  RunResult search(const std::vector<int>* lower, const RunOptions& opts,
                   const std::function<bool(const ConfigVisit&)>* visit, bool* stopped) {
    const std::size_t limit = opts.node_limit ? opts.node_limit : default_node_limit();
    std::vector<int> init(static_cast<std::size_t>(base()) + w.size(), 0);
    for (int i = 0; i < n; ++i) init[S(i)] = c.start[i];
    if (lower) {
      init[CL()] = static_cast<int>(lower->size());
      std::copy(lower->begin(), lower->end(), init.begin() + base());
    }
    std::vector<int> none(static_cast<std::size_t>(n), kFiredNone);
    emit(init.data(), none.data());

    std::vector<Frame> stack;
    std::size_t next = 0;  // offset of the entry about to be visited
    std::size_t nodes = 0;
    while (true) {
      const int* cfg = pool.data() + next + 1 + n;
      auto [id, fresh] = remember(cfg);
      if (!fresh) {
        if (visited.on_stack(id)) ++cycles;
      } else {
        ++nodes;
        if (nodes > limit) {
          if (visit) throw ResourceLimitError("configuration ceiling of " + std::to_string(limit) + " exceeded");
          return reject(RunReason::resource_limit, nodes);
        }
        if (visit) {
          compute_visit(cfg);
          if (!(*visit)(ConfigVisit(this))) {
            *stopped = true;
            return reject(RunReason::exhausted, nodes);
          }
        } else if (accepting(cfg)) {
          RunResult r;
          r.accepted = true;
          r.reason = RunReason::accepted;
          r.nodes = nodes;
          Word lw;
          for (int k = 0; k < cfg[CL()]; ++k) lw.push_back(c.symbols[cfg[base() + k]]);
          if (!c.single_strand) r.witness_lower = std::move(lw);
          if (opts.trace) {
            std::vector<TraceStep> t;
            for (const auto& f : stack) t.push_back(trace_step(f.self));
            t.push_back(trace_step(next));
            r.trace = std::move(t);
          }
          return r;
        }
        visited.set_on_stack(id, true);
        const std::size_t begin = pool.size();
        expand(next);
        stack.push_back({next, begin, pool.size(), begin, id});
      }
      // Advance to the next unvisited successor, popping finished frames.
      while (!stack.empty() && stack.back().cursor == stack.back().end) {
        visited.set_on_stack(stack.back().entry, false);
        pool.resize(stack.back().begin);
        stack.pop_back();
      }
      if (stack.empty()) break;
      next = stack.back().cursor;
      stack.back().cursor += static_cast<std::size_t>(pool[next]);
    }
    return reject(dead_end_reason(stuck, cycles), nodes);
  }

  bool strands_ok(const std::vector<int>& upper, const std::vector<int>& lower) const {
    if (upper.size() != lower.size()) return false;
    for (std::size_t i = 0; i < upper.size(); ++i)
      if (!c.compatible(upper[i], lower[i])) return false;
    return true;
  }
};

std::size_t ConfigVisit::degree() const {
  return static_cast<std::size_t>(static_cast<const PCWKRunner::Impl*>(ctx_)->n);
}
bool ConfigVisit::communication() const { return static_cast<const PCWKRunner::Impl*>(ctx_)->visit_comm; }
int ConfigVisit::applicable(std::size_t comp) const {
  return static_cast<const PCWKRunner::Impl*>(ctx_)->visit_app.at(comp);
}
int ConfigVisit::distinct_outcomes(std::size_t comp) const {
  return static_cast<const PCWKRunner::Impl*>(ctx_)->visit_distinct.at(comp);
}
PCConfiguration ConfigVisit::config() const {
  const auto* impl = static_cast<const PCWKRunner::Impl*>(ctx_);
  return impl->materialize(impl->visit_cfg);
}

PCWKRunner::PCWKRunner(const PCWKSystem& s) {
  require_valid(s);
  impl_ = std::make_unique<Impl>(compile(s));
}
PCWKRunner::PCWKRunner(const PCFASystem& s) {
  require_valid(s);
  impl_ = std::make_unique<Impl>(compile(s));
}
PCWKRunner::~PCWKRunner() = default;
PCWKRunner::PCWKRunner(PCWKRunner&&) noexcept = default;
PCWKRunner& PCWKRunner::operator=(PCWKRunner&&) noexcept = default;

RunResult PCWKRunner::accepts(const Word& upper, const RunOptions& opts) {
  bool ok = true;
  auto u = impl_->c.encode(upper, ok);
  if (!ok) return reject(RunReason::exhausted);
  impl_->reset(std::move(u));
  return impl_->search(nullptr, opts, nullptr, nullptr);
}

RunResult PCWKRunner::accepts_fixed(const Word& upper, const Word& lower, const RunOptions& opts) {
  if (impl_->c.single_strand) throw PreconditionError("fixed lower strand on a single-strand system");
  bool ok_u = true, ok_l = true;
  auto u = impl_->c.encode(upper, ok_u);
  auto l = impl_->c.encode(lower, ok_l);
  if (!ok_u || !ok_l || !impl_->strands_ok(u, l)) return reject(RunReason::exhausted);
  impl_->reset(std::move(u));
  return impl_->search(&l, opts, nullptr, nullptr);
}

bool PCWKRunner::explore_fixed(const Word& upper, const Word& lower,
                               const std::function<bool(const ConfigVisit&)>& visit, std::size_t node_limit) {
  if (impl_->c.single_strand) throw PreconditionError("fixed lower strand on a single-strand system");
  bool ok_u = true, ok_l = true;
  auto u = impl_->c.encode(upper, ok_u);
  auto l = impl_->c.encode(lower, ok_l);
  if (!ok_u || !ok_l || !impl_->strands_ok(u, l)) return false;
  impl_->reset(std::move(u));
  RunOptions opts;
  opts.node_limit = node_limit;
  bool stopped = false;
  impl_->search(&l, opts, &visit, &stopped);
  return !stopped;
}

std::vector<PCConfiguration> PCWKRunner::step(const PCConfiguration& pc, const Word& upper) const {
  Impl& im = *impl_;
  const int n = im.n;
  if (pc.states.size() != static_cast<std::size_t>(n) || pc.upper_pos.size() != pc.states.size() ||
      (!im.c.single_strand && pc.lower_pos.size() != pc.states.size()))
    throw PreconditionError("configuration does not match the system degree");
  bool ok = true;
  auto u = im.c.encode(upper, ok);
  if (!ok) throw PreconditionError("upper word contains a symbol outside the alphabet");
  auto committed = im.c.encode(pc.committed, ok);
  if (!ok || committed.size() > u.size()) throw PreconditionError("malformed committed prefix");
  Impl& scratch = const_cast<Impl&>(im);
  scratch.reset(u);
  std::vector<int> cfg(static_cast<std::size_t>(im.base()) + u.size(), 0);
  for (int i = 0; i < n; ++i) {
    auto it = im.c.state_id.find(pc.states[i]);
    if (it == im.c.state_id.end()) throw PreconditionError("unknown state '" + pc.states[i] + "'");
    cfg[im.S(i)] = it->second;
    cfg[im.U(i)] = static_cast<int>(pc.upper_pos[i]);
    cfg[im.L(i)] = im.c.single_strand ? 0 : static_cast<int>(pc.lower_pos[i]);
  }
  cfg[im.CL()] = static_cast<int>(committed.size());
  std::copy(committed.begin(), committed.end(), cfg.begin() + im.base());
  std::vector<int> none(static_cast<std::size_t>(n), kFiredNone);
  scratch.emit(cfg.data(), none.data());
  const std::size_t first = scratch.pool.size();
  scratch.expand(0);
  std::vector<PCConfiguration> out;
  if (scratch.is_comm(cfg.data()) && scratch.pool.size() == first) {
    out.push_back(pc);
    return out;
  }
  for (std::size_t off = first; off < scratch.pool.size(); off += static_cast<std::size_t>(scratch.pool[off]))
    out.push_back(scratch.materialize(scratch.pool.data() + off + 1 + n));
  return out;
}

RunResult pcwk_accepts(const PCWKSystem& s, const Word& upper, const RunOptions& opts) {
  return PCWKRunner(s).accepts(upper, opts);
}
RunResult pcwk_accepts_fixed(const PCWKSystem& s, const Word& upper, const Word& lower, const RunOptions& opts) {
  return PCWKRunner(s).accepts_fixed(upper, lower, opts);
}
RunResult wk_accepts(const WKAutomaton& m, const Word& upper, const RunOptions& opts) {
  return pcwk_accepts(PCWKSystem::degree_one(m), upper, opts);
}
RunResult wk_accepts_fixed(const WKAutomaton& m, const Word& upper, const Word& lower, const RunOptions& opts) {
  return pcwk_accepts_fixed(PCWKSystem::degree_one(m), upper, lower, opts);
}
RunResult pcfa_accepts(const PCFASystem& s, const Word& w, const RunOptions& opts) {
  return PCWKRunner(s).accepts(w, opts);
}
std::vector<PCConfiguration> pcwk_step(const PCWKSystem& s, const PCConfiguration& c, const Word& upper) {
  return PCWKRunner(s).step(c, upper);
}

// ---------------------------------------------------------------------------
// Multihead automata: configuration = [state | head positions].

struct MultiheadRunner::Impl {
  int k = 0;
  std::vector<std::string> symbols;
  std::unordered_map<std::string, int> sym_id;
  std::vector<std::string> state_names;
  std::unordered_map<std::string, int> state_id;
  int start = 0;
  std::vector<char> final;
  struct MRule {
    int to;
    int index;
    std::vector<int> reads;  // -1 = no read on that head
  };
  std::vector<std::vector<MRule>> rules;
  internal::VisitedSet visited;

  int intern(const std::string& q) {
    auto [it, fresh] = state_id.emplace(q, static_cast<int>(state_names.size()));
    if (fresh) state_names.push_back(q);
    return it->second;
  }

  explicit Impl(const MultiheadAutomaton& m) : k(m.heads) {
    symbols = m.alphabet.symbols;
    for (std::size_t i = 0; i < symbols.size(); ++i) sym_id.emplace(symbols[i], static_cast<int>(i));
    for (const auto& q : m.states) intern(q);
    start = intern(m.start);
    for (const auto& r : m.rules) {
      intern(r.from);
      intern(r.to);
    }
    final.assign(state_names.size(), 0);
    for (const auto& f : m.finals) final[intern(f)] = 1;
    rules.resize(state_names.size());
    for (std::size_t i = 0; i < m.rules.size(); ++i) {
      const auto& r = m.rules[i];
      MRule mr{state_id.at(r.to), static_cast<int>(i), {}};
      for (const auto& rd : r.reads) mr.reads.push_back(rd ? sym_id.at(*rd) : -1);
      rules[state_id.at(r.from)].push_back(std::move(mr));
    }
  }

  bool applicable(const MRule& r, const int* cfg, const std::vector<int>& w) const {
    for (int h = 0; h < k; ++h) {
      const int s = r.reads[h];
      if (s < 0) continue;
      const int p = cfg[1 + h];
      if (p >= static_cast<int>(w.size()) || w[p] != s) return false;
    }
    return true;
  }

  // Returns the run result; `max_app` (if set) collects the largest number
  // of applicable rules seen at any configuration, and the walk then
  // explores everything instead of stopping at acceptance.
  RunResult run(const std::vector<int>& w, const RunOptions& opts, int* max_app) {
    const std::size_t limit = opts.node_limit ? opts.node_limit : default_node_limit();
    visited.clear();
    const std::size_t width = static_cast<std::size_t>(k) + 1;
    struct Frame {
      std::vector<int> cfg;
      int fired;
      std::size_t rule_cursor;
      std::uint32_t entry;
    };
    std::vector<Frame> stack;
    std::size_t nodes = 0, stuck = 0, cycles = 0;
    std::vector<int> cfg(width, 0);
    cfg[0] = start;
    int fired = -1;
    auto make_result = [&](const std::vector<int>& last) {
      RunResult r;
      r.accepted = true;
      r.reason = RunReason::accepted;
      r.nodes = nodes;
      if (opts.trace) {
        std::vector<TraceStep> t;
        auto add = [&](const std::vector<int>& c, int f) {
          TraceStep ts;
          ts.config.states.push_back(state_names[c[0]]);
          for (int h = 0; h < k; ++h) ts.config.upper_pos.push_back(static_cast<std::size_t>(c[1 + h]));
          if (f >= 0) ts.fired.emplace_back(static_cast<std::size_t>(f));
          t.push_back(std::move(ts));
        };
        for (const auto& fr : stack) add(fr.cfg, fr.fired);
        add(last, fired);
        r.trace = std::move(t);
      }
      return r;
    };
    while (true) {
      auto [id, fresh] = visited.insert(cfg.data(), cfg.size());
      if (!fresh) {
        if (visited.on_stack(id)) ++cycles;
      } else {
        if (++nodes > limit) {
          if (max_app) throw ResourceLimitError("configuration ceiling of " + std::to_string(limit) + " exceeded");
          return reject(RunReason::resource_limit, nodes);
        }
        bool at_end = true;
        for (int h = 0; h < k; ++h) at_end = at_end && cfg[1 + h] == static_cast<int>(w.size());
        int app = 0;
        for (const auto& r : rules[cfg[0]]) app += applicable(r, cfg.data(), w) ? 1 : 0;
        if (max_app) {
          *max_app = std::max(*max_app, app);
        } else if (at_end && final[cfg[0]]) {
          return make_result(cfg);
        }
        if (app == 0) ++stuck;
        visited.set_on_stack(id, true);
        stack.push_back({cfg, fired, 0, id});
      }
      // Find the next successor to visit.
      bool advanced = false;
      while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& rs = rules[f.cfg[0]];
        while (f.rule_cursor < rs.size() && !applicable(rs[f.rule_cursor], f.cfg.data(), w)) ++f.rule_cursor;
        if (f.rule_cursor < rs.size()) {
          const auto& r = rs[f.rule_cursor++];
          cfg = f.cfg;
          cfg[0] = r.to;
          for (int h = 0; h < k; ++h)
            if (r.reads[h] >= 0) ++cfg[1 + h];
          fired = r.index;
          advanced = true;
          break;
        }
        visited.set_on_stack(f.entry, false);
        stack.pop_back();
      }
      if (!advanced) break;
    }
    return reject(dead_end_reason(stuck, cycles), nodes);
  }
};

MultiheadRunner::MultiheadRunner(const MultiheadAutomaton& m) {
  require_valid(m);
  impl_ = std::make_unique<Impl>(m);
}
MultiheadRunner::~MultiheadRunner() = default;
MultiheadRunner::MultiheadRunner(MultiheadRunner&&) noexcept = default;
MultiheadRunner& MultiheadRunner::operator=(MultiheadRunner&&) noexcept = default;

RunResult MultiheadRunner::accepts(const Word& w, const RunOptions& opts) {
  std::vector<int> enc;
  for (const auto& s : w) {
    auto it = impl_->sym_id.find(s);
    if (it == impl_->sym_id.end()) return reject(RunReason::exhausted);
    enc.push_back(it->second);
  }
  return impl_->run(enc, opts, nullptr);
}

int MultiheadRunner::max_applicable(const Word& w, std::size_t node_limit) {
  std::vector<int> enc;
  for (const auto& s : w) {
    auto it = impl_->sym_id.find(s);
    if (it == impl_->sym_id.end()) return 0;
    enc.push_back(it->second);
  }
  RunOptions opts;
  opts.node_limit = node_limit;
  int m = 0;
  impl_->run(enc, opts, &m);
  return m;
}

RunResult multihead_accepts(const MultiheadAutomaton& m, const Word& w, const RunOptions& opts) {
  return MultiheadRunner(m).accepts(w, opts);
}

}  // namespace wkpc
