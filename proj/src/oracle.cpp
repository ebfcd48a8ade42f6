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

#include "wkpc/oracle.hpp"

#include <algorithm>
#include <string>

namespace wkpc {

WordEnumerator::WordEnumerator(Alphabet alphabet, std::size_t max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len) {}

bool WordEnumerator::next(Word& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    bool carried = true;
    for (std::size_t i = digits_.size(); i > 0 && carried; --i) {
      carried = ++digits_[i - 1] == alphabet_.size();
      if (carried) digits_[i - 1] = 0;
    }
    if (carried) {
      if (digits_.size() == max_len_ || alphabet_.size() == 0) {
        done_ = true;
        return false;
      }
      digits_.assign(digits_.size() + 1, 0);
    }
  }
  out.resize(digits_.size());
  for (std::size_t i = 0; i < digits_.size(); ++i) out[i] = alphabet_.symbols[digits_[i]];
  return true;
}

ComplementStrands::ComplementStrands(const ComplementRelation& rel, const Alphabet& alphabet, const Word& upper) {
  init(rel, &alphabet, upper);
}

ComplementStrands::ComplementStrands(const ComplementRelation& rel, const Word& upper) {
  init(rel, nullptr, upper);
}

void ComplementStrands::init(const ComplementRelation& rel, const Alphabet* alphabet, const Word& upper) {
  for (const auto& s : upper) {
    auto c = rho_complements(rel, s);
    if (alphabet) {
      std::stable_sort(c.begin(), c.end(), [&](const Symbol& x, const Symbol& y) {
        return alphabet->index_of(x).value_or(alphabet->size()) < alphabet->index_of(y).value_or(alphabet->size());
      });
    }
    if (c.empty()) done_ = true;
    choices_.push_back(std::move(c));
  }
  digits_.assign(upper.size(), 0);
}

std::size_t ComplementStrands::count() const {
  std::size_t n = 1;
  for (const auto& c : choices_) n *= c.size();
  return n;
}

bool ComplementStrands::next(Word& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    std::size_t i = digits_.size();
    while (true) {
      if (i == 0) {
        done_ = true;
        return false;
      }
      --i;
      if (++digits_[i] < choices_[i].size()) break;
      digits_[i] = 0;
    }
  }
  out.resize(digits_.size());
  for (std::size_t i = 0; i < digits_.size(); ++i) out[i] = choices_[i][digits_[i]];
  return true;
}

std::vector<Word> complement_strands(const ComplementRelation& rel, const Word& upper) {
  std::vector<Word> out;
  ComplementStrands it(rel, upper);
  Word w;
  while (it.next(w)) out.push_back(w);
  return out;
}

struct Acceptor::Impl {
  std::optional<PCWKRunner> pc;
  std::optional<MultiheadRunner> mh;
};

Acceptor::Acceptor(const Machine& m) : impl_(std::make_unique<Impl>()) {
  if (const auto* wk = std::get_if<WKAutomaton>(&m)) {
    impl_->pc.emplace(PCWKSystem::degree_one(*wk));
  } else if (const auto* s = std::get_if<PCWKSystem>(&m)) {
    impl_->pc.emplace(*s);
  } else if (const auto* f = std::get_if<PCFASystem>(&m)) {
    impl_->pc.emplace(*f);
  } else {
    impl_->mh.emplace(std::get<MultiheadAutomaton>(m));
  }
}
Acceptor::~Acceptor() = default;
Acceptor::Acceptor(Acceptor&&) noexcept = default;
Acceptor& Acceptor::operator=(Acceptor&&) noexcept = default;

bool Acceptor::accepts(const Word& w, std::size_t node_limit) {
  RunOptions opts;
  opts.node_limit = node_limit;
  const RunResult r = impl_->pc ? impl_->pc->accepts(w, opts) : impl_->mh->accepts(w, opts);
  if (r.reason == RunReason::resource_limit)
    throw ResourceLimitError("search ceiling exceeded on input '" + format_word(w) + "'");
  return r.accepted;
}

std::vector<Word> enumerate_accepted(const Machine& m, const Alphabet& alphabet, int max_len,
                                     std::size_t node_limit) {
  if (max_len < 0) throw PreconditionError("max length must be non-negative");
  Acceptor acc(m);
  std::vector<Word> out;
  WordEnumerator words(alphabet, static_cast<std::size_t>(max_len));
  Word w;
  while (words.next(w))
    if (acc.accepts(w, node_limit)) out.push_back(w);
  return out;
}

EquivalenceReport equivalent_up_to(const Machine& a, const Machine& b, const Alphabet& alphabet, int max_len,
                                   std::size_t node_limit) {
  if (max_len < 0) throw PreconditionError("max length must be non-negative");
  Acceptor acc_a(a), acc_b(b);
  EquivalenceReport r;
  r.bound = max_len;
  r.counts_a.assign(static_cast<std::size_t>(max_len) + 1, 0);
  r.counts_b.assign(static_cast<std::size_t>(max_len) + 1, 0);
  WordEnumerator words(alphabet, static_cast<std::size_t>(max_len));
  Word w;
  while (words.next(w)) {
    const bool in_a = acc_a.accepts(w, node_limit);
    const bool in_b = acc_b.accepts(w, node_limit);
    r.counts_a[w.size()] += in_a ? 1 : 0;
    r.counts_b[w.size()] += in_b ? 1 : 0;
    if (in_a != in_b && !r.counterexample) {
      r.equal = false;
      r.counterexample = w;
    }
  }
  return r;
}

bool semantic_example2_member(const Word& w) {
  if (w.empty() || w.front() != "#") return false;
  std::vector<std::pair<Word, Word>> blocks;
  for (std::size_t i = 0; i < w.size();) {
    // w[i] == "#"
    Word left, right;
    bool star = false;
    std::size_t j = i + 1;
    for (; j < w.size() && w[j] != "#"; ++j) {
      if (w[j] == "*") {
        if (star) return false;
        star = true;
      } else if (w[j] == "a" || w[j] == "b") {
        (star ? right : left).push_back(w[j]);
      } else {
        return false;
      }
    }
    if (!star) return false;
    blocks.emplace_back(std::move(left), std::move(right));
    i = j;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (blocks[i].first == blocks[j].first && blocks[i].second != blocks[j].second) return true;
  return false;
}

bool semantic_square_member(const Word& w) {
  if (!std::all_of(w.begin(), w.end(), [](const Symbol& s) { return s == "a"; })) return false;
  const std::size_t k = w.size();
  for (std::size_t n = 2; n * n + 1 <= k; n += 2)
    if (n * n + 1 == k) return true;
  return false;
}

}  // namespace wkpc
