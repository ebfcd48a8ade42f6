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
//
// Brute-force ground truth: word and strand enumeration, bounded language
// enumeration and equivalence, and direct membership tests for two
// characterized languages.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "wkpc/core.hpp"
#include "wkpc/engine.hpp"

namespace wkpc {

/// All words over `alphabet` of length 0..max_len, length-then-lex in the
/// alphabet's declared order.
class WordEnumerator {
 public:
  WordEnumerator(Alphabet alphabet, std::size_t max_len);
  bool next(Word& out);

 private:
  Alphabet alphabet_;
  std::size_t max_len_;
  std::vector<std::size_t> digits_;
  bool started_ = false;
  bool done_ = false;
};

/// Every lower strand compatible with `upper`, lexicographic in the order of
/// `alphabet` (the relation's declared order when no alphabet is given).
class ComplementStrands {
 public:
  ComplementStrands(const ComplementRelation& rel, const Alphabet& alphabet, const Word& upper);
  ComplementStrands(const ComplementRelation& rel, const Word& upper);
  bool next(Word& out);
  /// Product of the per-position choice counts.
  std::size_t count() const;

 private:
  void init(const ComplementRelation& rel, const Alphabet* alphabet, const Word& upper);
  std::vector<std::vector<Symbol>> choices_;
  std::vector<std::size_t> digits_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> complement_strands(const ComplementRelation& rel, const Word& upper);

/// Membership by the engine matching the machine's kind; compiled once.
class Acceptor {
 public:
  explicit Acceptor(const Machine& m);
  ~Acceptor();
  Acceptor(Acceptor&&) noexcept;
  Acceptor& operator=(Acceptor&&) noexcept;

  /// Throws ResourceLimitError when the search hits its ceiling.
  bool accepts(const Word& w, std::size_t node_limit = 0);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<Word> enumerate_accepted(const Machine& m, const Alphabet& alphabet, int max_len,
                                     std::size_t node_limit = 0);

struct EquivalenceReport {
  bool equal = true;
  int bound = 0;
  std::optional<Word> counterexample;
  std::vector<std::size_t> counts_a;  // accepted words per length
  std::vector<std::size_t> counts_b;
};

EquivalenceReport equivalent_up_to(const Machine& a, const Machine& b, const Alphabet& alphabet, int max_len,
                                   std::size_t node_limit = 0);

/// Words `# w1 * x1 # w2 * x2 ...` with wi, xi over {a, b} and some i != j
/// having wi = wj and xi != xj.
bool semantic_example2_member(const Word& w);

/// Words a^k with k = n*n + 1 for an even n > 1.
bool semantic_square_member(const Word& w);

}  // namespace wkpc
