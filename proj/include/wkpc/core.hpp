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
// Machine and input data types shared by every part of the library:
// Watson-Crick automata, parallel communicating systems built from them,
// multihead automata and parallel communicating finite-automata systems.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wkpc {

using Symbol = std::string;
using StateId = std::string;
/// A finite sequence of symbols; the empty vector is the empty word.
using Word = std::vector<Symbol>;
/// One head's read in a multihead or finite-automaton rule. `std::nullopt`
/// is the empty read; it is never an alphabet member.
using Read = std::optional<Symbol>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its domain (invalid machine,
/// non-injective relation where one is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configuration ceiling; the answer is unknown.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

struct Alphabet {
  std::vector<Symbol> symbols;

  bool contains(const Symbol& s) const;
  std::optional<std::size_t> index_of(const Symbol& s) const;
  std::size_t size() const { return symbols.size(); }

  bool operator==(const Alphabet&) const = default;
};

struct ComplementRelation {
  /// (upper, lower) pairs in declaration order.
  std::vector<std::pair<Symbol, Symbol>> pairs;

  bool contains(const Symbol& upper, const Symbol& lower) const;
  ComplementRelation inverse() const;
  static ComplementRelation identity(const Alphabet& alphabet);

  bool operator==(const ComplementRelation&) const = default;
};

/// Every b with (s, b) in the relation, in declaration order.
std::vector<Symbol> rho_complements(const ComplementRelation& rel, const Symbol& s);

/// True iff every upper symbol has at most one complement and every lower
/// symbol at most one pre-image.
bool rho_is_injective(const ComplementRelation& rel);

struct WKRule {
  StateId from;
  Word upper;
  Word lower;
  StateId to;

  bool operator==(const WKRule&) const = default;
};

struct WKAutomaton {
  Alphabet alphabet;
  ComplementRelation rho;
  std::vector<StateId> states;
  StateId start;
  std::vector<StateId> finals;
  std::vector<WKRule> rules;

  bool operator==(const WKAutomaton&) const = default;
};

struct MultiheadRule {
  StateId from;
  std::vector<Read> reads;  // one entry per head
  StateId to;

  bool operator==(const MultiheadRule&) const = default;
};

struct MultiheadAutomaton {
  int heads = 1;
  Alphabet alphabet;
  std::vector<StateId> states;
  StateId start;
  std::vector<StateId> finals;
  std::vector<MultiheadRule> rules;
  bool deterministic_intent = false;

  bool operator==(const MultiheadAutomaton&) const = default;
};

struct FARule {
  StateId from;
  Read read;
  StateId to;

  bool operator==(const FARule&) const = default;
};

struct FAComponent {
  std::vector<StateId> states;
  StateId start;
  std::vector<StateId> finals;
  std::vector<FARule> rules;

  bool operator==(const FAComponent&) const = default;
};

/// Entering `query_state` requests the current state of component `target`
/// (1-based).
struct QueryBinding {
  StateId query_state;
  int target = 1;

  bool operator==(const QueryBinding&) const = default;
};

struct PCFASystem {
  Alphabet alphabet;
  std::vector<FAComponent> components;
  std::vector<QueryBinding> queries;

  bool operator==(const PCFASystem&) const = default;
};

struct PCWKSystem {
  Alphabet alphabet;
  ComplementRelation rho;
  std::vector<WKAutomaton> components;
  std::vector<QueryBinding> queries;

  std::size_t degree() const { return components.size(); }

  /// A single automaton viewed as a system of degree 1 with no queries.
  static PCWKSystem degree_one(const WKAutomaton& m);

  bool operator==(const PCWKSystem&) const = default;
};

using Machine = std::variant<WKAutomaton, PCWKSystem, MultiheadAutomaton, PCFASystem>;

struct Violation {
  std::string field;
  std::string message;
};

std::vector<Violation> validate(const WKAutomaton& m);
std::vector<Violation> validate(const MultiheadAutomaton& m);
std::vector<Violation> validate(const PCFASystem& s);
std::vector<Violation> validate(const PCWKSystem& s);
std::vector<Violation> validate(const Machine& m);

/// Throws PreconditionError naming every violation when `m` is invalid.
void require_valid(const Machine& m);

/// Space-separated tokens; the empty word renders as `eps`.
std::string format_word(const Word& w);

/// The alphabet a machine reads its (upper) input from.
const Alphabet& input_alphabet(const Machine& m);

bool is_valid_symbol_token(const std::string& token);

}  // namespace wkpc
