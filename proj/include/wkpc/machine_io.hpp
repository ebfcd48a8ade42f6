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
// Line-based machine definition files.
//
//   machine <name> : wk|pcwk|mhdfa|pcfa
//   alphabet <tok>+
//   rho <upper> <lower> [<upper> <lower> ...]     wk, pcwk
//   heads <int>                                   mhdfa
//   deterministic                                 mhdfa, optional
//   query <state> -> <component>                  pcwk, pcfa
//   component <int>                               pcwk, pcfa (1-based, ascending)
//   states <tok>+
//   start <tok>
//   final <tok>*
//   trans <state> <upper>|eps / <lower>|eps -> <state>    wk, pcwk
//   trans <state> [ (<tok>|_)^k ] -> <state>              mhdfa
//   trans <state> <tok>|eps -> <state>                    pcfa
//
// `;` starts a comment. Tokens are runs of [A-Za-z0-9_#*$+.-].

#pragma once

#include <string>
#include <string_view>

#include "wkpc/core.hpp"

namespace wkpc {

enum class MachineKind { wk, pcwk, mhdfa, pcfa };

std::string to_string(MachineKind k);
MachineKind kind_of(const Machine& m);

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

struct MachineDocument {
  MachineKind kind = MachineKind::wk;
  std::string name;
  Machine machine;
};

/// Parses and validates; throws ParseError with a 1-based line number.
MachineDocument parse_machine(std::string_view text);

/// Canonical text: header directives, queries, then components; rules in
/// declaration order. Throws PreconditionError for invalid machines.
std::string serialize_machine(const MachineDocument& doc);

/// Whitespace-separated tokens; `tok^N` stands for N copies of tok. Empty
/// text is the empty word. Throws ParseError on malformed input.
Word expand_word(std::string_view text);

MachineDocument read_machine_file(const std::string& path);
void write_machine_file(const std::string& path, const MachineDocument& doc);

}  // namespace wkpc
