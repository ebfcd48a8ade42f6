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
// Reference machines. Tuple-shaped state names are flattened with `_`
// separators and `eps` for an empty component, so (q0, b, eps) is `q0_b_eps`.

#pragma once

#include <string>
#include <vector>

#include "wkpc/core.hpp"

namespace wkpc {

/// Three-head automaton over {b, c, #} accepting b^n c^n ... b^n c^n # with
/// n/2 blocks b^n c^n, n even and n > 1.
MultiheadAutomaton build_appendix_m();

/// Three-component single-strand system simulating the three-head automaton
/// above through query states K1, K2, K3.
PCFASystem build_appendix_a_prime();

/// Three-component Watson-Crick system over {a, b, c, #} with
/// rho = {(a,b), (a,c), (a,#)} accepting a^(n*n+1), n even and n > 1.
PCWKSystem build_example1();

/// Deterministic Watson-Crick automaton accepting the block language
/// `# w1 * x1 # w2 * x2 ...` with two blocks sharing w and differing in x.
/// The lower strand labels the two chosen blocks with v_m1 and v_m2 under
/// their `#`, and marks the end of the input.
WKAutomaton build_example2();

/// Two-component system with identity relation accepting {w c w : w in {a,b}*};
/// component 2 starts by querying component 1.
PCWKSystem build_marker_copy();

struct NamedFixture {
  std::string name;       // CLI name, e.g. "appendix-m"
  std::string file_name;  // checked-in file, e.g. "appendix_m.mhdfa"
  Machine machine;
};

std::vector<NamedFixture> all_fixtures();

}  // namespace wkpc
