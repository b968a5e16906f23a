/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sctree/graph.hpp"

namespace sct {

/// Raised by the brute-force and definitional deciders when the input
/// exceeds their vertex limit.
class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EliminationResult {
    bool success = false;
    /// Elimination sequence (a perfect elimination order for the simplicial
    /// variant, a simple elimination order for the simple variant).
    std::vector<std::string> order;
    /// On failure: the residual vertices among which no candidate exists,
    /// label-sorted.
    std::vector<std::string> stuck;
};

/// Repeatedly removes the least-labelled simplicial vertex.  Succeeds iff
/// the graph is chordal.
EliminationResult greedy_simplicial_elimination(const Graph& g);

/// Repeatedly removes the least-labelled simple vertex.  Succeeds iff the
/// graph is strongly chordal.
EliminationResult greedy_simple_elimination(const Graph& g);

struct BruteForceSeo {
    bool found = false;
    std::optional<VertexOrder> order;  // first success in lexicographic permutation order
    unsigned long long permutations_tried = 0;
};

/// Tries every permutation of the label-sorted vertex list against the
/// strong elimination checker.  Exhaustion (permutations_tried == n!) proves
/// the graph is not strongly chordal.  Refuses n > limit with
/// size_limit_error.
BruteForceSeo brute_force_seo(const Graph& g, int limit = 8);

struct DefinitionalCheck {
    bool strongly_chordal = false;
    /// On failure: either a chordless cycle of length >= 4 (chordality
    /// failure) or an even cycle of length >= 6 with no odd-distance chord.
    /// Canonical form: starts at its minimum label, direction toward the
    /// smaller cycle-neighbor of the start.
    std::vector<std::string> offending_cycle;
};

/// Decides strong chordality from the definition: chordal, and every even
/// cycle of length >= 6 has a chord joining two vertices at odd distance
/// along the cycle.  Enumerates all simple cycles; refuses n > limit with
/// size_limit_error.
DefinitionalCheck definitional_strongly_chordal(const Graph& g, int limit = 12);

}  // namespace sct
