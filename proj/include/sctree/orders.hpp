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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sctree/graph.hpp"
#include "sctree/representation.hpp"

namespace sct {

struct SeoCheck {
    bool valid = false;
    /// Lexicographically least violating position quadruple (i,j,k,l):
    /// i < j, k < l, v_k and v_l lie in N[v_i], v_k lies in N[v_j], but v_l
    /// does not lie in N[v_j].  Positions are 1-based.
    std::optional<std::array<int, 4>> violation;
};

/// Strong elimination order test, straight from the quadruple definition but
/// with k,l restricted to N[v_i] and j to N[v_k] (every violation satisfies
/// those memberships).  O(sum_i deg(v_i)^2 * Delta); meant for validation
/// duty, not the linear-time pipeline.  Throws std::invalid_argument when o
/// is not a permutation of g's vertices.
SeoCheck is_strong_elimination_order(const Graph& g, const VertexOrder& o);

struct PeoCheck {
    bool valid = false;
    std::optional<int> position;  // least 1-based i whose vertex fails
    /// Two later neighbors of v_i that are non-adjacent, in position order.
    std::optional<std::pair<std::string, std::string>> non_adjacent;
};

/// Perfect elimination order test: each vertex must be simplicial among the
/// vertices at its position or later.
PeoCheck is_perfect_elimination_order(const Graph& g, const VertexOrder& o);

/// Raised when a construction receives an order failing its elimination
/// precondition.  Carries the checker's certificate.
class invalid_order_error : public std::runtime_error {
public:
    invalid_order_error(const std::string& message, std::array<int, 4> quadruple)
        : std::runtime_error(message), quadruple_(quadruple) {}
    invalid_order_error(const std::string& message, int position,
                        std::pair<std::string, std::string> non_adjacent)
        : std::runtime_error(message), position_(position), non_adjacent_(std::move(non_adjacent)) {}

    const std::optional<std::array<int, 4>>& quadruple() const { return quadruple_; }
    const std::optional<int>& position() const { return position_; }
    const std::optional<std::pair<std::string, std::string>>& non_adjacent() const { return non_adjacent_; }

private:
    std::optional<std::array<int, 4>> quadruple_;
    std::optional<int> position_;
    std::optional<std::pair<std::string, std::string>> non_adjacent_;
};

/// Builds the weighted representation determined by a strong elimination
/// order v_1..v_n: v_n is the root; each earlier v_j hangs under its first
/// strict successor neighbor v_k (k := n when none exists) with arc weight
/// k - j, so depth(v_j) = n - j; the subtree of v_k consists of the members
/// of N[v_k] with position <= k.  The output has exactly n nodes, reproduces
/// g as its intersection graph, and satisfies "T(v_l) overshadows T(v_k)"
/// for every l > k.  Rejects non-SEO orders with invalid_order_error and
/// empty graphs with std::invalid_argument.  The construction itself is
/// O(n + m); the precondition check is not, so validate = false skips it for
/// orders already known valid (e.g. freshly extracted ones).
TreeRepresentation seo_to_representation(const Graph& g, const VertexOrder& o,
                                         bool validate = true);

/// Unit-weight analogue for perfect elimination orders: same parent rule
/// with every arc weight 1.  A vertex with no later neighbor is the last of
/// its component and hangs under v_n directly (weight 1), which joins the
/// components' trees.  Reproduces g as its intersection graph; positions
/// strictly increase along every path to the root.
TreeRepresentation peo_to_representation(const Graph& g, const VertexOrder& o,
                                         bool validate = true);

}  // namespace sct
