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
#include <string>
#include <utility>
#include <vector>

#include "sctree/graph.hpp"
#include "sctree/representation.hpp"

namespace sct {

/// Directed graph over the representation's vertices with an arc v -> w for
/// every intersection-graph edge (v,w) whose subtree T(v) fails to
/// overshadow T(w).  Acyclic iff the representation admits a strong
/// elimination order among its bottom-up enumerations.
struct OvershadowDigraph {
    std::vector<std::string> vertices;       // label-sorted
    std::vector<std::vector<int>> out_arcs;  // ascending target indices

    int index_of(const std::string& v) const;
    bool has_arc(const std::string& from, const std::string& to) const;
    std::vector<std::pair<std::string, std::string>> arc_list() const;  // sorted
    int arc_count() const;
};

/// g must equal intersection_graph(r); vertex-set mismatches and edges whose
/// subtrees are disjoint are rejected (missing edges are the caller's
/// responsibility and are not detected).  One merge pass over the sorted
/// member lists per edge: O(n + m + sum of subtree sizes over edges).
OvershadowDigraph build_overshadow_digraph(const TreeRepresentation& r, const Graph& g);

struct ExtractionResult {
    std::optional<VertexOrder> order;
    /// Set iff extraction failed: a directed cycle of the overshadow
    /// digraph, starting at its minimum label; consecutive elements carry an
    /// arc and the last element has an arc back to the first.  At least one
    /// consecutive pair on it is genuinely incompatible.
    std::vector<std::string> cycle;

    bool succeeded() const { return order.has_value(); }
};

/// Computes the intersection graph, builds the overshadow digraph and runs
/// cycle-detecting topological sort.  A cycle proves the representation
/// incompatible and is returned as the certificate.  Otherwise the returned
/// order is a strong elimination order of the intersection graph; ties are
/// broken deterministically by picking, among available vertices, the one
/// with the deepest subtree root, then the least label, which also keeps the
/// output a bottom-up enumeration order.  For order-derived representations
/// (|T(v)| <= deg(v)+1) the cost is O(n + m) plus an O(n log n) tie-break
/// sort; for arbitrary hosts it is O(n + m + sum of subtree sizes over
/// edges).
ExtractionResult extract_strong_elimination_order(const TreeRepresentation& r);

/// Vertex whose subtree root is deepest (ties by label).  In a compatible
/// representation this vertex is simple in the intersection graph.
/// Compatibility is a precondition checked in debug builds only; an empty
/// representation raises std::invalid_argument.
std::string deepest_root_vertex(const TreeRepresentation& r);

}  // namespace sct
