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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sctree/graph.hpp"
#include "sctree/host_tree.hpp"

namespace sct {

/// A host tree together with one subtree per vertex label.  Two vertices of
/// the intersection graph are adjacent iff their subtrees share a node.
struct TreeRepresentation {
    HostTree host;
    std::map<std::string, Subtree> assignment;  // label -> subtree, label-sorted

    int vertex_count() const { return static_cast<int>(assignment.size()); }
    const Subtree& subtree(const std::string& vertex) const;
    std::vector<std::string> vertex_labels() const;

    friend bool operator==(const TreeRepresentation& a, const TreeRepresentation& b);
};

/// Graph on the representation's vertex labels with an edge per intersecting
/// subtree pair.  Cost is sum over host nodes of (#subtrees through the
/// node)^2; vertices come out label-sorted.
Graph intersection_graph(const TreeRepresentation& r);

struct CompatibilityCheck {
    bool compatible = false;
    /// Lexicographically least vertex pair with neither subtree
    /// overshadowing the other; set iff incompatible.
    std::optional<std::pair<std::string, std::string>> incompatible_pair;
};

/// A representation is compatible when every subtree pair is.
CompatibilityCheck is_compatible_representation(const TreeRepresentation& r);

/// All incompatible vertex pairs, lexicographically sorted.  Desk-scale
/// O(n^2) scan; used by validation and the subdivision report.
std::vector<std::pair<std::string, std::string>> incompatible_pairs(const TreeRepresentation& r);

/// True when every assigned subtree is a downward path (no member has two
/// children inside the subtree).
bool is_rdv(const TreeRepresentation& r);

/// Vertices sorted by decreasing subtree-root depth, ties by label.
VertexOrder bottom_up_order(const TreeRepresentation& r);

enum class SubdivisionPolicy {
    extend_none,  // fresh nodes join only subtrees containing both arc endpoints
    extend_all,   // ... plus every subtree containing the arc's upper endpoint
};

struct SubdivisionReport {
    TreeRepresentation result;
    bool intersection_preserved = false;  // re-checked, not assumed
    bool compatible = false;
    std::vector<std::pair<std::string, std::string>> incompatible;  // all pairs, sorted
};

/// Replaces every arc of weight k > 1 by a chain of k unit arcs through
/// fresh nodes "<upper>-<lower>-<1..k-1>" (the i-th chain node lies at depth
/// depth(upper)+i).  Subtrees containing both arc endpoints always absorb
/// the chain; the policy decides what else does.  Node depths of surviving
/// original nodes are unchanged.  An all-unit-weight input comes back
/// identical under either policy.
SubdivisionReport subdivide_unit_weights(const TreeRepresentation& r, SubdivisionPolicy policy);

/// Reads the representation file format:
///
///     c <comment>                         (anywhere)
///     t <num_nodes> <num_vertices>
///     node <id> <parent-id|-> <weight>    (parents before children; root "- 0")
///     sub <vertex-label> <node-id> ...    (member list; any order accepted)
///
/// Rejects orphan nodes, parents declared after children, nonpositive arc
/// weights, duplicate ids/labels, count mismatches and disconnected member
/// sets with parse_error naming the offending line.
TreeRepresentation parse_representation(std::string_view text);

/// Canonical serialization: node lines in declaration order, sub lines
/// label-sorted with the subtree root first and the remaining member ids
/// sorted ascending.  parse_representation(serialize_representation(r)) == r.
std::string serialize_representation(const TreeRepresentation& r);

}  // namespace sct
