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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sct {

struct HostNodeSpec {
    std::string id;
    std::optional<std::string> parent;  // nullopt for the root
    std::int64_t weight = 0;            // weight of the arc to the parent; 0 for the root
};

/// A rooted tree with positive integer arc weights.  The depth of a node is
/// the total arc weight on its path to the root; depths are computed once at
/// construction.  Node order is the declaration order, which must list
/// parents before children.
class HostTree {
public:
    /// Requires exactly one root, parents declared before children, unique
    /// ids, and weight >= 1 on every non-root arc (0 on the root).  Violations
    /// raise std::invalid_argument.
    explicit HostTree(const std::vector<HostNodeSpec>& nodes);

    int node_count() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id_of(int index) const { return ids_.at(static_cast<size_t>(index)); }

    /// Throws std::invalid_argument for unknown ids.
    int index_of(const std::string& id) const;
    bool has_node(const std::string& id) const { return index_.count(id) > 0; }

    int parent(int index) const { return parent_.at(static_cast<size_t>(index)); }  // -1 for the root
    std::int64_t arc_weight(int index) const { return weight_.at(static_cast<size_t>(index)); }
    std::int64_t depth(int index) const { return depth_.at(static_cast<size_t>(index)); }
    const std::vector<int>& children(int index) const { return children_.at(static_cast<size_t>(index)); }
    int root() const { return root_; }

    friend bool operator==(const HostTree& a, const HostTree& b);

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<int> parent_;
    std::vector<std::int64_t> weight_;
    std::vector<std::int64_t> depth_;
    std::vector<std::vector<int>> children_;
    int root_ = -1;
};

std::int64_t node_depth(const HostTree& t, const std::string& node);

/// A nonempty connected set of host-tree nodes.  Its root is the unique
/// member of minimum depth (every other member is a descendant of it).
/// Member indices refer to the host tree the subtree was built against.
class Subtree {
public:
    Subtree() = default;

    const std::vector<int>& members() const { return members_; }  // sorted ascending
    int root() const { return root_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int node_index) const;

    friend bool operator==(const Subtree& a, const Subtree& b) {
        return a.root_ == b.root_ && a.members_ == b.members_;
    }

private:
    friend Subtree make_subtree_from_indices(const HostTree&, std::vector<int>);
    std::vector<int> members_;
    int root_ = -1;
};

struct SubtreeValidation {
    bool valid = false;
    std::optional<std::string> root;  // minimum-depth member, set when valid
    std::string reason;               // set when invalid
};

/// True iff the node set is nonempty and connected in the host tree.
SubtreeValidation is_valid_subtree(const HostTree& t, const std::vector<std::string>& nodes);

/// Builds a Subtree, raising std::invalid_argument when is_valid_subtree fails.
Subtree make_subtree(const HostTree& t, const std::vector<std::string>& nodes);
Subtree make_subtree_from_indices(const HostTree& t, std::vector<int> nodes);

/// Outcome of the overshadow test T1 >= T2 ("T1 overshadows T2"): every node
/// of T2 \ T1 must lie strictly deeper than every node of T1 n T2.  Disjoint
/// subtrees overshadow each other vacuously.
struct OvershadowVerdict {
    bool holds = false;
    bool disjoint = false;
    /// Maximum depth over T1 n T2; absent when disjoint.
    std::optional<std::int64_t> cutoff;
    /// A node of T2 \ T1 no deeper than the cutoff; present iff the test
    /// fails.  Deterministic pick: minimum depth, then minimum node id.
    std::optional<std::string> witness;
};

/// Runs in O(|T1| + |T2|) set work plus one membership bitmap over the
/// host's nodes.  Both subtrees must belong to t.
OvershadowVerdict overshadows(const HostTree& t, const Subtree& t1, const Subtree& t2);

struct PairCompatibility {
    bool forward = false;   // T1 overshadows T2
    bool backward = false;  // T2 overshadows T1
    bool compatible() const { return forward || backward; }
};

/// A pair is compatible when at least one direction overshadows.
PairCompatibility compatible_pair(const HostTree& t, const Subtree& t1, const Subtree& t2);

}  // namespace sct
