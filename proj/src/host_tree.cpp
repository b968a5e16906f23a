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

#include "sctree/host_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace sct {

HostTree::HostTree(const std::vector<HostNodeSpec>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("host tree needs at least one node");
    ids_.reserve(nodes.size());
    parent_.reserve(nodes.size());
    weight_.reserve(nodes.size());
    depth_.reserve(nodes.size());
    children_.assign(nodes.size(), {});
    for (const auto& spec : nodes) {
        int idx = static_cast<int>(ids_.size());
        if (!index_.emplace(spec.id, idx).second)
            throw std::invalid_argument("duplicate node id '" + spec.id + "'");
        ids_.push_back(spec.id);
        if (!spec.parent) {
            if (root_ >= 0)
                throw std::invalid_argument("multiple roots ('" + ids_[static_cast<size_t>(root_)] +
                                            "' and '" + spec.id + "')");
            root_ = idx;
            parent_.push_back(-1);
            weight_.push_back(0);
            depth_.push_back(0);
        } else {
            auto it = index_.find(*spec.parent);
            if (it == index_.end() || it->second == idx)
                throw std::invalid_argument("node '" + spec.id + "' declared before its parent '" +
                                            *spec.parent + "'");
            if (spec.weight < 1)
                throw std::invalid_argument("nonpositive arc weight on node '" + spec.id + "'");
            parent_.push_back(it->second);
            weight_.push_back(spec.weight);
            depth_.push_back(depth_[static_cast<size_t>(it->second)] + spec.weight);
            children_[static_cast<size_t>(it->second)].push_back(idx);
        }
    }
    if (root_ < 0) throw std::invalid_argument("host tree has no root");
}

int HostTree::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown node '" + id + "'");
    return it->second;
}

bool operator==(const HostTree& a, const HostTree& b) {
    return a.ids_ == b.ids_ && a.parent_ == b.parent_ && a.weight_ == b.weight_;
}

std::int64_t node_depth(const HostTree& t, const std::string& node) {
    return t.depth(t.index_of(node));
}

bool Subtree::contains(int node_index) const {
    return std::binary_search(members_.begin(), members_.end(), node_index);
}

SubtreeValidation is_valid_subtree(const HostTree& t, const std::vector<std::string>& nodes) {
    SubtreeValidation out;
    if (nodes.empty()) {
        out.reason = "empty subtree";
        return out;
    }
    std::vector<int> idx;
    idx.reserve(nodes.size());
    for (const auto& id : nodes) {
        if (!t.has_node(id)) {
            out.reason = "unknown node '" + id + "'";
            return out;
        }
        idx.push_back(t.index_of(id));
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
        out.reason = "duplicate member";
        return out;
    }
    auto inside = [&](int i) { return std::binary_search(idx.begin(), idx.end(), i); };
    // A node set is connected in a tree iff exactly one member's parent
    // falls outside the set; that member is the unique minimum-depth one.
    int root = -1;
    for (int i : idx) {
        int p = t.parent(i);
        if (p < 0 || !inside(p)) {
            if (root >= 0) {
                out.reason = "subtree not connected";
                return out;
            }
            root = i;
        }
    }
    out.valid = true;
    out.root = t.id_of(root);
    return out;
}

Subtree make_subtree(const HostTree& t, const std::vector<std::string>& nodes) {
    auto check = is_valid_subtree(t, nodes);
    if (!check.valid) throw std::invalid_argument("invalid subtree: " + check.reason);
    std::vector<int> idx;
    idx.reserve(nodes.size());
    for (const auto& id : nodes) idx.push_back(t.index_of(id));
    return make_subtree_from_indices(t, std::move(idx));
}

Subtree make_subtree_from_indices(const HostTree& t, std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    Subtree s;
    s.members_ = std::move(nodes);
    int best = -1;
    for (int i : s.members_)
        if (best < 0 || t.depth(i) < t.depth(best)) best = i;
    s.root_ = best;
    return s;
}

OvershadowVerdict overshadows(const HostTree& t, const Subtree& t1, const Subtree& t2) {
    std::vector<char> in1(static_cast<size_t>(t.node_count()), 0);
    for (int m : t1.members()) in1[static_cast<size_t>(m)] = 1;

    OvershadowVerdict v;
    bool any_shared = false;
    std::int64_t cutoff = 0;
    for (int m : t2.members()) {
        if (in1[static_cast<size_t>(m)]) {
            std::int64_t d = t.depth(m);
            if (!any_shared || d > cutoff) cutoff = d;
            any_shared = true;
        }
    }
    if (!any_shared) {
        v.holds = true;
        v.disjoint = true;
        return v;
    }
    v.cutoff = cutoff;
    int witness = -1;
    for (int m : t2.members()) {
        if (in1[static_cast<size_t>(m)]) continue;
        std::int64_t d = t.depth(m);
        if (d > cutoff) continue;
        if (witness < 0 || d < t.depth(witness) ||
            (d == t.depth(witness) && t.id_of(m) < t.id_of(witness)))
            witness = m;
    }
    if (witness >= 0) {
        v.holds = false;
        v.witness = t.id_of(witness);
    } else {
        v.holds = true;
    }
    return v;
}

PairCompatibility compatible_pair(const HostTree& t, const Subtree& t1, const Subtree& t2) {
    PairCompatibility out;
    out.forward = overshadows(t, t1, t2).holds;
    out.backward = overshadows(t, t2, t1).holds;
    return out;
}

}  // namespace sct
