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

#include "sctree/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace sct {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below() needs a positive bound");
    return next() % bound;
}

namespace {

std::string node_name(int i) { return "n" + std::to_string(i); }
std::string vertex_name(int j) { return "v" + std::to_string(j); }

// Random recursive tree on num_nodes nodes: each node's parent is uniform
// over the earlier nodes.  Consumes one draw per non-root node, then one
// more per non-root node for its weight when max_weight > 0 (0 means all
// unit, no draws).
HostTree random_host(int num_nodes, int max_weight, SplitMix64& rng) {
    std::vector<int> parent(static_cast<size_t>(num_nodes) + 1, 0);
    for (int i = 2; i <= num_nodes; ++i)
        parent[static_cast<size_t>(i)] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(i - 1)));
    std::vector<std::int64_t> weight(static_cast<size_t>(num_nodes) + 1, 1);
    if (max_weight > 0)
        for (int i = 2; i <= num_nodes; ++i)
            weight[static_cast<size_t>(i)] =
                1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_weight)));

    std::vector<HostNodeSpec> specs;
    specs.reserve(static_cast<size_t>(num_nodes));
    specs.push_back({node_name(1), std::nullopt, 0});
    for (int i = 2; i <= num_nodes; ++i)
        specs.push_back({node_name(i), node_name(parent[static_cast<size_t>(i)]),
                         weight[static_cast<size_t>(i)]});
    return HostTree(specs);
}

}  // namespace

TreeRepresentation generate_rdv_representation(int num_nodes, int num_vertices,
                                               int max_weight, std::uint64_t seed) {
    if (num_nodes < 1) throw std::invalid_argument("at least one host node required");
    if (num_vertices < 1) throw std::invalid_argument("at least one vertex required");
    if (max_weight < 1) throw std::invalid_argument("max weight must be positive");

    SplitMix64 rng(seed);
    TreeRepresentation r{random_host(num_nodes, max_weight, rng), {}};

    for (int j = 1; j <= num_vertices; ++j) {
        int cur = static_cast<int>(rng.below(static_cast<std::uint64_t>(num_nodes)));
        std::vector<int> members{cur};
        for (;;) {
            const std::vector<int>& kids = r.host.children(cur);
            if (kids.empty()) break;
            if (rng.below(2) == 0) break;
            cur = kids[static_cast<size_t>(rng.below(kids.size()))];
            members.push_back(cur);
        }
        r.assignment.emplace(vertex_name(j), make_subtree_from_indices(r.host, std::move(members)));
    }
    return r;
}

TreeRepresentation generate_random_chordal_representation(int num_nodes, int num_vertices,
                                                          std::uint64_t seed) {
    if (num_nodes < 1) throw std::invalid_argument("at least one host node required");
    if (num_vertices < 1) throw std::invalid_argument("at least one vertex required");

    SplitMix64 rng(seed);
    TreeRepresentation r{random_host(num_nodes, 0, rng), {}};

    std::vector<char> in(static_cast<size_t>(num_nodes), 0);
    std::vector<char> queued(static_cast<size_t>(num_nodes), 0);
    for (int j = 1; j <= num_vertices; ++j) {
        std::fill(in.begin(), in.end(), 0);
        std::fill(queued.begin(), queued.end(), 0);
        int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(num_nodes)));
        int target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(num_nodes)));

        std::vector<int> members{start};
        in[static_cast<size_t>(start)] = 1;
        std::vector<int> frontier;
        auto offer = [&](int node) {
            if (node < 0 || in[static_cast<size_t>(node)] || queued[static_cast<size_t>(node)]) return;
            queued[static_cast<size_t>(node)] = 1;
            frontier.push_back(node);
        };
        auto offer_around = [&](int node) {
            offer(r.host.parent(node));
            for (int c : r.host.children(node)) offer(c);
        };
        offer_around(start);
        while (static_cast<int>(members.size()) < target && !frontier.empty()) {
            size_t at = static_cast<size_t>(rng.below(frontier.size()));
            int node = frontier[at];
            frontier.erase(frontier.begin() + static_cast<long>(at));
            in[static_cast<size_t>(node)] = 1;
            members.push_back(node);
            offer_around(node);
        }
        r.assignment.emplace(vertex_name(j), make_subtree_from_indices(r.host, std::move(members)));
    }
    return r;
}

Graph generate_sun(int k) {
    if (k < 3) throw std::invalid_argument("a sun needs k >= 3");
    std::vector<std::string> vertices;
    for (int i = 1; i <= k; ++i) vertices.push_back("u" + std::to_string(i));
    for (int i = 1; i <= k; ++i) vertices.push_back("w" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            edges.emplace_back("u" + std::to_string(i), "u" + std::to_string(j));
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back("w" + std::to_string(i), "u" + std::to_string(i));
        edges.emplace_back("w" + std::to_string(i), "u" + std::to_string(i % k + 1));
    }
    return Graph(std::move(vertices), edges);
}

}  // namespace sct
