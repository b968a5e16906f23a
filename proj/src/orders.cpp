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

#include "sctree/orders.hpp"

#include <algorithm>

namespace sct {

namespace {

struct Positioned {
    int n = 0;
    std::vector<int> vertex_at;                // 1-based position -> graph index
    std::vector<int> pos_of;                   // graph index -> 1-based position
    std::vector<std::vector<int>> nbr_pos;     // per position: neighbor positions, ascending

    Positioned(const Graph& g, const VertexOrder& o) {
        if (!o.is_permutation_of(g))
            throw std::invalid_argument("order is not a permutation of the graph's vertex set");
        n = g.vertex_count();
        vertex_at.assign(static_cast<size_t>(n) + 1, -1);
        pos_of.assign(static_cast<size_t>(n), 0);
        for (int p = 1; p <= n; ++p) {
            int idx = g.index_of(o.at(p));
            vertex_at[static_cast<size_t>(p)] = idx;
            pos_of[static_cast<size_t>(idx)] = p;
        }
        nbr_pos.assign(static_cast<size_t>(n) + 1, {});
        for (int p = 1; p <= n; ++p) {
            for (int u : g.neighbors_of(vertex_at[static_cast<size_t>(p)]))
                nbr_pos[static_cast<size_t>(p)].push_back(pos_of[static_cast<size_t>(u)]);
            std::sort(nbr_pos[static_cast<size_t>(p)].begin(), nbr_pos[static_cast<size_t>(p)].end());
        }
    }

    bool adjacent(int p, int q) const {
        const auto& row = nbr_pos[static_cast<size_t>(p)];
        return std::binary_search(row.begin(), row.end(), q);
    }
    bool closed(int p, int q) const { return p == q || adjacent(p, q); }
};

}  // namespace

SeoCheck is_strong_elimination_order(const Graph& g, const VertexOrder& o) {
    Positioned ctx(g, o);
    SeoCheck out;
    for (int i = 1; i <= ctx.n; ++i) {
        // Closed-neighborhood positions of v_i: the only legal k and l.
        std::vector<int> A = ctx.nbr_pos[static_cast<size_t>(i)];
        A.push_back(i);
        std::sort(A.begin(), A.end());
        // Violations at this i are few; gather them all and keep the least
        // (j,k,l) so the reported quadruple is lexicographically least.
        bool have = false;
        std::array<int, 3> best{};
        for (size_t ak = 0; ak < A.size(); ++ak) {
            int k = A[ak];
            std::vector<int> J = ctx.nbr_pos[static_cast<size_t>(k)];
            J.push_back(k);  // v_k lies in its own closed neighborhood
            for (size_t al = ak + 1; al < A.size(); ++al) {
                int l = A[al];
                for (int j : J) {
                    if (j <= i) continue;
                    if (ctx.closed(j, l)) continue;
                    std::array<int, 3> cand{j, k, l};
                    if (!have || cand < best) {
                        best = cand;
                        have = true;
                    }
                }
            }
        }
        if (have) {
            out.valid = false;
            out.violation = {i, best[0], best[1], best[2]};
            return out;
        }
    }
    out.valid = true;
    return out;
}

PeoCheck is_perfect_elimination_order(const Graph& g, const VertexOrder& o) {
    Positioned ctx(g, o);
    PeoCheck out;
    for (int i = 1; i <= ctx.n; ++i) {
        const auto& nbrs = ctx.nbr_pos[static_cast<size_t>(i)];
        auto first_later = std::upper_bound(nbrs.begin(), nbrs.end(), i);
        for (auto p = first_later; p != nbrs.end(); ++p) {
            for (auto q = std::next(p); q != nbrs.end(); ++q) {
                if (!ctx.adjacent(*p, *q)) {
                    out.valid = false;
                    out.position = i;
                    out.non_adjacent = {o.at(*p), o.at(*q)};
                    return out;
                }
            }
        }
    }
    out.valid = true;
    return out;
}

namespace {

// Shared layout of both constructions: v_n is the root and every earlier
// vertex hangs under its first strict successor neighbor.  A vertex without
// one is the last of its component and defaults to v_n.
TreeRepresentation build_elimination_tree(const Graph& g, const VertexOrder& o, bool unit_weights) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("empty graph has no tree representation");
    Positioned ctx(g, o);
    int n = ctx.n;

    std::vector<HostNodeSpec> specs;
    specs.reserve(static_cast<size_t>(n));
    specs.push_back({o.at(n), std::nullopt, 0});
    for (int j = n - 1; j >= 1; --j) {
        const auto& nbrs = ctx.nbr_pos[static_cast<size_t>(j)];
        auto it = std::upper_bound(nbrs.begin(), nbrs.end(), j);
        int k = it == nbrs.end() ? n : *it;
        specs.push_back({o.at(j), o.at(k), unit_weights ? 1 : static_cast<std::int64_t>(k - j)});
    }
    HostTree host(specs);

    TreeRepresentation r{std::move(host), {}};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::string> members{o.at(k)};
        const auto& nbrs = ctx.nbr_pos[static_cast<size_t>(k)];
        for (auto it = nbrs.begin(); it != std::lower_bound(nbrs.begin(), nbrs.end(), k); ++it)
            members.push_back(o.at(*it));
        r.assignment.emplace(o.at(k), make_subtree(r.host, members));
    }
    return r;
}

}  // namespace

TreeRepresentation seo_to_representation(const Graph& g, const VertexOrder& o, bool validate) {
    if (!validate) return build_elimination_tree(g, o, /*unit_weights=*/false);
    auto check = is_strong_elimination_order(g, o);
    if (!check.valid) {
        const auto& q = *check.violation;
        throw invalid_order_error("not a strong elimination order (violating quadruple " +
                                      std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                                      std::to_string(q[2]) + "," + std::to_string(q[3]) + ")",
                                  q);
    }
    return build_elimination_tree(g, o, /*unit_weights=*/false);
}

TreeRepresentation peo_to_representation(const Graph& g, const VertexOrder& o, bool validate) {
    if (!validate) return build_elimination_tree(g, o, /*unit_weights=*/true);
    auto check = is_perfect_elimination_order(g, o);
    if (!check.valid) {
        throw invalid_order_error(
            "not a perfect elimination order (position " + std::to_string(*check.position) +
                ", non-adjacent later neighbors " + check.non_adjacent->first + "," +
                check.non_adjacent->second + ")",
            *check.position, *check.non_adjacent);
    }
    return build_elimination_tree(g, o, /*unit_weights=*/true);
}

}  // namespace sct
