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

#include "sctree/recognition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "sctree/orders.hpp"

namespace sct {

namespace {

// Shared skeleton of the two greedy eliminations.  Each round rebuilds the
// residual induced subgraph and removes the least-labelled vertex passing
// `candidate` on it, so the test applied is exactly the public predicate.
EliminationResult greedy_elimination(
    const Graph& g, const std::function<bool(const Graph&, const std::string&)>& candidate) {
    EliminationResult res;
    std::vector<std::string> alive = g.vertices();
    std::sort(alive.begin(), alive.end());
    while (!alive.empty()) {
        Graph live = induced_subgraph(g, alive);
        auto pick = alive.end();
        for (auto it = alive.begin(); it != alive.end(); ++it) {
            if (candidate(live, *it)) {
                pick = it;
                break;
            }
        }
        if (pick == alive.end()) {
            res.stuck = std::move(alive);
            return res;
        }
        res.order.push_back(*pick);
        alive.erase(pick);
    }
    res.success = true;
    return res;
}

// Enumerates every simple cycle exactly once, as label sequences starting at
// the cycle's least label and directed toward its smaller neighbor.  Starts
// are tried in label order and paths extend in label order, so the visit
// sequence is deterministic.  `visit` returns true to stop early.
void enumerate_cycles(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit) {
    int n = g.vertex_count();
    std::vector<int> by_label(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) by_label[static_cast<size_t>(i)] = i;
    std::sort(by_label.begin(), by_label.end(),
              [&](int a, int b) { return g.label_of(a) < g.label_of(b); });
    std::vector<int> rank(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) rank[static_cast<size_t>(by_label[static_cast<size_t>(r)])] = r;
    std::vector<std::vector<int>> nbr(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        nbr[static_cast<size_t>(v)] = g.neighbors_of(v);
        std::sort(nbr[static_cast<size_t>(v)].begin(), nbr[static_cast<size_t>(v)].end(),
                  [&](int a, int b) { return rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(b)]; });
    }

    std::vector<int> path;
    std::vector<char> on_path(static_cast<size_t>(n), 0);
    bool stopped = false;
    std::function<void(int)> extend = [&](int s) {
        if (stopped) return;
        int u = path.back();
        for (int w : nbr[static_cast<size_t>(u)]) {
            if (stopped) return;
            if (w == s) {
                // Close only in one direction per cycle.
                if (path.size() >= 3 &&
                    rank[static_cast<size_t>(path[1])] < rank[static_cast<size_t>(path.back())] &&
                    visit(path)) {
                    stopped = true;
                    return;
                }
                continue;
            }
            if (rank[static_cast<size_t>(w)] <= rank[static_cast<size_t>(s)] ||
                on_path[static_cast<size_t>(w)])
                continue;
            on_path[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            extend(s);
            path.pop_back();
            on_path[static_cast<size_t>(w)] = 0;
        }
    };
    for (int r = 0; r < n && !stopped; ++r) {
        int s = by_label[static_cast<size_t>(r)];
        path.assign(1, s);
        on_path[static_cast<size_t>(s)] = 1;
        extend(s);
        on_path[static_cast<size_t>(s)] = 0;
    }
}

bool has_chord_with_parity(const Graph& g, const std::vector<int>& cyc, bool odd_only) {
    int len = static_cast<int>(cyc.size());
    for (int p = 0; p < len; ++p) {
        for (int q = p + 2; q < len; ++q) {
            if (p == 0 && q == len - 1) continue;  // cycle edge, not a chord
            if (odd_only && (q - p) % 2 == 0) continue;
            if (g.adjacent_indices(cyc[static_cast<size_t>(p)], cyc[static_cast<size_t>(q)]))
                return true;
        }
    }
    return false;
}

std::vector<std::string> cycle_labels(const Graph& g, const std::vector<int>& cyc) {
    std::vector<std::string> out;
    out.reserve(cyc.size());
    for (int v : cyc) out.push_back(g.label_of(v));
    return out;
}

}  // namespace

EliminationResult greedy_simplicial_elimination(const Graph& g) {
    return greedy_elimination(
        g, [](const Graph& live, const std::string& v) { return is_simplicial_vertex(live, v).simplicial; });
}

EliminationResult greedy_simple_elimination(const Graph& g) {
    return greedy_elimination(
        g, [](const Graph& live, const std::string& v) { return is_simple_vertex(live, v).simple; });
}

BruteForceSeo brute_force_seo(const Graph& g, int limit) {
    if (g.vertex_count() > limit)
        throw size_limit_error("graph has " + std::to_string(g.vertex_count()) +
                               " vertices; the brute-force decider accepts at most " +
                               std::to_string(limit));
    std::vector<std::string> labels = g.vertices();
    std::sort(labels.begin(), labels.end());
    BruteForceSeo out;
    do {
        ++out.permutations_tried;
        VertexOrder o(labels);
        if (is_strong_elimination_order(g, o).valid) {
            out.found = true;
            out.order = std::move(o);
            return out;
        }
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

DefinitionalCheck definitional_strongly_chordal(const Graph& g, int limit) {
    if (g.vertex_count() > limit)
        throw size_limit_error("graph has " + std::to_string(g.vertex_count()) +
                               " vertices; the definitional decider accepts at most " +
                               std::to_string(limit));
    DefinitionalCheck out;

    EliminationResult chordal = greedy_simplicial_elimination(g);
    if (!chordal.success) {
        // The residual has no simplicial vertex, so it is not chordal and
        // must contain a chordless cycle of length >= 4.
        Graph residual = induced_subgraph(g, chordal.stuck);
        enumerate_cycles(residual, [&](const std::vector<int>& cyc) {
            if (cyc.size() < 4 || has_chord_with_parity(residual, cyc, false)) return false;
            out.offending_cycle = cycle_labels(residual, cyc);
            return true;
        });
        assert(!out.offending_cycle.empty());
        return out;
    }

    enumerate_cycles(g, [&](const std::vector<int>& cyc) {
        if (cyc.size() < 6 || cyc.size() % 2 != 0) return false;
        if (has_chord_with_parity(g, cyc, true)) return false;
        out.offending_cycle = cycle_labels(g, cyc);
        return true;
    });
    out.strongly_chordal = out.offending_cycle.empty();
    return out;
}

}  // namespace sct
