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

#include "sctree/extraction.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace sct {

int OvershadowDigraph::index_of(const std::string& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw std::invalid_argument("unknown vertex '" + v + "'");
    return static_cast<int>(it - vertices.begin());
}

bool OvershadowDigraph::has_arc(const std::string& from, const std::string& to) const {
    const auto& row = out_arcs[static_cast<size_t>(index_of(from))];
    return std::binary_search(row.begin(), row.end(), index_of(to));
}

std::vector<std::pair<std::string, std::string>> OvershadowDigraph::arc_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t u = 0; u < out_arcs.size(); ++u)
        for (int v : out_arcs[u]) out.emplace_back(vertices[u], vertices[static_cast<size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

int OvershadowDigraph::arc_count() const {
    int total = 0;
    for (const auto& row : out_arcs) total += static_cast<int>(row.size());
    return total;
}

namespace {

struct EdgeVerdict {
    bool shared = false;
    bool uw_fails = false;  // T(u) does not overshadow T(w)
    bool wu_fails = false;
};

// Member lists flattened into one array of (node id, depth rank) entries.
// The per-edge merges below touch two slices per intersection edge; packed
// 8-byte entries in contiguous storage make a typical slice fetch one cache
// line instead of a chase through scattered per-subtree vectors.  Depths are
// replaced by their dense rank among the host's depth values, which keeps
// every comparison the merges make while halving the entry width.
struct MemberEntry {
    std::int32_t id;
    std::int32_t depth;  // dense rank, order- and equality-preserving
};

struct MemberSlices {
    std::vector<size_t> off;        // slice v is [off[v], off[v + 1])
    std::vector<MemberEntry> ent;   // node ids ascending per slice
};

MemberSlices flatten_members(const HostTree& host, const std::vector<const Subtree*>& subs) {
    int node_count = host.node_count();
    std::vector<std::pair<std::int64_t, int>> by_depth(static_cast<size_t>(node_count));
    for (int node = 0; node < node_count; ++node)
        by_depth[static_cast<size_t>(node)] = {host.depth(node), node};
    std::sort(by_depth.begin(), by_depth.end());
    std::vector<std::int32_t> rank(static_cast<size_t>(node_count));
    std::int32_t next_rank = -1;
    std::int64_t prev = 0;
    for (size_t i = 0; i < by_depth.size(); ++i) {
        if (i == 0 || by_depth[i].first != prev) ++next_rank;
        prev = by_depth[i].first;
        rank[static_cast<size_t>(by_depth[i].second)] = next_rank;
    }

    MemberSlices m;
    m.off.resize(subs.size() + 1);
    m.off[0] = 0;
    for (size_t v = 0; v < subs.size(); ++v)
        m.off[v + 1] = m.off[v] + subs[v]->members().size();
    m.ent.reserve(m.off.back());
    for (const Subtree* s : subs)
        for (int node : s->members())
            m.ent.push_back({node, rank[static_cast<size_t>(node)]});
    return m;
}

// Both slices are sorted, so one merge pass classifies every node as
// shared / u-only / w-only in O(|T(u)| + |T(w)|).
EdgeVerdict classify_edge(const MemberSlices& m, int u, int w) {
    bool shared = false, have_u_only = false, have_w_only = false;
    std::int32_t cutoff = 0, min_u_only = 0, min_w_only = 0;
    size_t i = m.off[static_cast<size_t>(u)], iend = m.off[static_cast<size_t>(u) + 1];
    size_t j = m.off[static_cast<size_t>(w)], jend = m.off[static_cast<size_t>(w) + 1];
    while (i < iend || j < jend) {
        if (j == jend || (i < iend && m.ent[i].id < m.ent[j].id)) {
            std::int32_t d = m.ent[i++].depth;
            if (!have_u_only || d < min_u_only) min_u_only = d;
            have_u_only = true;
        } else if (i == iend || m.ent[j].id < m.ent[i].id) {
            std::int32_t d = m.ent[j++].depth;
            if (!have_w_only || d < min_w_only) min_w_only = d;
            have_w_only = true;
        } else {
            std::int32_t d = m.ent[i].depth;
            ++i, ++j;
            if (!shared || d > cutoff) cutoff = d;
            shared = true;
        }
    }
    EdgeVerdict out;
    out.shared = shared;
    out.uw_fails = shared && have_w_only && min_w_only <= cutoff;
    out.wu_fails = shared && have_u_only && min_u_only <= cutoff;
    return out;
}

inline void prefetch(const void* p) {
#if defined(__GNUC__) || defined(__clang__)
    __builtin_prefetch(p);
#else
    (void)p;
#endif
}

// Intersection edges as label-sorted index pairs (a < b), grouped by their
// smaller endpoint; the stamp dedups a pair across its shared nodes.  The
// per-node occupant lists live in one flat array, not one vector per node.
std::vector<std::pair<int, int>> co_occurrence_edges(int node_count, const MemberSlices& m) {
    int n = static_cast<int>(m.off.size()) - 1;
    std::vector<size_t> noff(static_cast<size_t>(node_count) + 1, 0);
    for (const MemberEntry& e : m.ent) ++noff[static_cast<size_t>(e.id) + 1];
    for (size_t i = 1; i < noff.size(); ++i) noff[i] += noff[i - 1];
    std::vector<int> through(m.ent.size());
    std::vector<size_t> cursor(noff.begin(), noff.end() - 1);
    for (int a = 0; a < n; ++a)
        for (size_t k = m.off[static_cast<size_t>(a)]; k < m.off[static_cast<size_t>(a) + 1]; ++k)
            through[cursor[static_cast<size_t>(m.ent[k].id)]++] = a;
    std::vector<int> stamp(static_cast<size_t>(n), -1);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m.ent.size());
    size_t total = m.ent.size();
    for (int a = 0; a < n; ++a)
        for (size_t k = m.off[static_cast<size_t>(a)]; k < m.off[static_cast<size_t>(a) + 1]; ++k) {
            if (k + 2 < total) prefetch(&noff[static_cast<size_t>(m.ent[k + 2].id)]);
            if (k + 1 < total) prefetch(&through[noff[static_cast<size_t>(m.ent[k + 1].id)]]);
            int node = m.ent[k].id;
            for (size_t t = noff[static_cast<size_t>(node)]; t < noff[static_cast<size_t>(node) + 1]; ++t) {
                int b = through[t];
                if (b > a && stamp[static_cast<size_t>(b)] != a) {
                    stamp[static_cast<size_t>(b)] = a;
                    edges.emplace_back(a, b);
                }
            }
        }
    return edges;
}

// Classifies every listed edge and keeps the overshadow failures as arcs.
// Each merge reads a second slice from effectively random positions, so the
// slice two edges ahead is prefetched in two steps (offsets first, then the
// slice data those offsets point at) to keep the merges off the memory
// latency path.
std::vector<std::pair<int, int>> overshadow_failure_arcs(const MemberSlices& m,
                                                         const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(edges.size());
    size_t ne = edges.size();
    for (size_t i = 0; i < ne; ++i) {
        if (i + 16 < ne) prefetch(&m.off[static_cast<size_t>(edges[i + 16].second)]);
        if (i + 8 < ne) prefetch(&m.ent[m.off[static_cast<size_t>(edges[i + 8].second)]]);
        const auto& [u, w] = edges[i];
        EdgeVerdict v = classify_edge(m, u, w);
        if (v.uw_fails) arcs.emplace_back(u, w);
        if (v.wu_fails) arcs.emplace_back(w, u);
    }
    return arcs;
}

// Buckets failure arcs into per-vertex rows with exact reservations.
std::vector<std::vector<int>> bucket_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (const auto& [u, w] : arcs) ++deg[static_cast<size_t>(u)];
    std::vector<std::vector<int>> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)].reserve(static_cast<size_t>(deg[i]));
    for (const auto& [u, w] : arcs) rows[static_cast<size_t>(u)].push_back(w);
    return rows;
}

}  // namespace

OvershadowDigraph build_overshadow_digraph(const TreeRepresentation& r, const Graph& g) {
    OvershadowDigraph h;
    h.vertices = r.vertex_labels();  // label-sorted
    if (static_cast<int>(h.vertices.size()) != g.vertex_count())
        throw std::invalid_argument("graph/representation mismatch: vertex counts differ");
    for (const auto& v : h.vertices)
        if (!g.has_vertex(v))
            throw std::invalid_argument("graph/representation mismatch: vertex '" + v + "'");

    // assignment iterates label-sorted, in step with h.vertices.
    std::vector<const Subtree*> subs;
    subs.reserve(h.vertices.size());
    for (const auto& [label, sub] : r.assignment) subs.push_back(&sub);
    std::vector<int> gidx_to_h(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) gidx_to_h[static_cast<size_t>(i)] = h.index_of(g.label_of(i));

    MemberSlices slices = flatten_members(r.host, subs);
    std::vector<std::pair<int, int>> arcs;
    for (int gu = 0; gu < g.vertex_count(); ++gu) {
        for (int gw : g.neighbors_of(gu)) {
            if (gw <= gu) continue;
            int u = gidx_to_h[static_cast<size_t>(gu)];
            int w = gidx_to_h[static_cast<size_t>(gw)];
            EdgeVerdict v = classify_edge(slices, u, w);
            if (!v.shared)
                throw std::invalid_argument("graph/representation mismatch: subtrees of '" +
                                            h.vertices[static_cast<size_t>(u)] + "' and '" +
                                            h.vertices[static_cast<size_t>(w)] + "' are disjoint");
            if (v.uw_fails) arcs.emplace_back(u, w);
            if (v.wu_fails) arcs.emplace_back(w, u);
        }
    }
    h.out_arcs = bucket_arcs(static_cast<int>(h.vertices.size()), arcs);
    for (auto& row : h.out_arcs) std::sort(row.begin(), row.end());
    return h;
}

ExtractionResult extract_strong_elimination_order(const TreeRepresentation& r) {
    int n = r.vertex_count();
    std::vector<std::string> labels;  // contiguous copy, spares the map walk later
    std::vector<const Subtree*> subs;
    std::vector<std::int64_t> root_depth;
    labels.reserve(static_cast<size_t>(n));
    subs.reserve(static_cast<size_t>(n));
    root_depth.reserve(static_cast<size_t>(n));
    for (const auto& [label, sub] : r.assignment) {  // label-sorted
        labels.push_back(label);
        subs.push_back(&sub);
        root_depth.push_back(r.host.depth(sub.root()));
    }

    // Equivalent to build_overshadow_digraph(r, intersection_graph(r)) but
    // skips materializing the graph: only the failure arcs are needed.
    MemberSlices slices = flatten_members(r.host, subs);
    std::vector<std::pair<int, int>> arcs =
        overshadow_failure_arcs(slices, co_occurrence_edges(r.host.node_count(), slices));
    // Arc rows bucketed into one flat array (row v is dst[aoff[v]..aoff[v+1])).
    std::vector<size_t> aoff(static_cast<size_t>(n) + 1, 0);
    for (const auto& [u, w] : arcs) ++aoff[static_cast<size_t>(u) + 1];
    for (size_t i = 1; i < aoff.size(); ++i) aoff[i] += aoff[i - 1];
    std::vector<int> dst(arcs.size());
    {
        std::vector<size_t> cursor(aoff.begin(), aoff.end() - 1);
        for (const auto& [u, w] : arcs) dst[cursor[static_cast<size_t>(u)]++] = w;
    }

    // Deterministic availability rank: deepest subtree root first, then
    // label.  In a compatible representation every predecessor in the
    // digraph has a root at least as deep, so emitting by this rank keeps
    // the output a bottom-up enumeration order.  Sorting packed (key, index)
    // pairs keeps the comparator out of the depth array; vertices are
    // label-sorted, so the index tiebreak is the label tiebreak.
    std::vector<std::pair<std::int64_t, int>> keyed(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        keyed[static_cast<size_t>(i)] = {-root_depth[static_cast<size_t>(i)], i};
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> by_rank(static_cast<size_t>(n));
    std::vector<int> rank_of(static_cast<size_t>(n));
    for (int rk = 0; rk < n; ++rk) {
        by_rank[static_cast<size_t>(rk)] = keyed[static_cast<size_t>(rk)].second;
        rank_of[static_cast<size_t>(keyed[static_cast<size_t>(rk)].second)] = rk;
    }

    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (int w : dst) ++indeg[static_cast<size_t>(w)];

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[static_cast<size_t>(i)] == 0) ready.push(rank_of[static_cast<size_t>(i)]);

    std::vector<int> emission;
    std::vector<char> emitted(static_cast<size_t>(n), 0);
    emission.reserve(static_cast<size_t>(n));
    while (!ready.empty()) {
        int v = by_rank[static_cast<size_t>(ready.top())];
        ready.pop();
        emitted[static_cast<size_t>(v)] = 1;
        emission.push_back(v);
        for (size_t k = aoff[static_cast<size_t>(v)]; k < aoff[static_cast<size_t>(v) + 1]; ++k)
            if (--indeg[static_cast<size_t>(dst[k])] == 0) ready.push(rank_of[static_cast<size_t>(dst[k])]);
    }

    ExtractionResult out;
    if (static_cast<int>(emission.size()) == n) {
        std::vector<std::string> sequence;
        sequence.reserve(static_cast<size_t>(n));
        for (size_t i = 0; i < emission.size(); ++i) {
            if (i + 8 < emission.size()) prefetch(&labels[static_cast<size_t>(emission[i + 8])]);
            sequence.push_back(labels[static_cast<size_t>(emission[i])]);
        }
        out.order = VertexOrder(std::move(sequence));
        return out;
    }

    // A vertex was never freed: every remaining vertex keeps a remaining
    // predecessor, so walking least-label predecessors must revisit one.
    std::vector<std::vector<int>> preds(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        if (emitted[static_cast<size_t>(u)]) continue;
        for (size_t k = aoff[static_cast<size_t>(u)]; k < aoff[static_cast<size_t>(u) + 1]; ++k)
            if (!emitted[static_cast<size_t>(dst[k])]) preds[static_cast<size_t>(dst[k])].push_back(u);
    }
    int start = 0;
    while (emitted[static_cast<size_t>(start)]) ++start;
    std::vector<int> walk{start};
    std::vector<int> seen_at(static_cast<size_t>(n), -1);
    seen_at[static_cast<size_t>(start)] = 0;
    int cur = start;
    for (;;) {
        assert(!preds[static_cast<size_t>(cur)].empty());
        int p = *std::min_element(preds[static_cast<size_t>(cur)].begin(),
                                  preds[static_cast<size_t>(cur)].end());
        if (seen_at[static_cast<size_t>(p)] >= 0) {
            // walk[m..end] traversed backwards along arcs; reverse it to
            // follow arc direction.
            std::vector<int> cyc(walk.begin() + seen_at[static_cast<size_t>(p)], walk.end());
            std::reverse(cyc.begin(), cyc.end());
            auto min_it = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), min_it, cyc.end());
            for (int v : cyc) out.cycle.push_back(labels[static_cast<size_t>(v)]);
            return out;
        }
        seen_at[static_cast<size_t>(p)] = static_cast<int>(walk.size());
        walk.push_back(p);
        cur = p;
    }
}

std::string deepest_root_vertex(const TreeRepresentation& r) {
    if (r.assignment.empty()) throw std::invalid_argument("empty representation");
    assert(is_compatible_representation(r).compatible);
    const std::string* best = nullptr;
    std::int64_t best_depth = -1;
    for (const auto& [label, sub] : r.assignment) {
        std::int64_t d = r.host.depth(sub.root());
        if (!best || d > best_depth) {
            best = &label;
            best_depth = d;
        }
    }
    return *best;
}

}  // namespace sct
