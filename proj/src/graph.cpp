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

#include "sctree/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sct {

void Graph::register_labels() {
    index_.reserve(labels_.size());
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (!index_.emplace(labels_[static_cast<size_t>(i)], i).second)
            throw std::invalid_argument("duplicate vertex '" + labels_[static_cast<size_t>(i)] + "'");
    }
}

void Graph::build_adjacency(const std::vector<std::pair<int, int>>& by_index) {
    std::vector<int> deg(labels_.size(), 0);
    for (const auto& [u, v] : by_index) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    adj_.assign(labels_.size(), {});
    for (size_t i = 0; i < adj_.size(); ++i) adj_[i].reserve(static_cast<size_t>(deg[i]));
    for (const auto& [u, v] : by_index) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
        ++edge_count_;
    }
    for (size_t u = 0; u < adj_.size(); ++u) {
        auto& row = adj_[u];
        std::sort(row.begin(), row.end());
        for (size_t i = 1; i < row.size(); ++i)
            if (row[i] == row[i - 1])
                throw std::invalid_argument("duplicate edge '" + labels_[u] + " " +
                                            labels_[static_cast<size_t>(row[i])] + "'");
    }
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
    labels_ = std::move(vertices);
    register_labels();
    std::vector<std::pair<int, int>> by_index;
    by_index.reserve(edges.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        int u = index_of(a);
        int v = index_of(b);
        if (u == v) throw std::invalid_argument("self-loop '" + a + "'");
        auto [lo, hi] = std::minmax(u, v);
        std::uint64_t key = static_cast<std::uint64_t>(lo) * labels_.size() +
                            static_cast<std::uint64_t>(hi);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge '" + a + " " + b + "'");
        by_index.emplace_back(u, v);
    }
    build_adjacency(by_index);
}

Graph Graph::from_index_edges(std::vector<std::string> vertices,
                              const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.labels_ = std::move(vertices);
    g.register_labels();
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= static_cast<int>(g.labels_.size()) ||
            v >= static_cast<int>(g.labels_.size()))
            throw std::invalid_argument("edge endpoint index out of range");
        if (u == v)
            throw std::invalid_argument("self-loop '" + g.labels_[static_cast<size_t>(u)] + "'");
    }
    g.build_adjacency(edges);  // row sorting also rejects duplicate edges
    return g;
}

int Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex '" + label + "'");
    return it->second;
}

bool Graph::adjacent_indices(int u, int v) const {
    const auto& row = adj_.at(static_cast<size_t>(u));
    return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::adjacent(const std::string& u, const std::string& v) const {
    return adjacent_indices(index_of(u), index_of(v));
}

int Graph::degree(const std::string& v) const {
    return static_cast<int>(adj_.at(static_cast<size_t>(index_of(v))).size());
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : adj_[static_cast<size_t>(u)]) {
            if (u < v) {
                const std::string& a = labels_[static_cast<size_t>(u)];
                const std::string& b = labels_[static_cast<size_t>(v)];
                out.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::string> va = a.labels_, vb = b.labels_;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return false;
    return a.edges() == b.edges();
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r') l.pop_back();
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

bool parse_count(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (c < '0' || c > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    auto lines = split_lines(text);
    long long n = -1, m = -1;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::string> vertex_set;
    std::set<std::pair<std::string, std::string>> edge_set;
    bool edges_started = false;
    int line_no = 0;
    for (const auto& line : lines) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;  // blank line
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw parse_error(line_no, "duplicate header");
            if (toks.size() != 4 || toks[1] != "edge" || !parse_count(toks[2], n) ||
                !parse_count(toks[3], m))
                throw parse_error(line_no, "malformed header '" + line + "'");
            continue;
        }
        if (n < 0) throw parse_error(line_no, "expected header before '" + line + "'");
        if (toks[0] == "v") {
            if (edges_started) throw parse_error(line_no, "vertex declaration after edges");
            if (toks.size() != 2) throw parse_error(line_no, "malformed vertex line '" + line + "'");
            if (static_cast<long long>(vertices.size()) >= n)
                throw parse_error(line_no, "more than " + std::to_string(n) + " vertex declarations");
            if (!vertex_set.insert(toks[1]).second)
                throw parse_error(line_no, "duplicate vertex '" + toks[1] + "'");
            vertices.push_back(toks[1]);
            continue;
        }
        if (toks[0] == "e") {
            if (!edges_started) {
                if (!vertices.empty() && static_cast<long long>(vertices.size()) != n)
                    throw parse_error(line_no, "expected " + std::to_string(n) +
                                                   " vertex declarations, found " +
                                                   std::to_string(vertices.size()));
                if (vertices.empty()) {
                    for (long long i = 1; i <= n; ++i) {
                        vertices.push_back(std::to_string(i));
                        vertex_set.insert(vertices.back());
                    }
                }
                edges_started = true;
            }
            if (toks.size() != 3) throw parse_error(line_no, "malformed edge line '" + line + "'");
            if (static_cast<long long>(edges.size()) >= m)
                throw parse_error(line_no, "more than " + std::to_string(m) + " edge lines");
            const std::string& a = toks[1];
            const std::string& b = toks[2];
            if (!vertex_set.count(a)) throw parse_error(line_no, "undeclared endpoint '" + a + "'");
            if (!vertex_set.count(b)) throw parse_error(line_no, "undeclared endpoint '" + b + "'");
            if (a == b) throw parse_error(line_no, "self-loop '" + a + "'");
            auto key = std::minmax(a, b);
            if (!edge_set.insert(key).second)
                throw parse_error(line_no, "duplicate edge '" + a + " " + b + "'");
            edges.emplace_back(a, b);
            continue;
        }
        throw parse_error(line_no, "unexpected line '" + line + "'");
    }
    int last = static_cast<int>(lines.size()) + 1;
    if (n < 0) throw parse_error(last, "missing header");
    if (!edges_started) {
        if (!vertices.empty() && static_cast<long long>(vertices.size()) != n)
            throw parse_error(last, "expected " + std::to_string(n) + " vertex declarations, found " +
                                        std::to_string(vertices.size()));
        if (vertices.empty())
            for (long long i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
    }
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(last, "expected " + std::to_string(m) + " edge lines, found " +
                                    std::to_string(edges.size()));
    return Graph(std::move(vertices), edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& v : g.vertices()) out << "v " << v << "\n";
    for (const auto& [a, b] : g.edges()) out << "e " << a << " " << b << "\n";
    return out.str();
}

std::vector<std::string> closed_neighborhood(const Graph& g, const std::string& v) {
    int idx = g.index_of(v);
    std::vector<std::string> out;
    out.push_back(v);
    for (int u : g.neighbors_of(idx)) out.push_back(g.label_of(u));
    std::sort(out.begin(), out.end());
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& subset) {
    std::set<int> keep;
    for (const auto& v : subset) keep.insert(g.index_of(v));
    std::vector<std::string> vertices;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (keep.count(i)) vertices.push_back(g.label_of(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u : keep)
        for (int v : g.neighbors_of(u))
            if (u < v && keep.count(v)) edges.emplace_back(g.label_of(u), g.label_of(v));
    return Graph(std::move(vertices), edges);
}

SimplicialCheck is_simplicial_vertex(const Graph& g, const std::string& v) {
    auto members = closed_neighborhood(g, v);  // label-sorted
    SimplicialCheck out;
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            if (!g.adjacent(members[i], members[j])) {
                out.simplicial = false;
                out.non_adjacent_pair = {members[i], members[j]};
                return out;
            }
        }
    }
    out.simplicial = true;
    return out;
}

SimpleCheck is_simple_vertex(const Graph& g, const std::string& v) {
    auto members = closed_neighborhood(g, v);
    // Sorted by closed-neighborhood size (then label) a nested chain must
    // list its sets in this sequence, so checking consecutive inclusions is
    // exhaustive and any consecutive failure is a genuinely incomparable pair.
    std::stable_sort(members.begin(), members.end(), [&](const std::string& a, const std::string& b) {
        int da = g.degree(a), db = g.degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    auto closed_indices = [&](const std::string& u) {
        std::vector<int> s = g.neighbors_of(g.index_of(u));
        s.push_back(g.index_of(u));
        std::sort(s.begin(), s.end());
        return s;
    };
    SimpleCheck out;
    for (size_t i = 0; i + 1 < members.size(); ++i) {
        auto small = closed_indices(members[i]);
        auto big = closed_indices(members[i + 1]);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
            out.simple = false;
            out.incomparable_pair = {members[i], members[i + 1]};
            return out;
        }
    }
    out.simple = true;
    out.chain = std::move(members);
    return out;
}

VertexOrder::VertexOrder(std::vector<std::string> sequence) : seq_(std::move(sequence)) {
    pos_.reserve(seq_.size());
    for (int i = 0; i < static_cast<int>(seq_.size()); ++i) {
        if (!pos_.emplace(seq_[static_cast<size_t>(i)], i + 1).second)
            throw std::invalid_argument("duplicate label '" + seq_[static_cast<size_t>(i)] +
                                        "' in order");
    }
}

VertexOrder VertexOrder::from_csv(std::string_view csv) {
    std::vector<std::string> seq;
    if (!csv.empty()) {
        size_t start = 0;
        while (true) {
            size_t comma = csv.find(',', start);
            if (comma == std::string_view::npos) {
                seq.emplace_back(csv.substr(start));
                break;
            }
            seq.emplace_back(csv.substr(start, comma - start));
            start = comma + 1;
        }
    }
    return VertexOrder(std::move(seq));
}

int VertexOrder::position(const std::string& label) const {
    auto it = pos_.find(label);
    return it == pos_.end() ? 0 : it->second;
}

bool VertexOrder::is_permutation_of(const Graph& g) const {
    if (size() != g.vertex_count()) return false;
    for (const auto& v : seq_)
        if (!g.has_vertex(v)) return false;
    return true;  // duplicates are excluded by construction
}

std::string VertexOrder::to_csv() const {
    std::string out;
    for (size_t i = 0; i < seq_.size(); ++i) {
        if (i) out += ',';
        out += seq_[i];
    }
    return out;
}

}  // namespace sct
