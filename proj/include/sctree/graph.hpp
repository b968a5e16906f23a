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
#include <unordered_map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sct {

/// Error raised while reading one of the line-oriented file formats.
/// Carries the 1-based number of the offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An undirected simple graph over string-labelled vertices.
///
/// Vertices keep their declaration order (the canonical order used by the
/// file format).  Set-valued results are returned sorted by label so that
/// certificates are reproducible.  Instances are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from a vertex list and an edge list.  Rejects duplicate
    /// vertices, self-loops, duplicate edges and undeclared endpoints with
    /// std::invalid_argument.
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    /// Same contract with endpoints given as declaration-order indices,
    /// skipping the label translation (the entry point of choice when edges
    /// come out of an index-based computation).
    static Graph from_index_edges(std::vector<std::string> vertices,
                                  const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return edge_count_; }

    /// Vertex labels in canonical (declaration) order.
    const std::vector<std::string>& vertices() const { return labels_; }

    bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }

    /// Canonical index of a vertex; throws std::invalid_argument if unknown.
    int index_of(const std::string& label) const;
    const std::string& label_of(int index) const { return labels_.at(static_cast<size_t>(index)); }

    bool adjacent(const std::string& u, const std::string& v) const;
    bool adjacent_indices(int u, int v) const;
    int degree(const std::string& v) const;

    /// Neighbor indices, sorted ascending.
    const std::vector<int>& neighbors_of(int index) const { return adj_.at(static_cast<size_t>(index)); }

    /// All edges as (min,max) label pairs, sorted.
    std::vector<std::pair<std::string, std::string>> edges() const;

    /// Structural equality: same vertex set and same edge set; canonical
    /// order does not participate.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    void register_labels();
    void build_adjacency(const std::vector<std::pair<int, int>>& by_index);

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

/// Reads the graph file format:
///
///     c <comment>                 (anywhere)
///     p edge <n> <m>
///     v <label>                   (optional; 0 or exactly n lines, before edges)
///     e <label1> <label2>         (exactly m lines)
///
/// When vertex declarations are omitted the labels are "1".."n".  Rejects
/// malformed headers, duplicate vertices/edges, self-loops and undeclared
/// endpoints with parse_error naming the offending line.
Graph parse_graph(std::string_view text);

/// Canonical serialization: header, vertex lines in canonical order, edge
/// lines sorted by (min,max) label.  parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

/// {v} together with all neighbors of v, sorted by label.
std::vector<std::string> closed_neighborhood(const Graph& g, const std::string& v);

/// Subgraph induced by the given vertices (must all exist in g); canonical
/// order is inherited from g.
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& subset);

struct SimplicialCheck {
    bool simplicial = false;
    /// Two members of N[v] with no edge between them; first such pair in
    /// label order.  Set iff not simplicial.
    std::optional<std::pair<std::string, std::string>> non_adjacent_pair;
};

/// True iff the closed neighborhood of v is a clique.
SimplicialCheck is_simplicial_vertex(const Graph& g, const std::string& v);

struct SimpleCheck {
    bool simple = false;
    /// On success: the members of N[v] sorted by (closed-neighborhood size,
    /// label); along this chain each closed neighborhood contains the
    /// previous one.
    std::vector<std::string> chain;
    /// On failure: two members of N[v] whose closed neighborhoods are
    /// inclusion-incomparable.
    std::optional<std::pair<std::string, std::string>> incomparable_pair;
};

/// True iff the closed neighborhoods of the members of N[v] form an
/// inclusion chain.  Simple vertices are always simplicial.
SimpleCheck is_simple_vertex(const Graph& g, const std::string& v);

/// A duplicate-free vertex sequence with 1-based position lookup.
class VertexOrder {
public:
    VertexOrder() = default;

    /// Throws std::invalid_argument on duplicate labels.
    explicit VertexOrder(std::vector<std::string> sequence);

    /// Parses a comma-separated label list; empty input yields the empty order.
    static VertexOrder from_csv(std::string_view csv);

    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<std::string>& sequence() const { return seq_; }

    /// Label at 1-based position p.
    const std::string& at(int p) const { return seq_.at(static_cast<size_t>(p - 1)); }

    /// 1-based position of a label, 0 when absent.
    int position(const std::string& label) const;

    bool is_permutation_of(const Graph& g) const;
    std::string to_csv() const;

    friend bool operator==(const VertexOrder& a, const VertexOrder& b) { return a.seq_ == b.seq_; }

private:
    std::vector<std::string> seq_;
    std::unordered_map<std::string, int> pos_;
};

}  // namespace sct
