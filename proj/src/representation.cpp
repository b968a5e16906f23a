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

#include "sctree/representation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sct {

const Subtree& TreeRepresentation::subtree(const std::string& vertex) const {
    auto it = assignment.find(vertex);
    if (it == assignment.end()) throw std::invalid_argument("unknown vertex '" + vertex + "'");
    return it->second;
}

std::vector<std::string> TreeRepresentation::vertex_labels() const {
    std::vector<std::string> out;
    out.reserve(assignment.size());
    for (const auto& [label, sub] : assignment) out.push_back(label);
    return out;
}

bool operator==(const TreeRepresentation& a, const TreeRepresentation& b) {
    return a.host == b.host && a.assignment == b.assignment;
}

Graph intersection_graph(const TreeRepresentation& r) {
    std::vector<std::string> labels = r.vertex_labels();
    int vcount = static_cast<int>(labels.size());
    // Subtrees through each host node; two vertices are adjacent iff they
    // co-occur at some node.
    std::vector<int> load(static_cast<size_t>(r.host.node_count()), 0);
    for (const auto& [label, sub] : r.assignment)
        for (int m : sub.members()) ++load[static_cast<size_t>(m)];
    std::vector<std::vector<int>> through(static_cast<size_t>(r.host.node_count()));
    for (size_t i = 0; i < through.size(); ++i) through[i].reserve(static_cast<size_t>(load[i]));
    {
        int vi = 0;
        for (const auto& [label, sub] : r.assignment) {
            for (int m : sub.members()) through[static_cast<size_t>(m)].push_back(vi);
            ++vi;
        }
    }
    // Enumerate co-occurring pairs grouped by their smaller endpoint; the
    // stamp dedups the pair across the shared nodes without a global set.
    std::vector<int> stamp(static_cast<size_t>(vcount), -1);
    std::vector<std::pair<int, int>> edges;
    {
        int a = 0;
        for (const auto& [label, sub] : r.assignment) {
            for (int m : sub.members())
                for (int b : through[static_cast<size_t>(m)])
                    if (b > a && stamp[static_cast<size_t>(b)] != a) {
                        stamp[static_cast<size_t>(b)] = a;
                        edges.emplace_back(a, b);
                    }
            ++a;
        }
    }
    return Graph::from_index_edges(std::move(labels), edges);
}

std::vector<std::pair<std::string, std::string>> incompatible_pairs(const TreeRepresentation& r) {
    std::vector<std::pair<std::string, std::string>> out;
    auto labels = r.vertex_labels();  // sorted by label already
    for (size_t i = 0; i < labels.size(); ++i) {
        const Subtree& si = r.assignment.at(labels[i]);
        for (size_t j = i + 1; j < labels.size(); ++j) {
            if (!compatible_pair(r.host, si, r.assignment.at(labels[j])).compatible())
                out.emplace_back(labels[i], labels[j]);
        }
    }
    return out;
}

CompatibilityCheck is_compatible_representation(const TreeRepresentation& r) {
    CompatibilityCheck out;
    auto labels = r.vertex_labels();
    for (size_t i = 0; i < labels.size(); ++i) {
        const Subtree& si = r.assignment.at(labels[i]);
        for (size_t j = i + 1; j < labels.size(); ++j) {
            if (!compatible_pair(r.host, si, r.assignment.at(labels[j])).compatible()) {
                out.compatible = false;
                out.incompatible_pair = {labels[i], labels[j]};
                return out;
            }
        }
    }
    out.compatible = true;
    return out;
}

bool is_rdv(const TreeRepresentation& r) {
    for (const auto& [label, sub] : r.assignment) {
        for (int m : sub.members()) {
            int inside = 0;
            for (int c : r.host.children(m))
                if (sub.contains(c) && ++inside > 1) return false;
        }
    }
    return true;
}

VertexOrder bottom_up_order(const TreeRepresentation& r) {
    std::vector<std::string> labels = r.vertex_labels();
    std::stable_sort(labels.begin(), labels.end(), [&](const std::string& a, const std::string& b) {
        std::int64_t da = r.host.depth(r.assignment.at(a).root());
        std::int64_t db = r.host.depth(r.assignment.at(b).root());
        if (da != db) return da > db;
        return a < b;
    });
    return VertexOrder(std::move(labels));
}

SubdivisionReport subdivide_unit_weights(const TreeRepresentation& r, SubdivisionPolicy policy) {
    const HostTree& host = r.host;
    std::set<std::string> used(host.ids().begin(), host.ids().end());

    std::vector<HostNodeSpec> specs;
    // Chain node ids per subdivided arc, child-indexed; upper-to-lower order.
    std::vector<std::vector<std::string>> chain(static_cast<size_t>(host.node_count()));
    for (int i = 0; i < host.node_count(); ++i) {
        const std::string& id = host.id_of(i);
        int p = host.parent(i);
        if (p < 0) {
            specs.push_back({id, std::nullopt, 0});
            continue;
        }
        std::int64_t w = host.arc_weight(i);
        if (w == 1) {
            specs.push_back({id, host.id_of(p), 1});
            continue;
        }
        std::string prev = host.id_of(p);
        for (std::int64_t step = 1; step < w; ++step) {
            std::string fresh = host.id_of(p) + "-" + id + "-" + std::to_string(step);
            if (!used.insert(fresh).second)
                throw std::invalid_argument("subdivision id collision '" + fresh + "'");
            chain[static_cast<size_t>(i)].push_back(fresh);
            specs.push_back({fresh, prev, 1});
            prev = fresh;
        }
        specs.push_back({id, prev, 1});
    }
    HostTree subdivided(specs);

    SubdivisionReport report{TreeRepresentation{subdivided, {}}, false, false, {}};
    for (const auto& [label, sub] : r.assignment) {
        std::vector<std::string> members;
        for (int m : sub.members()) members.push_back(host.id_of(m));
        for (int i = 0; i < host.node_count(); ++i) {
            if (chain[static_cast<size_t>(i)].empty()) continue;
            int upper = host.parent(i);
            bool has_upper = sub.contains(upper);
            bool mandatory = has_upper && sub.contains(i);
            bool extend = policy == SubdivisionPolicy::extend_all && has_upper;
            if (mandatory || extend)
                for (const auto& id : chain[static_cast<size_t>(i)]) members.push_back(id);
        }
        report.result.assignment.emplace(label, make_subtree(subdivided, members));
    }

    report.intersection_preserved = intersection_graph(report.result) == intersection_graph(r);
    report.incompatible = incompatible_pairs(report.result);
    report.compatible = report.incompatible.empty();
    return report;
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

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t start = tok[0] == '-' ? 1 : 0;
    if (start == tok.size()) return false;
    for (size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

TreeRepresentation parse_representation(std::string_view text) {
    auto lines = split_lines(text);
    long long num_nodes = -1, num_vertices = -1;

    struct NodeLine {
        int line_no;
        std::string id, parent, weight;
    };
    struct SubLine {
        int line_no;
        std::vector<std::string> toks;
    };
    std::vector<NodeLine> node_lines;
    std::vector<SubLine> sub_lines;

    int line_no = 0;
    for (const auto& line : lines) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "t") {
            if (num_nodes >= 0) throw parse_error(line_no, "duplicate header");
            if (toks.size() != 3 || !parse_int(toks[1], num_nodes) ||
                !parse_int(toks[2], num_vertices) || num_nodes < 1 || num_vertices < 0)
                throw parse_error(line_no, "malformed header '" + line + "'");
            continue;
        }
        if (num_nodes < 0) throw parse_error(line_no, "expected header before '" + line + "'");
        if (toks[0] == "node") {
            if (!sub_lines.empty()) throw parse_error(line_no, "node line after subtree lines");
            if (toks.size() != 4) throw parse_error(line_no, "malformed node line '" + line + "'");
            node_lines.push_back({line_no, toks[1], toks[2], toks[3]});
            continue;
        }
        if (toks[0] == "sub") {
            if (toks.size() < 3) throw parse_error(line_no, "malformed subtree line '" + line + "'");
            sub_lines.push_back({line_no, std::move(toks)});
            continue;
        }
        throw parse_error(line_no, "unexpected line '" + line + "'");
    }
    int last = static_cast<int>(lines.size()) + 1;
    if (num_nodes < 0) throw parse_error(last, "missing header");
    if (static_cast<long long>(node_lines.size()) != num_nodes)
        throw parse_error(last, "expected " + std::to_string(num_nodes) + " node lines, found " +
                                    std::to_string(node_lines.size()));
    if (static_cast<long long>(sub_lines.size()) != num_vertices)
        throw parse_error(last, "expected " + std::to_string(num_vertices) +
                                    " subtree lines, found " + std::to_string(sub_lines.size()));

    // Distinguish an orphan (parent never declared) from a parent declared
    // after its child, which needs the full id set up front.
    std::map<std::string, int> declared_at;
    for (int i = 0; i < static_cast<int>(node_lines.size()); ++i) {
        if (declared_at.count(node_lines[static_cast<size_t>(i)].id))
            throw parse_error(node_lines[static_cast<size_t>(i)].line_no,
                              "duplicate node id '" + node_lines[static_cast<size_t>(i)].id + "'");
        declared_at.emplace(node_lines[static_cast<size_t>(i)].id, i);
    }

    std::vector<HostNodeSpec> specs;
    bool have_root = false;
    for (int i = 0; i < static_cast<int>(node_lines.size()); ++i) {
        const auto& nl = node_lines[static_cast<size_t>(i)];
        long long w;
        if (!parse_int(nl.weight, w))
            throw parse_error(nl.line_no, "malformed weight '" + nl.weight + "'");
        if (nl.parent == "-") {
            if (w != 0) throw parse_error(nl.line_no, "root arc weight must be 0");
            if (have_root) throw parse_error(nl.line_no, "multiple roots");
            have_root = true;
            specs.push_back({nl.id, std::nullopt, 0});
        } else {
            auto it = declared_at.find(nl.parent);
            if (it == declared_at.end())
                throw parse_error(nl.line_no, "orphan node '" + nl.id + "' (parent '" + nl.parent +
                                                  "' undeclared)");
            if (it->second >= i)
                throw parse_error(nl.line_no, "parent '" + nl.parent + "' declared after child '" +
                                                  nl.id + "'");
            if (w < 1) throw parse_error(nl.line_no, "nonpositive weight on node '" + nl.id + "'");
            specs.push_back({nl.id, nl.parent, w});
        }
    }
    if (!have_root) throw parse_error(last, "no root node");
    HostTree host(specs);

    TreeRepresentation r{std::move(host), {}};
    for (const auto& sl : sub_lines) {
        const std::string& label = sl.toks[1];
        if (r.assignment.count(label))
            throw parse_error(sl.line_no, "duplicate vertex '" + label + "'");
        std::vector<std::string> members(sl.toks.begin() + 2, sl.toks.end());
        auto check = is_valid_subtree(r.host, members);
        if (!check.valid) throw parse_error(sl.line_no, check.reason);
        r.assignment.emplace(label, make_subtree(r.host, members));
    }
    return r;
}

std::string serialize_representation(const TreeRepresentation& r) {
    std::ostringstream out;
    out << "t " << r.host.node_count() << " " << r.vertex_count() << "\n";
    for (int i = 0; i < r.host.node_count(); ++i) {
        out << "node " << r.host.id_of(i) << " ";
        if (r.host.parent(i) < 0)
            out << "- 0\n";
        else
            out << r.host.id_of(r.host.parent(i)) << " " << r.host.arc_weight(i) << "\n";
    }
    for (const auto& [label, sub] : r.assignment) {
        out << "sub " << label << " " << r.host.id_of(sub.root());
        std::vector<std::string> rest;
        for (int m : sub.members())
            if (m != sub.root()) rest.push_back(r.host.id_of(m));
        std::sort(rest.begin(), rest.end());
        for (const auto& id : rest) out << " " << id;
        out << "\n";
    }
    return out.str();
}

}  // namespace sct
