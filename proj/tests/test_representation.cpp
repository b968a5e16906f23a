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

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sctree/fixtures.hpp"
#include "sctree/generators.hpp"
#include "sctree/orders.hpp"
#include "sctree/representation.hpp"

using namespace sct;

namespace {
int line_of(const char* text) {
    try {
        parse_representation(text);
    } catch (const parse_error& e) {
        return e.line();
    }
    return -1;
}

std::vector<std::string> members_of(const TreeRepresentation& r, const std::string& v) {
    return oracle::member_ids(r.host, r.subtree(v));
}
}  // namespace

TEST_CASE("representation file round-trips through the canonical form") {
    TreeRepresentation r = parse_representation(fixtures::fig1_representation_text());
    CHECK(r.host.node_count() == 7);
    CHECK(r.vertex_count() == 7);
    CHECK(members_of(r, "x") == std::vector<std::string>{"x", "w", "c", "b", "a"});
    CHECK(r.host.id_of(r.subtree("x").root()) == "x");
    CHECK(serialize_representation(r) == fixtures::fig1_representation_text());
    CHECK(parse_representation(serialize_representation(r)) == r);

    // Member order inside a sub line is free; canonical form is not.
    TreeRepresentation lenient = parse_representation(
        "t 3 1\nnode n1 - 0\nnode n2 n1 2\nnode n3 n2 1\nsub q n3 n1 n2\n");
    CHECK(serialize_representation(lenient) == "t 3 1\nnode n1 - 0\nnode n2 n1 2\nnode n3 n2 1\nsub q n1 n2 n3\n");
}

TEST_CASE("representation parse errors carry the offending line") {
    CHECK(line_of("t 1 1\nt 1 1\n") == 2);                                    // duplicate header
    CHECK(line_of("t x 1\n") == 1);                                           // malformed header
    CHECK(line_of("node r - 0\n") == 1);                                      // body before header
    CHECK(line_of("t 1 1\nnode r - 0\nsub v r\nnode s r 1\n") == 4);          // node after subs
    CHECK(line_of("t 1 1\nnode r -\n") == 2);                                 // malformed node line
    CHECK(line_of("t 1 1\nnode r - 0\nsub v\n") == 3);                        // malformed sub line
    CHECK(line_of("t 1 1\nnode r - 0\nwat\n") == 3);                          // unknown line kind
    CHECK(line_of("t 2 1\nnode r - 0\nsub v r\n") == 4);                      // node count short
    CHECK(line_of("t 1 2\nnode r - 0\nsub v r\n") == 4);                      // sub count short
    CHECK(line_of("t 1 1\nnode r - 1\nsub v r\n") == 2);                      // root weight not 0
    CHECK(line_of("t 2 1\nnode r - 0\nnode s - 0\nsub v r\n") == 3);          // two roots
    CHECK(line_of("t 2 1\nnode r - 0\nnode s q 1\nsub v r\n") == 3);          // orphan parent
    CHECK(line_of("t 3 1\nnode r - 0\nnode s t 1\nnode t r 1\nsub v r\n") == 3);  // parent later
    CHECK(line_of("t 2 1\nnode r - 0\nnode s r 0\nsub v r\n") == 3);          // zero arc weight
    CHECK(line_of("t 2 1\nnode r - 0\nnode s r -3\nsub v r\n") == 3);         // negative weight
    CHECK(line_of("t 2 1\nnode r - 0\nnode r r 1\nsub v r\n") == 3);          // duplicate node id
    CHECK(line_of("t 1 2\nnode r - 0\nsub v r\nsub v r\n") == 4);             // duplicate vertex
    CHECK(line_of("t 2 1\nnode r - 0\nnode s r 1\nsub v q\n") == 4);          // unknown member
    CHECK(line_of("t 3 1\nnode r - 0\nnode s r 1\nnode t s 1\nsub v r t\n") == 5);  // disconnected
    CHECK(line_of("t 1 0\n") == 2);                                           // missing node lines
}

TEST_CASE("intersection graph matches the pairwise reference") {
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    CHECK(intersection_graph(r1) == parse_graph(fixtures::fig1_graph_text()));

    TreeRepresentation r3 = parse_representation(fixtures::fig3_representation_text());
    CHECK(intersection_graph(r3) == parse_graph(fixtures::fig3_graph_text()));

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        TreeRepresentation r = generate_rdv_representation(12, 9, 3, seed);
        CHECK(intersection_graph(r).edges() == oracle::intersection_edges_ref(r));
    }
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        TreeRepresentation r = generate_random_chordal_representation(10, 8, seed);
        CHECK(intersection_graph(r).edges() == oracle::intersection_edges_ref(r));
    }
}

TEST_CASE("compatibility scan returns the least failing pair") {
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    CHECK(is_compatible_representation(r1).compatible);
    CHECK(incompatible_pairs(r1).empty());

    TreeRepresentation rm = parse_representation(fixtures::mutual_failure_representation_text());
    auto bad = is_compatible_representation(rm);
    CHECK(!bad.compatible);
    CHECK(*bad.incompatible_pair == std::pair<std::string, std::string>{"v", "w"});
    CHECK(incompatible_pairs(rm) ==
          std::vector<std::pair<std::string, std::string>>{{"v", "w"}});
}

TEST_CASE("downward-path detection") {
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    CHECK(!is_rdv(r1));  // T(x) branches at x into w and c

    TreeRepresentation chain = parse_representation(
        "t 3 3\nnode r - 0\nnode s r 1\nnode t s 2\nsub p r s\nsub q s t\nsub u t\n");
    CHECK(is_rdv(chain));
    CHECK(is_compatible_representation(chain).compatible);
}

TEST_CASE("bottom-up order sorts by root depth then label") {
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    CHECK(bottom_up_order(r1) == fixtures::fig1_order());

    TreeRepresentation r3 = parse_representation(fixtures::fig3_representation_text());
    CHECK(bottom_up_order(r3) == VertexOrder::from_csv("i,j,k,l"));
}

TEST_CASE("subdivision splits weighted arcs into unit chains") {
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    auto report = subdivide_unit_weights(r1, SubdivisionPolicy::extend_none);
    const TreeRepresentation& s = report.result;

    CHECK(s.host.node_count() == 11);  // 7 originals + 4 chain nodes
    for (int i = 0; i < s.host.node_count(); ++i)
        if (s.host.parent(i) >= 0) CHECK(s.host.arc_weight(i) == 1);
    CHECK(node_depth(s.host, "x-c-1") == 3);
    CHECK(node_depth(s.host, "w-b-1") == 4);
    CHECK(node_depth(s.host, "w-a-1") == 4);
    CHECK(node_depth(s.host, "w-a-2") == 5);
    // Original nodes keep their depths.
    for (const auto& id : {"a", "b", "c", "w", "x", "y", "z"})
        CHECK(node_depth(s.host, id) == node_depth(r1.host, id));

    // Chain nodes join exactly the subtrees containing both arc endpoints
    // (member ids come out in host declaration order).
    CHECK(members_of(s, "w") ==
          std::vector<std::string>{"w", "w-b-1", "b", "w-a-1", "w-a-2", "a"});
    CHECK(s.subtree("x").contains(s.host.index_of("w-a-2")));
    CHECK(s.subtree("y").contains(s.host.index_of("x-c-1")));
    CHECK(!s.subtree("z").contains(s.host.index_of("x-c-1")));

    CHECK(report.intersection_preserved);
    CHECK(intersection_graph(s) == parse_graph(fixtures::fig1_graph_text()));
    CHECK(!report.compatible);
    CHECK(report.incompatible ==
          std::vector<std::pair<std::string, std::string>>{{"x", "y"}, {"x", "z"}, {"y", "z"}});
}

TEST_CASE("subdivision with downward extension reports a different failure set") {
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    auto report = subdivide_unit_weights(r1, SubdivisionPolicy::extend_all);
    const TreeRepresentation& s = report.result;

    // Every subtree through an arc's upper endpoint absorbs the chain.
    CHECK(s.subtree("z").contains(s.host.index_of("x-c-1")));
    CHECK(s.subtree("y").contains(s.host.index_of("w-a-2")));

    CHECK(report.intersection_preserved);
    CHECK(!report.compatible);
    CHECK(report.incompatible == std::vector<std::pair<std::string, std::string>>{
                                     {"w", "y"}, {"w", "z"}, {"x", "y"}, {"x", "z"}, {"y", "z"}});
}

TEST_CASE("subdividing an all-unit representation is the identity") {
    Graph g = parse_graph(fixtures::fig1_graph_text());
    TreeRepresentation unit = peo_to_representation(g, fixtures::fig1_order());
    for (auto policy : {SubdivisionPolicy::extend_none, SubdivisionPolicy::extend_all}) {
        auto report = subdivide_unit_weights(unit, policy);
        CHECK(report.result == unit);
        CHECK(report.intersection_preserved);
        CHECK(report.compatible == is_compatible_representation(unit).compatible);
    }
}

TEST_CASE("subdivision incompatibilities are certified by the overshadow test") {
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    for (auto policy : {SubdivisionPolicy::extend_none, SubdivisionPolicy::extend_all}) {
        auto report = subdivide_unit_weights(r1, policy);
        auto labels = report.result.vertex_labels();
        for (const auto& u : labels)
            for (const auto& v : labels) {
                if (u >= v) continue;
                bool listed = std::find(report.incompatible.begin(), report.incompatible.end(),
                                        std::make_pair(u, v)) != report.incompatible.end();
                auto forward = oracle::overshadow_ref(
                    report.result.host, oracle::member_ids(report.result.host, report.result.subtree(u)),
                    oracle::member_ids(report.result.host, report.result.subtree(v)));
                auto backward = oracle::overshadow_ref(
                    report.result.host, oracle::member_ids(report.result.host, report.result.subtree(v)),
                    oracle::member_ids(report.result.host, report.result.subtree(u)));
                CHECK(listed == (!forward.holds && !backward.holds));
            }
    }
}
