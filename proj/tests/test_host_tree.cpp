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

#include "oracles.hpp"
#include "sctree/fixtures.hpp"
#include "sctree/host_tree.hpp"
#include "sctree/representation.hpp"

using namespace sct;

namespace {
HostTree fig1_host() {
    return parse_representation(fixtures::fig1_representation_text()).host;
}
}  // namespace

TEST_CASE("host tree depths accumulate arc weights") {
    HostTree t = fig1_host();
    CHECK(t.node_count() == 7);
    CHECK(node_depth(t, "z") == 0);
    CHECK(node_depth(t, "y") == 1);
    CHECK(node_depth(t, "x") == 2);
    CHECK(node_depth(t, "w") == 3);
    CHECK(node_depth(t, "c") == 4);
    CHECK(node_depth(t, "b") == 5);
    CHECK(node_depth(t, "a") == 6);
    CHECK(t.id_of(t.root()) == "z");
    CHECK(t.parent(t.index_of("z")) == -1);
    CHECK(t.arc_weight(t.index_of("a")) == 3);
    // Children keep declaration order.
    const auto& kids = t.children(t.index_of("x"));
    CHECK(kids.size() == 2);
    CHECK(t.id_of(kids[0]) == "w");
    CHECK(t.id_of(kids[1]) == "c");
}

TEST_CASE("host tree construction rejects malformed node lists") {
    using Spec = std::vector<HostNodeSpec>;
    CHECK_THROWS_AS(HostTree(Spec{}), std::invalid_argument);                       // no root
    CHECK_THROWS_AS(HostTree(Spec{{"r", std::nullopt, 0}, {"r", "r", 1}}),
                    std::invalid_argument);                                         // duplicate id
    CHECK_THROWS_AS(HostTree(Spec{{"r", std::nullopt, 0}, {"s", std::nullopt, 0}}),
                    std::invalid_argument);                                         // two roots
    CHECK_THROWS_AS(HostTree(Spec{{"a", "r", 1}, {"r", std::nullopt, 0}}),
                    std::invalid_argument);                                         // child first
    CHECK_THROWS_AS(HostTree(Spec{{"r", std::nullopt, 0}, {"a", "q", 1}}),
                    std::invalid_argument);                                         // unknown parent
    CHECK_THROWS_AS(HostTree(Spec{{"r", std::nullopt, 0}, {"a", "r", 0}}),
                    std::invalid_argument);                                         // zero weight
    CHECK_THROWS_AS(HostTree(Spec{{"r", std::nullopt, 0}, {"a", "r", -2}}),
                    std::invalid_argument);                                         // negative weight
}

TEST_CASE("subtree validation demands nonempty connected member sets") {
    HostTree t = fig1_host();
    CHECK(is_valid_subtree(t, {"x", "w", "a", "b", "c"}).valid);
    CHECK(*is_valid_subtree(t, {"w", "a", "b"}).root == "w");

    CHECK(!is_valid_subtree(t, {}).valid);
    CHECK(!is_valid_subtree(t, {"a", "b"}).valid);  // siblings without their parent
    CHECK(is_valid_subtree(t, {"a", "b"}).reason == "subtree not connected");
    CHECK(!is_valid_subtree(t, {"a", "nope"}).valid);
    CHECK(!is_valid_subtree(t, {"a", "a"}).valid);
    CHECK(!is_valid_subtree(t, {"z", "x"}).valid);  // gap at y

    CHECK_THROWS_AS(make_subtree(t, {"a", "b"}), std::invalid_argument);
    Subtree s = make_subtree(t, {"w", "b", "a"});
    CHECK(s.size() == 3);
    CHECK(t.id_of(s.root()) == "w");
    CHECK(s.contains(t.index_of("a")));
    CHECK(!s.contains(t.index_of("x")));
}

TEST_CASE("overshadow verdicts on the worked triples") {
    auto A = fixtures::fig2a();
    CHECK(overshadows(A.host, A.t1, A.t2).holds);
    CHECK(overshadows(A.host, A.t1, A.t2).disjoint);
    CHECK(overshadows(A.host, A.t2, A.t3).holds);
    auto broken = overshadows(A.host, A.t1, A.t3);
    CHECK(!broken.holds);
    CHECK(*broken.cutoff == 1);
    CHECK(*broken.witness == "R");
    CHECK(overshadows(A.host, A.t3, A.t1).holds);
    CHECK(compatible_pair(A.host, A.t1, A.t3).compatible());
    CHECK(!compatible_pair(A.host, A.t1, A.t3).forward);
    CHECK(compatible_pair(A.host, A.t1, A.t3).backward);

    auto B = fixtures::fig2b();
    const Subtree* ts[3] = {&B.t1, &B.t2, &B.t3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            auto v = overshadows(B.host, *ts[i], *ts[j]);
            CHECK(v.holds);
            CHECK(!v.disjoint);
            CHECK(*v.cutoff == 0);
        }
}

TEST_CASE("overshadow on the weighted fixture subtrees") {
    TreeRepresentation r = parse_representation(fixtures::fig1_representation_text());
    const HostTree& t = r.host;

    auto wx = overshadows(t, r.subtree("w"), r.subtree("x"));
    CHECK(!wx.holds);
    CHECK(*wx.cutoff == 6);      // deepest shared node is a
    CHECK(*wx.witness == "x");   // min depth 2, no tie
    auto xw = overshadows(t, r.subtree("x"), r.subtree("w"));
    CHECK(xw.holds);             // T(w) minus T(x) is empty
    CHECK(*xw.cutoff == 6);

    auto wz = overshadows(t, r.subtree("w"), r.subtree("z"));
    CHECK(!wz.holds);
    CHECK(*wz.witness == "z");
    CHECK(overshadows(t, r.subtree("z"), r.subtree("w")).holds);

    // Later subtree overshadows earlier one for every pair of the order.
    auto order = fixtures::fig1_order();
    for (int k = 1; k <= order.size(); ++k)
        for (int l = k + 1; l <= order.size(); ++l)
            CHECK(overshadows(t, r.subtree(order.at(l)), r.subtree(order.at(k))).holds);
}

TEST_CASE("overshadow matches the raw-definition reference everywhere") {
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    TreeRepresentation r3 = parse_representation(fixtures::fig3_representation_text());
    TreeRepresentation rm = parse_representation(fixtures::mutual_failure_representation_text());
    for (const TreeRepresentation* r : {&r1, &r3, &rm}) {
        auto labels = r->vertex_labels();
        for (const auto& u : labels)
            for (const auto& v : labels) {
                if (u == v) continue;
                auto got = overshadows(r->host, r->subtree(u), r->subtree(v));
                auto want = oracle::overshadow_ref(r->host,
                                                   oracle::member_ids(r->host, r->subtree(u)),
                                                   oracle::member_ids(r->host, r->subtree(v)));
                CAPTURE(u);
                CAPTURE(v);
                CHECK(got.holds == want.holds);
                CHECK(got.disjoint == want.disjoint);
                CHECK(got.cutoff == want.cutoff);
                CHECK(got.witness == want.witness);
            }
    }
}

TEST_CASE("witness tie-break picks minimum depth then minimum id") {
    // Two candidate witnesses at equal depth 1: "A" wins over "B".
    HostTree t({{"r", std::nullopt, 0},
                {"m", "r", 2},
                {"B", "r", 1},
                {"A", "r", 1}});
    Subtree t1 = make_subtree(t, {"r", "m"});
    Subtree t2 = make_subtree(t, {"r", "m", "A", "B"});
    auto v = overshadows(t, t1, t2);
    CHECK(!v.holds);
    CHECK(*v.cutoff == 2);
    CHECK(*v.witness == "A");
}
