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

#include "sctree/selftest.hpp"

#include <ostream>
#include <vector>

#include "sctree/extraction.hpp"
#include "sctree/fixtures.hpp"
#include "sctree/generators.hpp"
#include "sctree/orders.hpp"
#include "sctree/recognition.hpp"
#include "sctree/representation.hpp"

namespace sct {

int run_selftest(std::ostream& out) {
    int failures = 0;
    auto check = [&](bool ok, const char* what) {
        out << (ok ? "ok" : "FAIL") << " - " << what << "\n";
        if (!ok) ++failures;
    };

    Graph g1 = parse_graph(fixtures::fig1_graph_text());
    TreeRepresentation r1 = parse_representation(fixtures::fig1_representation_text());
    check(intersection_graph(r1) == g1, "weighted fixture reproduces its graph");
    check(is_strong_elimination_order(g1, fixtures::fig1_order()).valid,
          "fixture order is a strong elimination order");
    check(seo_to_representation(g1, fixtures::fig1_order()) == r1,
          "construction from the fixture order matches the fixture");
    check(is_compatible_representation(r1).compatible, "weighted fixture is compatible");
    auto ex1 = extract_strong_elimination_order(r1);
    check(ex1.succeeded() && ex1.order == fixtures::fig1_order(),
          "extraction recovers the fixture order");

    auto a = fixtures::fig2a();
    bool fig2a_ok = overshadows(a.host, a.t1, a.t2).holds && overshadows(a.host, a.t2, a.t3).holds;
    auto broken = overshadows(a.host, a.t1, a.t3);
    fig2a_ok = fig2a_ok && !broken.holds && broken.witness && *broken.witness == "R" &&
               overshadows(a.host, a.t3, a.t1).holds;
    check(fig2a_ok, "overshadowing is not transitive on the two-leaf host");

    auto b = fixtures::fig2b();
    bool fig2b_ok = true;
    const Subtree* ts[3] = {&b.t1, &b.t2, &b.t3};
    for (int i = 0; i < 3 && fig2b_ok; ++i)
        for (int j = 0; j < 3 && fig2b_ok; ++j) {
            if (i == j) continue;
            auto v = overshadows(b.host, *ts[i], *ts[j]);
            fig2b_ok = v.holds && v.cutoff && *v.cutoff == 0;
        }
    check(fig2b_ok, "three-leaf star subtrees overshadow cyclically at cutoff 0");

    Graph g3 = parse_graph(fixtures::fig3_graph_text());
    TreeRepresentation r3 = parse_representation(fixtures::fig3_representation_text());
    check(intersection_graph(r3) == g3, "negative control reproduces its graph");
    check(!is_strong_elimination_order(g3, bottom_up_order(r3)).valid,
          "negative control's bottom-up order is rejected");
    auto ex3 = extract_strong_elimination_order(r3);
    check(ex3.succeeded() && is_strong_elimination_order(g3, *ex3.order).valid,
          "extraction still finds an order for the negative control");

    auto mutual = parse_representation(fixtures::mutual_failure_representation_text());
    auto exm = extract_strong_elimination_order(mutual);
    check(!exm.succeeded() && exm.cycle == std::vector<std::string>{"v", "w"},
          "mutually non-overshadowing pair yields the 2-cycle certificate");

    Graph sun = generate_sun(3);
    check(greedy_simplicial_elimination(sun).success, "the 3-sun is chordal");
    check(!greedy_simple_elimination(sun).success, "the 3-sun has no simple vertex");
    auto bf = brute_force_seo(sun);
    check(!bf.found && bf.permutations_tried == 720,
          "no permutation of the 3-sun is a strong elimination order");
    auto def = definitional_strongly_chordal(sun);
    check(!def.strongly_chordal &&
              def.offending_cycle ==
                  std::vector<std::string>{"u1", "w1", "u2", "w2", "u3", "w3"},
          "the 3-sun's 6-cycle has no odd chord");

    auto none = subdivide_unit_weights(r1, SubdivisionPolicy::extend_none);
    check(none.intersection_preserved && !none.compatible,
          "subdivision preserves the graph but breaks compatibility");
    auto all = subdivide_unit_weights(r1, SubdivisionPolicy::extend_all);
    check(all.intersection_preserved && !all.compatible,
          "extending subtrees down the chains does not restore compatibility");

    return failures;
}

}  // namespace sct
