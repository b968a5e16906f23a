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

#include "sctree/fixtures.hpp"

namespace sct::fixtures {

const char* fig1_graph_text() {
    return "p edge 7 12\n"
           "v a\n"
           "v b\n"
           "v c\n"
           "v w\n"
           "v x\n"
           "v y\n"
           "v z\n"
           "e a w\n"
           "e a x\n"
           "e b w\n"
           "e b x\n"
           "e c x\n"
           "e c y\n"
           "e w x\n"
           "e w y\n"
           "e w z\n"
           "e x y\n"
           "e x z\n"
           "e y z\n";
}

const char* fig1_representation_text() {
    return "t 7 7\n"
           "node z - 0\n"
           "node y z 1\n"
           "node x y 1\n"
           "node w x 1\n"
           "node c x 2\n"
           "node b w 2\n"
           "node a w 3\n"
           "sub a a\n"
           "sub b b\n"
           "sub c c\n"
           "sub w w a b\n"
           "sub x x a b c w\n"
           "sub y y c w x\n"
           "sub z z w x y\n";
}

VertexOrder fig1_order() { return VertexOrder({"a", "b", "c", "w", "x", "y", "z"}); }

const char* fig3_graph_text() {
    return "p edge 4 4\n"
           "v i\n"
           "v j\n"
           "v k\n"
           "v l\n"
           "e i k\n"
           "e i l\n"
           "e j k\n"
           "e k l\n";
}

const char* fig3_representation_text() {
    return "t 3 4\n"
           "node n1 - 0\n"
           "node n2 n1 2\n"
           "node n3 n1 1\n"
           "sub i n2\n"
           "sub j n3\n"
           "sub k n1 n2 n3\n"
           "sub l n1 n2\n";
}

SubtreeTriple fig2a() {
    HostTree host({{"R", std::nullopt, 0}, {"L", "R", 1}, {"M", "R", 1}});
    Subtree t1 = make_subtree(host, {"L"});
    Subtree t2 = make_subtree(host, {"M"});
    Subtree t3 = make_subtree(host, {"R", "L"});
    return {std::move(host), std::move(t1), std::move(t2), std::move(t3)};
}

SubtreeTriple fig2b() {
    HostTree host({{"R", std::nullopt, 0}, {"C1", "R", 1}, {"C2", "R", 1}, {"C3", "R", 1}});
    Subtree t1 = make_subtree(host, {"R", "C1"});
    Subtree t2 = make_subtree(host, {"R", "C2"});
    Subtree t3 = make_subtree(host, {"R", "C3"});
    return {std::move(host), std::move(t1), std::move(t2), std::move(t3)};
}

const char* mutual_failure_representation_text() {
    return "t 5 2\n"
           "node R - 0\n"
           "node M R 1\n"
           "node S M 1\n"
           "node P R 1\n"
           "node Q R 1\n"
           "sub v R M P S\n"
           "sub w R M Q S\n";
}

}  // namespace sct::fixtures
