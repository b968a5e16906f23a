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

#include "sctree/graph.hpp"
#include "sctree/host_tree.hpp"
#include "sctree/representation.hpp"

namespace sct::fixtures {

/// 7-vertex worked example: a,b,c,w,x,y,z with 12 edges; (a,b,c,w,x,y,z) is
/// a strong elimination order and deg(x) = 6.
const char* fig1_graph_text();

/// The weighted representation determined by the order (a,b,c,w,x,y,z):
/// depths z..a = 0..6, arc weights x->y 1, c->x 2, b->w 2, a->w 3.
const char* fig1_representation_text();

VertexOrder fig1_order();

/// 4-vertex negative control: edges ik, il, jk, kl; its bottom-up order
/// (i,j,k,l) is not a strong elimination order, but extraction finds one.
const char* fig3_graph_text();
const char* fig3_representation_text();

struct SubtreeTriple {
    HostTree host;
    Subtree t1, t2, t3;
};

/// Root R with unit-weight children L and M; T1 = {L}, T2 = {M},
/// T3 = {R,L}.  Overshadowing is not transitive here: T1 >= T2 >= T3 but
/// T1 does not overshadow T3 (witness R), while T3 >= T1.
SubtreeTriple fig2a();

/// Root R with unit-weight children C1..C3; Ti = {R,Ci}.  All three trees
/// pairwise intersect at R and overshadow cyclically with cutoff 0.
SubtreeTriple fig2b();

/// A 2-vertex representation whose subtrees fail to overshadow each other in
/// both directions, so extraction reports the length-2 cycle (v,w).
const char* mutual_failure_representation_text();

}  // namespace sct::fixtures
