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

#include <cstdint>

#include "sctree/graph.hpp"
#include "sctree/representation.hpp"

namespace sct {

/// splitmix64: tiny deterministic PRNG; identical parameters and seed give
/// bit-identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from 0..bound-1 as next() % bound (the modulo mapping is
    /// part of the documented draw sequence; bound must be >= 1).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Random representation whose subtrees are downward paths, so the result is
/// always compatible and its intersection graph strongly chordal.
///
/// Draw sequence (one SplitMix64 stream seeded with `seed`):
///   1. parents: for node i = 2..num_nodes, parent index = 1 + below(i-1);
///   2. weights: for node i = 2..num_nodes, arc weight = 1 + below(max_weight);
///   3. per vertex j = 1..num_vertices: start node = 1 + below(num_nodes),
///      then repeatedly: stop at childless nodes; otherwise draw below(2)
///      (0 stops the walk, geometric(1/2) length) and, when continuing,
///      descend to child number below(#children) in declaration order.
///
/// Node ids are "n1".."n<num_nodes>" (n1 the root), vertex labels
/// "v1".."v<num_vertices>".
TreeRepresentation generate_rdv_representation(int num_nodes, int num_vertices,
                                               int max_weight, std::uint64_t seed);

/// Random unit-weight representation with subtrees grown by random
/// breadth-first expansion, giving chordal (not necessarily strongly
/// chordal) intersection graphs; the representation need not be compatible.
///
/// Draw sequence: parents as above (weights are all 1, no draws), then per
/// vertex: start node = 1 + below(num_nodes), target size = 1 +
/// below(num_nodes), then one below(frontier size) draw per grown node.
/// With num_nodes = 1 every subtree is the root, so the result is K_k.
TreeRepresentation generate_random_chordal_representation(int num_nodes, int num_vertices,
                                                          std::uint64_t seed);

/// The k-sun (k >= 3): clique u1..uk plus independent rim w1..wk where w_i
/// is adjacent to u_i and u_(i mod k)+1.  Chordal but not strongly chordal;
/// deterministic, no seed.
Graph generate_sun(int k);

}  // namespace sct
