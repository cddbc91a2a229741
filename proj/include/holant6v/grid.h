// Copyright 2026 The holant6v Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLANT6V_GRID_H
#define HOLANT6V_GRID_H

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holant6v/signature.h"

namespace holant6v {

/// Slot `slot` of vertex `vertex`; slot i carries variable x_{i+1}.
struct Port {
    int vertex = 0;
    int slot = 0;

    friend bool operator==(const Port &, const Port &) = default;
    friend auto operator<=>(const Port &, const Port &) = default;
    std::string str() const;
};

/// Two ports joined by an edge. The edge carries a binary constraint between
/// its two ends (disequality for Holant(!=2 | f)).
struct Edge {
    Port first;
    Port second;

    bool is_loop() const {
        return first.vertex == second.vertex;
    }
};

/// A 4-regular multigraph with one arity-4 signature per vertex. Self-loops
/// and parallel edges are allowed.
struct SignatureGrid {
    std::map<int, Signature> vertices;
    std::vector<Edge> edges;

    void add_vertex(int id, Signature signature);
    void add_edge(Port a, Port b);
};

/// Empty when the grid is well-formed; otherwise one message per problem,
/// each naming the offending port or vertex.
std::vector<std::string> validate(const SignatureGrid &grid);
/// Throws ValidationError when validate() reports problems.
void require_valid(const SignatureGrid &grid);

/// Slot convention of build_torus.
enum TorusSlot { kNorth = 0, kEast = 1, kSouth = 2, kWest = 3 };

/// n x n torus; vertex r*n + c, east/south ports linked to the west/north
/// ports of the right/lower neighbour with wraparound. Requires n >= 2.
SignatureGrid build_torus(int n, const SixVertexParams &p);

/// Same torus wiring with an arbitrary arity-4 signature at every vertex.
SignatureGrid build_torus(int n, const Signature &f);

/// Connected components as lists of vertex ids (ascending), ordered by
/// smallest member.
std::vector<std::vector<int>> connected_components(const SignatureGrid &grid);

}  // namespace holant6v

#endif
