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

#include "holant6v/grid.h"

#include <algorithm>
#include <numeric>

#include "holant6v/errors.h"

namespace holant6v {

ValidationError::ValidationError(std::vector<std::string> diags)
    : InputError([&] {
          std::string msg = "invalid signature grid";
          for (const auto &d : diags) {
              msg += "\n  " + d;
          }
          return msg;
      }()),
      diagnostics(std::move(diags)) {
}

std::string Port::str() const {
    return "(" + std::to_string(vertex) + ", " + std::to_string(slot) + ")";
}

void SignatureGrid::add_vertex(int id, Signature signature) {
    vertices.insert_or_assign(id, std::move(signature));
}

void SignatureGrid::add_edge(Port a, Port b) {
    edges.push_back({a, b});
}

std::vector<std::string> validate(const SignatureGrid &grid) {
    std::vector<std::string> problems;
    std::map<Port, size_t> used;
    for (const auto &[id, sig] : grid.vertices) {
        if (sig.arity() != 4) {
            problems.push_back("vertex " + std::to_string(id) + " has arity " + std::to_string(sig.arity()) +
                               ", expected 4");
        }
    }
    for (size_t e = 0; e < grid.edges.size(); ++e) {
        for (const Port &p : {grid.edges[e].first, grid.edges[e].second}) {
            auto it = grid.vertices.find(p.vertex);
            if (it == grid.vertices.end()) {
                problems.push_back("edge #" + std::to_string(e) + " references port " + p.str() +
                                   " of unknown vertex " + std::to_string(p.vertex));
                continue;
            }
            if (p.slot < 0 || p.slot >= 4) {
                problems.push_back("edge #" + std::to_string(e) + " references port " + p.str() +
                                   " with slot outside [0, 3]");
                continue;
            }
            auto [pos, inserted] = used.emplace(p, e);
            if (!inserted) {
                if (pos->second == e) {
                    problems.push_back("edge #" + std::to_string(e) + " joins port " + p.str() + " to itself");
                } else {
                    problems.push_back("port " + p.str() + " is used by edges #" + std::to_string(pos->second) +
                                       " and #" + std::to_string(e));
                }
            }
        }
    }
    for (const auto &[id, sig] : grid.vertices) {
        for (int slot = 0; slot < 4; ++slot) {
            Port p{id, slot};
            if (!used.contains(p)) {
                problems.push_back("port " + p.str() + " is not covered by any edge");
            }
        }
    }
    return problems;
}

void require_valid(const SignatureGrid &grid) {
    auto problems = validate(grid);
    if (!problems.empty()) {
        throw ValidationError(std::move(problems));
    }
}

SignatureGrid build_torus(int n, const Signature &f) {
    if (n < 2) {
        throw InputError("torus size must be at least 2, got " + std::to_string(n));
    }
    SignatureGrid grid;
    for (int v = 0; v < n * n; ++v) {
        grid.add_vertex(v, f);
    }
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            int v = r * n + c;
            int right = r * n + (c + 1) % n;
            int down = ((r + 1) % n) * n + c;
            grid.add_edge({v, kEast}, {right, kWest});
            grid.add_edge({v, kSouth}, {down, kNorth});
        }
    }
    return grid;
}

SignatureGrid build_torus(int n, const SixVertexParams &p) {
    return build_torus(n, from_six_vertex(p));
}

std::vector<std::vector<int>> connected_components(const SignatureGrid &grid) {
    std::map<int, int> parent;
    for (const auto &[id, _] : grid.vertices) {
        parent[id] = id;
    }
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const Edge &e : grid.edges) {
        int a = find(e.first.vertex);
        int b = find(e.second.vertex);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (const auto &[id, _] : grid.vertices) {
        groups[find(id)].push_back(id);
    }
    std::vector<std::vector<int>> out;
    for (auto &[_, members] : groups) {
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace holant6v
