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

#include "holant6v/instances.h"

#include <algorithm>

#include "holant6v/errors.h"

namespace holant6v {

const std::vector<Scalar> &scalar_pool() {
    static const std::vector<Scalar> pool = {
        Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar::i(), -Scalar::i(), Scalar(Rational(1, 2)),
    };
    return pool;
}

const std::vector<Scalar> &nonzero_pool() {
    static const std::vector<Scalar> pool(scalar_pool().begin() + 1, scalar_pool().end());
    return pool;
}

Scalar random_scalar(std::mt19937_64 &rng, double zero_probability) {
    if (std::bernoulli_distribution(zero_probability)(rng)) {
        return Scalar(0);
    }
    const auto &pool = nonzero_pool();
    return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
}

SixVertexParams random_six_vertex(std::mt19937_64 &rng, double zero_probability) {
    SixVertexParams p;
    for (int k = 0; k < 6; ++k) {
        p[k] = random_scalar(rng, zero_probability);
    }
    return p;
}

Signature random_signature(std::mt19937_64 &rng, double zero_probability) {
    std::vector<Scalar> values;
    for (int k = 0; k < 16; ++k) {
        values.push_back(random_scalar(rng, zero_probability));
    }
    return Signature(4, std::move(values));
}

SignatureGrid random_wiring(std::mt19937_64 &rng, int vertices) {
    SignatureGrid grid;
    std::vector<Port> ports;
    for (int v = 0; v < vertices; ++v) {
        grid.add_vertex(v, Signature::zero(4));
        for (int slot = 0; slot < 4; ++slot) {
            ports.push_back({v, slot});
        }
    }
    std::shuffle(ports.begin(), ports.end(), rng);
    for (size_t k = 0; k + 1 < ports.size(); k += 2) {
        grid.add_edge(ports[k], ports[k + 1]);
    }
    return grid;
}

SixVertexParams random_params_in_class(std::mt19937_64 &rng, TractableClass cls) {
    if (cls == TractableClass::M) {
        SixVertexParams p;
        for (int k = 0; k < 3; ++k) {
            int keep = std::uniform_int_distribution<int>(0, 1)(rng);
            p[2 * k + keep] = random_scalar(rng, 0.1);
        }
        return p;
    }
    // Rejection sampling; members are common when zeros are frequent.
    for (int attempt = 0; attempt < 100000; ++attempt) {
        SixVertexParams p = random_six_vertex(rng, 0.45);
        Signature f = from_six_vertex(p);
        if (f.is_zero()) {
            continue;
        }
        bool p_member = in_P(f).has_value();
        if (cls == TractableClass::P && p_member) {
            return p;
        }
        // Favour A members outside P so the A solver sees real phases.
        if (cls == TractableClass::A && in_A(f).has_value() && (!p_member || attempt % 4 == 3)) {
            return p;
        }
    }
    throw std::logic_error("could not sample a class member");
}

Signature random_binary(std::mt19937_64 &rng) {
    std::vector<Scalar> values;
    for (int k = 0; k < 4; ++k) {
        values.push_back(random_scalar(rng, 0.25));
    }
    return Signature(2, std::move(values));
}

CspInstance random_csp(std::mt19937_64 &rng, int max_vars, int max_clauses) {
    CspInstance inst;
    inst.num_vars = std::uniform_int_distribution<int>(2, max_vars)(rng);
    int clauses = std::uniform_int_distribution<int>(1, max_clauses)(rng);
    std::uniform_int_distribution<int> var(0, inst.num_vars - 1);
    for (int k = 0; k < clauses; ++k) {
        int u = var(rng);
        int w = var(rng);
        while (w == u) {
            w = var(rng);
        }
        inst.clauses.emplace_back(u, w);
    }
    return inst;
}

uint64_t count_eulerian_orientations(const SignatureGrid &grid) {
    require_valid(grid);
    std::map<int, int> dense;
    for (const auto &[id, _] : grid.vertices) {
        dense.emplace(id, static_cast<int>(dense.size()));
    }
    size_t m = grid.edges.size();
    if (m > 30) {
        throw CapExceeded("orientation enumerator limited to 30 edges");
    }
    uint64_t count = 0;
    std::vector<int> indeg(dense.size());
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        std::fill(indeg.begin(), indeg.end(), 0);
        for (size_t e = 0; e < m; ++e) {
            const Edge &edge = grid.edges[e];
            // Bit set: the edge points at its second port's vertex.
            int head = ((mask >> e) & 1U) ? edge.second.vertex : edge.first.vertex;
            ++indeg[dense[head]];
        }
        if (std::all_of(indeg.begin(), indeg.end(), [](int d) { return d == 2; })) {
            ++count;
        }
    }
    return count;
}

}  // namespace holant6v
