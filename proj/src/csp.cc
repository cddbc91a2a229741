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

#include "holant6v/csp.h"

#include "holant6v/errors.h"

namespace holant6v {

namespace {

void check_instance(const Signature &g, const CspInstance &inst) {
    if (g.arity() != 2) {
        throw InputError("CSP constraint must be binary");
    }
    if (inst.num_vars < 0) {
        throw InputError("negative variable count");
    }
    for (size_t i = 0; i < inst.clauses.size(); ++i) {
        auto [u, w] = inst.clauses[i];
        if (u < 0 || u >= inst.num_vars || w < 0 || w >= inst.num_vars) {
            throw InputError("clause " + std::to_string(i) + " references an unknown variable");
        }
        if (u == w) {
            throw InputError("clause " + std::to_string(i) + " applies g to variable " + std::to_string(u) +
                             " twice");
        }
    }
}

}  // namespace

Scalar csp_partition_function(const Signature &g, const CspInstance &inst) {
    check_instance(g, inst);
    if (inst.num_vars > 24) {
        throw CapExceeded("CSP brute force limited to 24 variables");
    }
    Scalar total(0);
    for (uint64_t assign = 0; assign < (uint64_t{1} << inst.num_vars); ++assign) {
        Scalar w(1);
        for (auto [u, v] : inst.clauses) {
            w *= g[((assign >> u) & 1U) * 2 + ((assign >> v) & 1U)];
            if (w.is_zero()) {
                break;
            }
        }
        total += w;
    }
    return total;
}

SixVertexParams csp_vertex_params(const Signature &g) {
    if (g.arity() != 2) {
        throw InputError("CSP constraint must be binary");
    }
    return {Scalar(0), Scalar(0), g[0b00], g[0b11], g[0b01], g[0b10]};
}

CspReduction csp_reduction(const Signature &g, const CspInstance &inst) {
    check_instance(g, inst);
    CspReduction out;
    Signature f = from_six_vertex(csp_vertex_params(g));
    // Occurrences of each variable as (clause, entry slot, exit slot).
    struct Occurrence {
        int clause;
        int in_slot;
        int out_slot;
    };
    std::vector<std::vector<Occurrence>> occ(static_cast<size_t>(inst.num_vars));
    for (size_t i = 0; i < inst.clauses.size(); ++i) {
        auto [u, w] = inst.clauses[i];
        int id = static_cast<int>(i);
        out.grid.add_vertex(id, f);
        occ[u].push_back({id, 0, 1});
        occ[w].push_back({id, 3, 2});
    }
    for (const auto &cycle : occ) {
        if (cycle.empty()) {
            out.multiplier *= Scalar(2);
            continue;
        }
        for (size_t k = 0; k < cycle.size(); ++k) {
            const Occurrence &from = cycle[k];
            const Occurrence &to = cycle[(k + 1) % cycle.size()];
            out.grid.add_edge({from.clause, from.out_slot}, {to.clause, to.in_slot});
        }
    }
    return out;
}

}  // namespace holant6v
