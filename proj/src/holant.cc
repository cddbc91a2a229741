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

#include "holant6v/holant.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "holant6v/errors.h"

namespace holant6v {

std::string method_name(EvalMethod m) {
    switch (m) {
        case EvalMethod::brute_force:
            return "brute";
        case EvalMethod::contraction:
            return "contract";
        case EvalMethod::solver_p:
            return "P";
        case EvalMethod::solver_a:
            return "A";
        case EvalMethod::solver_m:
            return "M";
    }
    return "?";
}

namespace {

/// Grid flattened to dense vertex numbers.
struct Flat {
    std::vector<const Signature *> sigs;
    std::vector<std::array<int, 2>> edge_vertex;  // dense vertex of first, second
    std::vector<std::array<int, 2>> edge_slot;
    /// port_edge[v][slot] = edge, port_first[v][slot] = is the first end.
    std::vector<std::array<int, 4>> port_edge;
    std::vector<std::array<bool, 4>> port_first;
};

Flat flatten(const SignatureGrid &grid, const std::map<int, Signature> *override_sigs = nullptr) {
    require_valid(grid);
    Flat flat;
    std::map<int, int> dense;
    for (const auto &[id, sig] : grid.vertices) {
        dense[id] = static_cast<int>(flat.sigs.size());
        if (override_sigs != nullptr) {
            auto it = override_sigs->find(id);
            if (it == override_sigs->end()) {
                throw InputError("no transformed signature for vertex " + std::to_string(id));
            }
            if (it->second.arity() != 4) {
                throw InputError("transformed signature of vertex " + std::to_string(id) + " must have arity 4");
            }
            flat.sigs.push_back(&it->second);
        } else {
            flat.sigs.push_back(&sig);
        }
    }
    flat.port_edge.resize(flat.sigs.size());
    flat.port_first.resize(flat.sigs.size());
    for (size_t e = 0; e < grid.edges.size(); ++e) {
        const Edge &edge = grid.edges[e];
        int a = dense[edge.first.vertex];
        int b = dense[edge.second.vertex];
        flat.edge_vertex.push_back({a, b});
        flat.edge_slot.push_back({edge.first.slot, edge.second.slot});
        flat.port_edge[a][edge.first.slot] = static_cast<int>(e);
        flat.port_first[a][edge.first.slot] = true;
        flat.port_edge[b][edge.second.slot] = static_cast<int>(e);
        flat.port_first[b][edge.second.slot] = false;
    }
    return flat;
}

int far_bit(int b, EdgeKind kind) {
    return kind == EdgeKind::disequality ? 1 - b : b;
}

struct BruteForce {
    const Flat &flat;
    EdgeKind kind;
    std::vector<int> order;
    /// Vertices whose last port is fixed at each depth.
    std::vector<std::vector<int>> completes;
    std::vector<unsigned> index;
    Scalar total;

    void run(size_t depth, const Scalar &partial) {
        if (depth == order.size()) {
            total += partial;
            return;
        }
        int e = order[depth];
        auto [va, vb] = flat.edge_vertex[e];
        auto [sa, sb] = flat.edge_slot[e];
        for (int b = 0; b < 2; ++b) {
            unsigned save_a = index[va];
            unsigned save_b = index[vb];
            index[va] |= static_cast<unsigned>(b) << (3 - sa);
            index[vb] |= static_cast<unsigned>(far_bit(b, kind)) << (3 - sb);
            Scalar next = partial;
            bool zero = false;
            for (int v : completes[depth]) {
                const Scalar &w = (*flat.sigs[v])[index[v]];
                if (w.is_zero()) {
                    zero = true;
                    break;
                }
                if (!w.is_one()) {
                    next *= w;
                }
            }
            if (!zero) {
                run(depth + 1, next);
            }
            index[va] = save_a;
            index[vb] = save_b;
        }
    }
};

EvalResult brute_force_flat(const Flat &flat, const EvalLimits &limits, EdgeKind kind) {
    size_t num_edges = flat.edge_vertex.size();
    if (num_edges > limits.brute_force_edge_cap) {
        throw CapExceeded("brute force limited to " + std::to_string(limits.brute_force_edge_cap) +
                          " edges, grid has " + std::to_string(num_edges));
    }
    BruteForce bf{flat, kind, {}, {}, std::vector<unsigned>(flat.sigs.size(), 0), Scalar(0)};
    // Visit edges vertex by vertex so products close early and zeros prune.
    std::vector<bool> taken(num_edges, false);
    for (size_t v = 0; v < flat.sigs.size(); ++v) {
        for (int slot = 0; slot < 4; ++slot) {
            int e = flat.port_edge[v][slot];
            if (!taken[e]) {
                taken[e] = true;
                bf.order.push_back(e);
            }
        }
    }
    std::vector<int> last(flat.sigs.size(), -1);
    for (size_t k = 0; k < bf.order.size(); ++k) {
        for (int v : flat.edge_vertex[bf.order[k]]) {
            last[v] = static_cast<int>(k);
        }
    }
    bf.completes.resize(bf.order.size());
    for (size_t v = 0; v < flat.sigs.size(); ++v) {
        bf.completes[last[v]].push_back(static_cast<int>(v));
    }
    bf.run(0, Scalar(1));
    EvalResult r;
    r.value = bf.total;
    r.method = EvalMethod::brute_force;
    r.assignments = num_edges >= 64 ? UINT64_MAX : (uint64_t{1} << num_edges);
    return r;
}

struct Tensor {
    /// Edge carried by each bit; bit k of the flat index is edges[k].
    std::vector<int> edges;
    std::vector<Scalar> data;
};

Tensor vertex_tensor(const Flat &flat, int v, EdgeKind kind) {
    std::vector<int> open;
    std::vector<int> loops;
    for (int slot = 0; slot < 4; ++slot) {
        int e = flat.port_edge[v][slot];
        bool is_loop = flat.edge_vertex[e][0] == flat.edge_vertex[e][1];
        auto &list = is_loop ? loops : open;
        if (std::find(list.begin(), list.end(), e) == list.end()) {
            list.push_back(e);
        }
    }
    Tensor t;
    t.edges = open;
    t.data.assign(size_t{1} << open.size(), Scalar(0));
    const Signature &sig = *flat.sigs[v];
    for (size_t o = 0; o < t.data.size(); ++o) {
        for (size_t l = 0; l < (size_t{1} << loops.size()); ++l) {
            unsigned index = 0;
            for (int slot = 0; slot < 4; ++slot) {
                int e = flat.port_edge[v][slot];
                int b;
                auto pos = std::find(open.begin(), open.end(), e);
                if (pos != open.end()) {
                    b = static_cast<int>((o >> (pos - open.begin())) & 1U);
                } else {
                    auto lpos = std::find(loops.begin(), loops.end(), e);
                    b = static_cast<int>((l >> (lpos - loops.begin())) & 1U);
                }
                if (!flat.port_first[v][slot]) {
                    b = far_bit(b, kind);
                }
                index |= static_cast<unsigned>(b) << (3 - slot);
            }
            t.data[o] += sig[index];
        }
    }
    return t;
}

std::vector<int> symmetric_difference(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> out;
    for (int e : a) {
        if (std::find(b.begin(), b.end(), e) == b.end()) {
            out.push_back(e);
        }
    }
    for (int e : b) {
        if (std::find(a.begin(), a.end(), e) == a.end()) {
            out.push_back(e);
        }
    }
    return out;
}

/// Open edges of each initial tensor, in the same order vertex_tensor uses.
std::vector<std::vector<int>> initial_edge_sets(const Flat &flat) {
    std::vector<std::vector<int>> sets;
    for (size_t v = 0; v < flat.sigs.size(); ++v) {
        std::vector<int> open;
        for (int slot = 0; slot < 4; ++slot) {
            int e = flat.port_edge[v][slot];
            if (flat.edge_vertex[e][0] != flat.edge_vertex[e][1] &&
                std::find(open.begin(), open.end(), e) == open.end()) {
                open.push_back(e);
            }
        }
        sets.push_back(open);
    }
    return sets;
}

ContractionPlan greedy_plan_flat(const Flat &flat) {
    std::vector<std::vector<int>> sets = initial_edge_sets(flat);
    std::set<int> live;
    ContractionPlan plan;
    for (size_t v = 0; v < sets.size(); ++v) {
        live.insert(static_cast<int>(v));
        plan.peak_rank = std::max(plan.peak_rank, static_cast<int>(sets[v].size()));
    }
    // holders[e]: the live tensors currently carrying edge e.
    std::vector<std::vector<int>> holders(flat.edge_vertex.size());
    for (size_t t = 0; t < sets.size(); ++t) {
        for (int e : sets[t]) {
            holders[e].push_back(static_cast<int>(t));
        }
    }
    while (live.size() > 1) {
        std::tuple<size_t, int, int> best{SIZE_MAX, 0, 0};
        for (int t : live) {
            for (int e : sets[t]) {
                int other = holders[e][0] == t ? holders[e][1] : holders[e][0];
                if (other <= t) {
                    continue;
                }
                std::tuple<size_t, int, int> cand{symmetric_difference(sets[t], sets[other]).size(), t, other};
                best = std::min(best, cand);
            }
        }
        auto [size, a, b] = best;
        if (size == SIZE_MAX) {
            a = *live.begin();
            b = *std::next(live.begin());
        }
        std::vector<int> merged = symmetric_difference(sets[a], sets[b]);
        int id = static_cast<int>(sets.size());
        for (int e : merged) {
            for (int &h : holders[e]) {
                if (h == a || h == b) {
                    h = id;
                }
            }
        }
        plan.peak_rank = std::max(plan.peak_rank, static_cast<int>(merged.size()));
        sets.push_back(std::move(merged));
        live.erase(a);
        live.erase(b);
        live.insert(id);
        plan.steps.emplace_back(a, b);
    }
    return plan;
}

Tensor merge(const Tensor &a, const Tensor &b) {
    std::vector<int> shared;
    std::vector<int> only_a;
    std::vector<int> only_b;
    for (int e : a.edges) {
        (std::find(b.edges.begin(), b.edges.end(), e) != b.edges.end() ? shared : only_a).push_back(e);
    }
    for (int e : b.edges) {
        if (std::find(a.edges.begin(), a.edges.end(), e) == a.edges.end()) {
            only_b.push_back(e);
        }
    }
    // Gather both operands into [shared][own] blocks.
    auto gather = [&](const Tensor &t, const std::vector<int> &own) {
        std::vector<size_t> dest_bit(t.edges.size());
        for (size_t k = 0; k < t.edges.size(); ++k) {
            auto pos = std::find(own.begin(), own.end(), t.edges[k]);
            if (pos != own.end()) {
                dest_bit[k] = static_cast<size_t>(pos - own.begin());
            } else {
                auto spos = std::find(shared.begin(), shared.end(), t.edges[k]);
                dest_bit[k] = own.size() + static_cast<size_t>(spos - shared.begin());
            }
        }
        std::vector<Scalar> out(t.data.size());
        for (size_t i = 0; i < t.data.size(); ++i) {
            size_t j = 0;
            for (size_t k = 0; k < t.edges.size(); ++k) {
                j |= ((i >> k) & 1U) << dest_bit[k];
            }
            out[j] = t.data[i];
        }
        return out;
    };
    std::vector<Scalar> ga = gather(a, only_a);
    std::vector<Scalar> gb = gather(b, only_b);
    size_t np = size_t{1} << only_a.size();
    size_t nq = size_t{1} << only_b.size();
    size_t ns = size_t{1} << shared.size();
    Tensor out;
    out.edges = only_b;
    out.edges.insert(out.edges.end(), only_a.begin(), only_a.end());
    out.data.assign(np * nq, Scalar(0));
    for (size_t s = 0; s < ns; ++s) {
        const Scalar *brow = &gb[s * nq];
        for (size_t p = 0; p < np; ++p) {
            const Scalar &x = ga[s * np + p];
            if (x.is_zero()) {
                continue;
            }
            Scalar *orow = &out.data[p * nq];
            for (size_t q = 0; q < nq; ++q) {
                if (!brow[q].is_zero()) {
                    orow[q] += x * brow[q];
                }
            }
        }
    }
    return out;
}

EvalResult contract_flat(const Flat &flat, const ContractionPlan &given, const EvalLimits &limits, EdgeKind kind) {
    size_t n = flat.sigs.size();
    EvalResult r;
    r.method = EvalMethod::contraction;
    if (n == 0) {
        r.value = Scalar(1);
        return r;
    }
    ContractionPlan plan = given.steps.empty() && n > 1 ? greedy_plan_flat(flat) : given;
    if (plan.steps.size() != n - 1) {
        throw InputError("contraction plan must have " + std::to_string(n - 1) + " steps, got " +
                         std::to_string(plan.steps.size()));
    }
    // Check the plan symbolically before touching any data.
    std::vector<std::vector<int>> sets = initial_edge_sets(flat);
    std::vector<bool> alive(sets.size(), true);
    int peak = 0;
    for (const auto &s : sets) {
        peak = std::max(peak, static_cast<int>(s.size()));
    }
    for (size_t k = 0; k < plan.steps.size(); ++k) {
        auto [a, b] = plan.steps[k];
        if (a == b || a < 0 || b < 0 || a >= static_cast<int>(sets.size()) || b >= static_cast<int>(sets.size()) ||
            !alive[a] || !alive[b]) {
            throw InputError("contraction plan step " + std::to_string(k) + " refers to a tensor that is not live");
        }
        auto merged = symmetric_difference(sets[a], sets[b]);
        int rank = static_cast<int>(merged.size());
        if (rank > limits.contraction_rank_cap) {
            throw CapExceeded("contraction step " + std::to_string(k) + " produces rank " + std::to_string(rank) +
                              ", cap is " + std::to_string(limits.contraction_rank_cap));
        }
        peak = std::max(peak, rank);
        alive[a] = alive[b] = false;
        alive.push_back(true);
        sets.push_back(std::move(merged));
    }
    std::vector<Tensor> tensors;
    tensors.reserve(2 * n);
    for (size_t v = 0; v < n; ++v) {
        tensors.push_back(vertex_tensor(flat, static_cast<int>(v), kind));
    }
    r.peak_rank = peak;
    for (auto [a, b] : plan.steps) {
        Tensor t = merge(tensors[a], tensors[b]);
        tensors[a] = Tensor{};
        tensors[b] = Tensor{};
        bool all_zero = std::all_of(t.data.begin(), t.data.end(), [](const Scalar &s) { return s.is_zero(); });
        if (all_zero) {
            r.value = Scalar(0);
            return r;
        }
        tensors.push_back(std::move(t));
    }
    r.value = tensors.back().data.at(0);
    return r;
}

}  // namespace

EvalResult brute_force_eval(const SignatureGrid &grid, const EvalLimits &limits, EdgeKind kind) {
    return brute_force_flat(flatten(grid), limits, kind);
}

Scalar eval_bipartite_equality(const SignatureGrid &grid, const std::map<int, Signature> &transformed,
                               const EvalLimits &limits) {
    return brute_force_flat(flatten(grid, &transformed), limits, EdgeKind::equality).value;
}

ContractionPlan greedy_plan(const SignatureGrid &grid) {
    return greedy_plan_flat(flatten(grid));
}

EvalResult contract_eval(const SignatureGrid &grid, const ContractionPlan &plan, const EvalLimits &limits,
                         EdgeKind kind) {
    return contract_flat(flatten(grid), plan, limits, kind);
}

}  // namespace holant6v
