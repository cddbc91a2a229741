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

#include "holant6v/solvers.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "holant6v/classify.h"
#include "holant6v/errors.h"

namespace holant6v {

namespace {

int mod4(int v) {
    return ((v % 4) + 4) % 4;
}

std::string vertex_name(int id) {
    return "vertex " + std::to_string(id);
}

/// Dense vertex numbering plus the port -> edge map.
struct Wiring {
    std::vector<int> ids;
    std::map<int, int> dense;
    /// other[v][slot] = (dense vertex, slot) at the far end of the edge.
    std::vector<std::array<std::pair<int, int>, 4>> other;
};

Wiring wiring(const SignatureGrid &grid) {
    require_valid(grid);
    Wiring w;
    for (const auto &[id, _] : grid.vertices) {
        w.dense[id] = static_cast<int>(w.ids.size());
        w.ids.push_back(id);
    }
    w.other.resize(w.ids.size());
    for (const Edge &e : grid.edges) {
        int a = w.dense[e.first.vertex];
        int b = w.dense[e.second.vertex];
        w.other[a][e.first.slot] = {b, e.second.slot};
        w.other[b][e.second.slot] = {a, e.first.slot};
    }
    return w;
}

/// Union-find carrying the parity of each node relative to its root.
struct ParityUnionFind {
    std::vector<int> parent;
    std::vector<int> parity;

    explicit ParityUnionFind(size_t n) : parent(n), parity(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, int> find(int v) {
        int p = 0;
        int r = v;
        while (parent[r] != r) {
            p ^= parity[r];
            r = parent[r];
        }
        // Path compression.
        int cur = v;
        int acc = p;
        while (parent[cur] != cur) {
            int next = parent[cur];
            int next_acc = acc ^ parity[cur];
            parent[cur] = r;
            parity[cur] = acc;
            cur = next;
            acc = next_acc;
        }
        return {r, p};
    }
    /// Requires t_a ^ t_b == rel. Returns false on contradiction.
    bool unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            return (pa ^ pb) == rel;
        }
        parent[rb] = ra;
        parity[rb] = pa ^ pb ^ rel;
        return true;
    }
};

}  // namespace

int QuadraticForm::eval(uint64_t y) const {
    int q = c;
    size_t n = size();
    for (size_t j = 0; j < n; ++j) {
        if ((y >> j) & 1U) {
            q += a[j];
            for (size_t l = j + 1; l < n; ++l) {
                if (((y >> l) & 1U) && cross[j][l]) {
                    q += 2;
                }
            }
        }
    }
    return mod4(q);
}

void QuadraticForm::substitute(size_t k, int constant, const std::vector<size_t> &rest) {
    int ak = a[k];
    int sign = constant ? -1 : 1;
    c = mod4(c + ak * constant);
    for (size_t idx = 0; idx < rest.size(); ++idx) {
        size_t j = rest[idx];
        a[j] = mod4(a[j] + ak * sign);
        if (ak & 1) {
            for (size_t idx2 = idx + 1; idx2 < rest.size(); ++idx2) {
                size_t l = rest[idx2];
                cross[j][l] ^= 1;
                cross[l][j] ^= 1;
            }
        }
    }
    for (size_t l = 0; l < size(); ++l) {
        if (l == k || !cross[k][l]) {
            continue;
        }
        if (constant) {
            a[l] = mod4(a[l] + 2);
        }
        for (size_t j : rest) {
            if (j == l) {
                a[l] = mod4(a[l] + 2);
            } else {
                cross[j][l] ^= 1;
                cross[l][j] ^= 1;
            }
        }
    }
    a[k] = 0;
    for (size_t l = 0; l < size(); ++l) {
        cross[k][l] = 0;
        cross[l][k] = 0;
    }
}

Scalar gauss_sum(QuadraticForm q) {
    size_t n = q.size();
    std::vector<bool> gone(n, false);
    GaussianRational total(1);
    for (size_t k = 0; k < n; ++k) {
        if (gone[k]) {
            continue;
        }
        gone[k] = true;
        int ak = mod4(q.a[k]);
        std::vector<size_t> linked;
        for (size_t l = 0; l < n; ++l) {
            if (l != k && !gone[l] && q.cross[k][l]) {
                linked.push_back(l);
            }
        }
        for (size_t l = 0; l < n; ++l) {
            q.cross[k][l] = 0;
            q.cross[l][k] = 0;
        }
        q.a[k] = 0;
        if (linked.empty() || ak % 2 == 1) {
            // 1 + i^ak is 2, 1+i, 0 or 1-i.
            if (ak == 2) {
                return Scalar(0);
            }
            total *= GaussianRational(1) + GaussianRational::i_power(ak);
            // Summing y_k leaves i^(-ak * XOR of linked) behind.
            for (size_t idx = 0; idx < linked.size(); ++idx) {
                size_t j = linked[idx];
                q.a[j] = mod4(q.a[j] - ak);
                for (size_t idx2 = idx + 1; idx2 < linked.size(); ++idx2) {
                    size_t l = linked[idx2];
                    q.cross[j][l] ^= 1;
                    q.cross[l][j] ^= 1;
                }
            }
            continue;
        }
        // Even a_k: the sum is 2 when XOR of linked equals a_k/2, else 0.
        total *= GaussianRational(2);
        size_t pivot = linked.back();
        linked.pop_back();
        q.substitute(pivot, ak / 2, linked);
        gone[pivot] = true;
    }
    return Scalar(total * GaussianRational::i_power(q.c));
}

Scalar solve_P(const SignatureGrid &grid) {
    Wiring w = wiring(grid);
    size_t n = w.ids.size();
    struct PortInfo {
        int block = 0;
        int bit = 0;
    };
    std::vector<std::array<PortInfo, 4>> ports(n);
    std::vector<std::pair<Scalar, Scalar>> block_weights;
    for (size_t v = 0; v < n; ++v) {
        const Signature &f = grid.vertices.at(w.ids[v]);
        auto cert = in_P(f);
        if (!cert) {
            throw InputError(vertex_name(w.ids[v]) + " is not in P");
        }
        if (cert->zero) {
            return Scalar(0);
        }
        for (const ProductBlock &blk : cert->blocks) {
            int id = static_cast<int>(block_weights.size());
            block_weights.emplace_back(blk.w_u, blk.w_ubar);
            size_t width = blk.vars.size();
            for (size_t k = 0; k < width; ++k) {
                int slot = blk.vars[k] - 1;
                ports[v][slot] = {id, static_cast<int>((blk.u >> (width - 1 - k)) & 1U)};
            }
        }
    }
    // t_B = 0 selects u, 1 selects its complement; edges force parities.
    ParityUnionFind uf(block_weights.size());
    for (size_t v = 0; v < n; ++v) {
        for (int slot = 0; slot < 4; ++slot) {
            auto [u, uslot] = w.other[v][slot];
            const PortInfo &p = ports[v][slot];
            const PortInfo &q = ports[u][uslot];
            if (!uf.unite(p.block, q.block, 1 ^ p.bit ^ q.bit)) {
                return Scalar(0);
            }
        }
    }
    std::map<int, std::pair<Scalar, Scalar>> comp;
    for (size_t b = 0; b < block_weights.size(); ++b) {
        auto [root, parity] = uf.find(static_cast<int>(b));
        auto it = comp.try_emplace(root, Scalar(1), Scalar(1)).first;
        const auto &[wu, wubar] = block_weights[b];
        it->second.first *= parity ? wubar : wu;
        it->second.second *= parity ? wu : wubar;
    }
    Scalar total(1);
    for (const auto &[_, sums] : comp) {
        total *= sums.first + sums.second;
        if (total.is_zero()) {
            break;
        }
    }
    return total;
}

Scalar solve_A(const SignatureGrid &grid) {
    Wiring w = wiring(grid);
    size_t n = w.ids.size();
    std::vector<AffineCertificate> certs;
    std::vector<size_t> offset;
    size_t params = 0;
    Scalar prefactor(1);
    int phase = 0;
    for (size_t v = 0; v < n; ++v) {
        auto cert = in_A(grid.vertices.at(w.ids[v]));
        if (!cert) {
            throw InputError(vertex_name(w.ids[v]) + " is not in A");
        }
        if (cert->lambda.is_zero()) {
            return Scalar(0);
        }
        prefactor *= cert->lambda;
        phase += cert->c;
        offset.push_back(params);
        params += cert->basis.size();
        certs.push_back(std::move(*cert));
    }
    size_t words = (params + 63) / 64 + 1;
    // One row per edge: (port bits of both ends) XOR = 1, over the vertex
    // parameters; the rhs lives in the top bit of the last word.
    const size_t rhs_word = words - 1;
    std::vector<std::vector<uint64_t>> rows;
    auto add_port = [&](std::vector<uint64_t> &row, size_t v, int slot) {
        const AffineCertificate &c = certs[v];
        int shift = 3 - slot;
        if ((c.base >> shift) & 1U) {
            row[rhs_word] ^= 1;
        }
        for (size_t j = 0; j < c.basis.size(); ++j) {
            if ((c.basis[j] >> shift) & 1U) {
                size_t col = offset[v] + j;
                row[col / 64] ^= uint64_t{1} << (col % 64);
            }
        }
    };
    for (const Edge &e : grid.edges) {
        std::vector<uint64_t> row(words, 0);
        row[rhs_word] = 1;
        add_port(row, w.dense[e.first.vertex], e.first.slot);
        add_port(row, w.dense[e.second.vertex], e.second.slot);
        rows.push_back(std::move(row));
    }
    auto get = [](const std::vector<uint64_t> &row, size_t col) { return (row[col / 64] >> (col % 64)) & 1U; };
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < params && r < rows.size(); ++col) {
        size_t found = r;
        while (found < rows.size() && !get(rows[found], col)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[found]);
        for (size_t other = 0; other < rows.size(); ++other) {
            if (other != r && get(rows[other], col)) {
                for (size_t k = 0; k < words; ++k) {
                    rows[other][k] ^= rows[r][k];
                }
            }
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (size_t k = r; k < rows.size(); ++k) {
        if (rows[k][rhs_word] & 1U) {
            return Scalar(0);
        }
    }
    QuadraticForm q(params);
    q.c = mod4(phase);
    for (size_t v = 0; v < n; ++v) {
        const AffineCertificate &c = certs[v];
        size_t d = c.basis.size();
        for (size_t j = 0; j < d; ++j) {
            q.a[offset[v] + j] = mod4(c.a[j]);
            for (size_t k = j + 1; k < d; ++k) {
                q.cross[offset[v] + j][offset[v] + k] = static_cast<uint8_t>(c.b[j][k]);
                q.cross[offset[v] + k][offset[v] + j] = static_cast<uint8_t>(c.b[j][k]);
            }
        }
    }
    // Eliminate pivot parameters; the rest stay free.
    std::vector<bool> is_pivot(params, false);
    for (size_t col : pivot_col) {
        is_pivot[col] = true;
    }
    for (size_t k = 0; k < r; ++k) {
        size_t col = pivot_col[k];
        std::vector<size_t> rest;
        for (size_t j = 0; j < params; ++j) {
            if (!is_pivot[j] && get(rows[k], j)) {
                rest.push_back(j);
            }
        }
        q.substitute(col, static_cast<int>(rows[k][rhs_word] & 1U), rest);
    }
    // Pivot parameters are fixed by the free ones; sum over the free ones.
    QuadraticForm free_form(params - r);
    std::vector<size_t> index(params, SIZE_MAX);
    size_t next = 0;
    for (size_t j = 0; j < params; ++j) {
        if (!is_pivot[j]) {
            index[j] = next++;
        }
    }
    free_form.c = q.c;
    for (size_t j = 0; j < params; ++j) {
        if (is_pivot[j]) {
            continue;
        }
        free_form.a[index[j]] = q.a[j];
        for (size_t l = 0; l < params; ++l) {
            if (!is_pivot[l]) {
                free_form.cross[index[j]][index[l]] = q.cross[j][l];
            }
        }
    }
    return prefactor * gauss_sum(std::move(free_form));
}

Scalar solve_M(const SignatureGrid &grid) {
    Wiring w = wiring(grid);
    size_t n = w.ids.size();
    std::vector<const Signature *> sigs;
    std::vector<std::vector<size_t>> support(n);
    for (size_t v = 0; v < n; ++v) {
        const Signature &f = grid.vertices.at(w.ids[v]);
        auto p = to_six_vertex(f);
        if (!p || !one_zero_each_pair(*p)) {
            throw InputError(vertex_name(w.ids[v]) + " does not have a zero in each pair");
        }
        sigs.push_back(&f);
        support[v] = f.support();
        if (support[v].empty()) {
            return Scalar(0);
        }
    }
    auto port_bit = [](size_t s, int slot) { return static_cast<int>((s >> (3 - slot)) & 1U); };
    // allowed[v][slot]: bit 0 set if value 0 possible, bit 1 if value 1.
    auto allowed = [&](size_t v, int slot) {
        int mask = 0;
        for (size_t s : support[v]) {
            mask |= 1 << port_bit(s, slot);
        }
        return mask;
    };
    // Arc consistency across the disequality edges.
    std::vector<size_t> queue(n);
    std::iota(queue.begin(), queue.end(), 0);
    std::vector<bool> queued(n, true);
    while (!queue.empty()) {
        size_t v = queue.back();
        queue.pop_back();
        queued[v] = false;
        for (int slot = 0; slot < 4; ++slot) {
            auto [u, uslot] = w.other[v][slot];
            int mine = allowed(v, slot);
            // Values the far end can take are the complements of ours.
            int far = ((mine & 1) << 1) | ((mine >> 1) & 1);
            auto &sup = support[u];
            size_t before = sup.size();
            std::erase_if(sup, [&](size_t s) { return !((far >> port_bit(s, uslot)) & 1); });
            if (sup.empty()) {
                return Scalar(0);
            }
            if (sup.size() != before && !queued[u]) {
                queued[u] = true;
                queue.push_back(u);
            }
        }
    }
    // Remaining vertices: 1 string (fixed), 2 strings (two free ports taking
    // opposite values) or 3 strings (one pinned port, exactly one minority
    // value among the other three).
    Scalar fixed(1);
    std::vector<std::vector<int>> free_slots(n);
    std::vector<int> minority(n, -1);
    for (size_t v = 0; v < n; ++v) {
        if (support[v].size() == 1) {
            fixed *= (*sigs[v])[support[v][0]];
            continue;
        }
        for (int slot = 0; slot < 4; ++slot) {
            if (allowed(v, slot) == 3) {
                free_slots[v].push_back(slot);
            }
        }
        if (support[v].size() == 3) {
            int ones = 0;
            for (int slot : free_slots[v]) {
                ones += port_bit(support[v][0], slot);
            }
            minority[v] = ones == 1 ? 1 : 0;
        }
    }
    // Group free vertices into components of the free-edge graph.
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> members;
    for (size_t v = 0; v < n; ++v) {
        if (free_slots[v].empty() || comp[v] >= 0) {
            continue;
        }
        int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> stack{static_cast<int>(v)};
        comp[v] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members[id].push_back(x);
            for (int slot : free_slots[x]) {
                int y = w.other[x][slot].first;
                if (comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    Scalar total = fixed;
    for (const auto &verts : members) {
        size_t port_count = 0;
        int m = -1;
        for (int v : verts) {
            port_count += free_slots[v].size();
            if (minority[v] >= 0) {
                if (m >= 0 && m != minority[v]) {
                    throw InputError("component mixes minority values 0 and 1 at " + vertex_name(w.ids[v]) +
                                     "; not supported by the M solver");
                }
                m = minority[v];
            }
        }
        if (m < 0) {
            m = 0;
        }
        // Each vertex puts the minority value on one free port; each free
        // edge gets it on exactly one end. Needs as many edges as vertices.
        if (port_count != 2 * verts.size()) {
            return Scalar(0);
        }
        auto weight = [&](int v, int slot) {
            for (size_t s : support[v]) {
                if (port_bit(s, slot) == m) {
                    bool unique = true;
                    for (int other : free_slots[v]) {
                        if (other != slot && port_bit(s, other) == m) {
                            unique = false;
                        }
                    }
                    if (unique) {
                        return (*sigs[v])[s];
                    }
                }
            }
            return Scalar(0);
        };
        // Peel vertices left with a single available port.
        std::map<int, std::set<int>> avail;
        for (int v : verts) {
            avail[v] = std::set<int>(free_slots[v].begin(), free_slots[v].end());
        }
        Scalar forced(1);
        std::set<int> open(verts.begin(), verts.end());
        std::vector<int> leaves;
        for (int v : verts) {
            if (avail[v].size() == 1) {
                leaves.push_back(v);
            }
        }
        while (!leaves.empty()) {
            int v = leaves.back();
            leaves.pop_back();
            if (!open.contains(v)) {
                continue;
            }
            if (avail[v].empty()) {
                return Scalar(0);
            }
            int slot = *avail[v].begin();
            open.erase(v);
            forced *= weight(v, slot);
            auto [u, uslot] = w.other[v][slot];
            avail[v].erase(slot);
            avail[u].erase(uslot);
            if (open.contains(u) && avail[u].size() <= 1) {
                leaves.push_back(u);
            }
        }
        // What is left is a single cycle: two ways to orient it.
        Scalar cycle_sum(0);
        if (open.empty()) {
            cycle_sum = Scalar(1);
        } else {
            int start = *open.begin();
            if (avail[start].size() != 2) {
                return Scalar(0);
            }
            for (int first : avail[start]) {
                Scalar prod(1);
                int v = start;
                int slot = first;
                size_t steps = 0;
                do {
                    prod *= weight(v, slot);
                    auto [u, uslot] = w.other[v][slot];
                    int next_slot = -1;
                    for (int s : avail[u]) {
                        if (s != uslot) {
                            next_slot = s;
                        }
                    }
                    v = u;
                    slot = next_slot;
                    ++steps;
                } while (v != start && slot >= 0 && steps <= open.size());
                if (steps != open.size()) {
                    return Scalar(0);
                }
                cycle_sum += prod;
            }
        }
        total *= forced * cycle_sum;
        if (total.is_zero()) {
            return total;
        }
    }
    return total;
}

EvalResult solve(const SignatureGrid &grid, const EvalLimits &limits) {
    require_valid(grid);
    auto all = [&](const std::function<bool(const Signature &)> &pred) {
        return std::all_of(grid.vertices.begin(), grid.vertices.end(),
                           [&](const auto &kv) { return pred(kv.second); });
    };
    EvalResult r;
    if (all([](const Signature &f) { return in_P(f).has_value(); })) {
        r.value = solve_P(grid);
        r.method = EvalMethod::solver_p;
        return r;
    }
    if (all([](const Signature &f) { return in_A(f).has_value(); })) {
        r.value = solve_A(grid);
        r.method = EvalMethod::solver_a;
        return r;
    }
    if (all([](const Signature &f) {
            auto p = to_six_vertex(f);
            return p && one_zero_each_pair(*p);
        })) {
        try {
            r.value = solve_M(grid);
            r.method = EvalMethod::solver_m;
            return r;
        } catch (const InputError &) {
            // Mixed minority values; fall through to brute force.
        }
    }
    if (grid.edges.size() > limits.brute_force_edge_cap) {
        throw CapExceeded("no tractable algorithm applies and the instance is too large for brute force (" +
                          std::to_string(grid.edges.size()) + " edges, cap " +
                          std::to_string(limits.brute_force_edge_cap) + ")");
    }
    return brute_force_eval(grid, limits);
}

}  // namespace holant6v
