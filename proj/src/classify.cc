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

#include "holant6v/classify.h"

#include <algorithm>
#include <bit>

#include "holant6v/errors.h"

namespace holant6v {

namespace {

/// A tensor over a subset of the variables; table bit order follows vars,
/// first variable most significant.
struct Sub {
    std::vector<int> vars;
    std::vector<Scalar> table;
};

size_t gather_bits(size_t index, const std::vector<int> &positions, size_t width) {
    size_t out = 0;
    for (int p : positions) {
        out = (out << 1) | ((index >> (width - 1 - p)) & 1U);
    }
    return out;
}

bool factor_product(const Sub &t, std::vector<ProductBlock> &out) {
    size_t k = t.vars.size();
    // Try every split with position 0 on the left.
    for (size_t mask = 1; mask + 1 < (size_t{1} << k); mask += 2) {
        std::vector<int> left;
        std::vector<int> right;
        for (size_t p = 0; p < k; ++p) {
            ((mask >> p) & 1U ? left : right).push_back(static_cast<int>(p));
        }
        size_t nr = size_t{1} << left.size();
        size_t nc = size_t{1} << right.size();
        std::vector<Scalar> m(nr * nc);
        for (size_t i = 0; i < t.table.size(); ++i) {
            m[gather_bits(i, left, k) * nc + gather_bits(i, right, k)] = t.table[i];
        }
        size_t pivot = std::find_if(m.begin(), m.end(), [](const Scalar &s) { return !s.is_zero(); }) - m.begin();
        size_t r0 = pivot / nc;
        size_t c0 = pivot % nc;
        bool rank_one = true;
        for (size_t r = 0; r < nr && rank_one; ++r) {
            for (size_t c = 0; c < nc; ++c) {
                if (m[r * nc + c] * m[pivot] != m[r * nc + c0] * m[r0 * nc + c]) {
                    rank_one = false;
                    break;
                }
            }
        }
        if (!rank_one) {
            continue;
        }
        Sub a;
        Sub b;
        for (int p : left) {
            a.vars.push_back(t.vars[p]);
        }
        for (int p : right) {
            b.vars.push_back(t.vars[p]);
        }
        Scalar inv = m[pivot].inverse();
        for (size_t r = 0; r < nr; ++r) {
            a.table.push_back(m[r * nc + c0]);
        }
        for (size_t c = 0; c < nc; ++c) {
            b.table.push_back(m[r0 * nc + c] * inv);
        }
        return factor_product(a, out) && factor_product(b, out);
    }
    std::vector<size_t> support;
    for (size_t i = 0; i < t.table.size(); ++i) {
        if (!t.table[i].is_zero()) {
            support.push_back(i);
        }
    }
    size_t all = (size_t{1} << k) - 1;
    if (support.size() > 2 || (support.size() == 2 && (support[0] ^ support[1]) != all)) {
        return false;
    }
    ProductBlock block;
    block.vars = t.vars;
    block.u = support[0];
    block.w_u = t.table[block.u];
    block.w_ubar = t.table[block.u ^ all];
    out.push_back(std::move(block));
    return true;
}

int mod4(int v) {
    return ((v % 4) + 4) % 4;
}

}  // namespace

std::optional<ProductCertificate> in_P(const Signature &f) {
    ProductCertificate cert;
    if (f.is_zero()) {
        cert.zero = true;
        return cert;
    }
    if (f.arity() == 0) {
        cert.constant = f[0];
        return cert;
    }
    Sub t;
    for (int v = 1; v <= f.arity(); ++v) {
        t.vars.push_back(v);
    }
    t.table = f.values();
    if (!factor_product(t, cert.blocks)) {
        return std::nullopt;
    }
    std::sort(cert.blocks.begin(), cert.blocks.end(),
              [](const ProductBlock &x, const ProductBlock &y) { return x.vars < y.vars; });
    return cert;
}

Signature reconstruct(const ProductCertificate &cert, int arity) {
    if (cert.zero) {
        return Signature::zero(arity);
    }
    Signature f = Signature::zero(arity);
    for (size_t i = 0; i < f.size(); ++i) {
        Scalar v = cert.constant;
        for (const ProductBlock &blk : cert.blocks) {
            size_t local = 0;
            for (int var : blk.vars) {
                local = (local << 1) | static_cast<size_t>(f.bit(i, var));
            }
            size_t all = (size_t{1} << blk.vars.size()) - 1;
            if (local == blk.u) {
                v *= blk.w_u;
            } else if (local == (blk.u ^ all)) {
                v *= blk.w_ubar;
            } else {
                v = Scalar(0);
            }
        }
        f[i] = v;
    }
    return f;
}

std::optional<std::pair<size_t, std::vector<size_t>>> affine_support(const Signature &f) {
    std::vector<size_t> support = f.support();
    if (support.empty()) {
        return std::nullopt;
    }
    size_t base = support[0];
    // Reduced echelon form with pivots on the most significant bits first.
    std::vector<size_t> basis;
    for (size_t s : support) {
        size_t v = s ^ base;
        for (size_t w : basis) {
            size_t top = std::bit_floor(w);
            if (v & top) {
                v ^= w;
            }
        }
        if (v == 0) {
            continue;
        }
        size_t top = std::bit_floor(v);
        for (size_t &w : basis) {
            if (w & top) {
                w ^= v;
            }
        }
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    if (support.size() != (size_t{1} << basis.size())) {
        return std::nullopt;
    }
    return std::make_pair(base, basis);
}

std::optional<AffineCertificate> in_A(const Signature &f) {
    AffineCertificate cert;
    if (f.is_zero()) {
        cert.lambda = Scalar(0);
        return cert;
    }
    auto aff = affine_support(f);
    if (!aff) {
        return std::nullopt;
    }
    cert.base = aff->first;
    cert.basis = aff->second;
    cert.lambda = f[cert.base];
    size_t d = cert.basis.size();
    for (size_t w : cert.basis) {
        cert.pivots.push_back(f.arity() - std::countr_zero(std::bit_floor(w)));
    }
    auto point = [&](size_t u) {
        size_t s = cert.base;
        for (size_t j = 0; j < d; ++j) {
            if ((u >> j) & 1U) {
                s ^= cert.basis[j];
            }
        }
        return s;
    };
    std::vector<int> e(size_t{1} << d);
    for (size_t u = 0; u < e.size(); ++u) {
        auto r = ratio_power_of_i(f[point(u)], cert.lambda);
        if (!r) {
            return std::nullopt;
        }
        e[u] = *r;
    }
    cert.a.resize(d);
    cert.b.assign(d, std::vector<int>(d, 0));
    for (size_t j = 0; j < d; ++j) {
        cert.a[j] = e[size_t{1} << j];
    }
    for (size_t j = 0; j < d; ++j) {
        for (size_t k = j + 1; k < d; ++k) {
            int second = mod4(e[(size_t{1} << j) | (size_t{1} << k)] - e[size_t{1} << j] - e[size_t{1} << k] + e[0]);
            if (second % 2 != 0) {
                return std::nullopt;
            }
            cert.b[j][k] = cert.b[k][j] = second / 2;
        }
    }
    for (size_t u = 0; u < e.size(); ++u) {
        int q = cert.c;
        for (size_t j = 0; j < d; ++j) {
            if ((u >> j) & 1U) {
                q += cert.a[j];
                for (size_t k = j + 1; k < d; ++k) {
                    if ((u >> k) & 1U) {
                        q += 2 * cert.b[j][k];
                    }
                }
            }
        }
        if (mod4(q) != e[u]) {
            return std::nullopt;
        }
    }
    return cert;
}

Signature reconstruct(const AffineCertificate &cert, int arity) {
    Signature f = Signature::zero(arity);
    size_t d = cert.basis.size();
    for (size_t u = 0; u < (size_t{1} << d); ++u) {
        size_t s = cert.base;
        int q = cert.c;
        for (size_t j = 0; j < d; ++j) {
            if ((u >> j) & 1U) {
                s ^= cert.basis[j];
                q += cert.a[j];
                for (size_t k = j + 1; k < d; ++k) {
                    if ((u >> k) & 1U) {
                        q += 2 * cert.b[j][k];
                    }
                }
            }
        }
        f[s] = cert.lambda * Scalar::i_power(q);
    }
    return f;
}

ZeroPattern zero_pattern(const SixVertexParams &p) {
    ZeroPattern out{};
    for (int k = 0; k < 3; ++k) {
        int zeros = static_cast<int>(p[2 * k].is_zero()) + static_cast<int>(p[2 * k + 1].is_zero());
        out[k] = zeros == 2 ? PairStatus::both_zero : zeros == 1 ? PairStatus::one_zero : PairStatus::no_zero;
    }
    return out;
}

int zero_count(const SixVertexParams &p) {
    int n = 0;
    for (int k = 0; k < 6; ++k) {
        n += static_cast<int>(p[k].is_zero());
    }
    return n;
}

std::string pair_status_name(PairStatus s) {
    switch (s) {
        case PairStatus::both_zero:
            return "both_zero";
        case PairStatus::one_zero:
            return "one_zero";
        case PairStatus::no_zero:
            return "no_zero";
    }
    return "?";
}

bool one_zero_each_pair(const SixVertexParams &p) {
    for (PairStatus s : zero_pattern(p)) {
        if (s == PairStatus::no_zero) {
            return false;
        }
    }
    return true;
}

std::string class_name(TractableClass c) {
    switch (c) {
        case TractableClass::P:
            return "P";
        case TractableClass::A:
            return "A";
        case TractableClass::M:
            return "M";
    }
    return "?";
}

std::string Classification::verdict_str() const {
    if (tractable) {
        return "Tractable(" + class_name(cls) + ")";
    }
    return "Hard(case " + std::to_string(hard_case) + ")";
}

bool Classification::same_verdict(const Classification &other) const {
    if (tractable != other.tractable) {
        return false;
    }
    return tractable || hard_case == other.hard_case;
}

Classification classify(const SixVertexParams &p) {
    static const char *const kNames[6] = {"a", "x", "b", "y", "c", "z"};
    Signature f = from_six_vertex(p);
    Classification out;
    ClassificationWitness &w = out.witness;
    w.pattern = zero_pattern(p);
    w.zeros = zero_count(p);
    w.member_P = in_P(f).has_value();
    w.member_A = in_A(f).has_value();
    w.member_M = one_zero_each_pair(p);
    if (w.member_P || w.member_A || w.member_M) {
        out.tractable = true;
        out.cls = w.member_P ? TractableClass::P : w.member_A ? TractableClass::A : TractableClass::M;
        w.reason = w.member_P   ? "product of complementary-pair factors"
                   : w.member_A ? "affine support with quadratic i-power phase"
                                : "a zero in each pair";
        return out;
    }
    auto has = [&](PairStatus s) { return std::find(w.pattern.begin(), w.pattern.end(), s) != w.pattern.end(); };
    if (has(PairStatus::both_zero)) {
        out.hard_case = 1;
        w.reason = "a pair is entirely zero and f is neither in P nor in A";
        for (int k = 0; k < 3; ++k) {
            if (w.pattern[k] == PairStatus::both_zero) {
                w.derived.emplace_back(std::string(kNames[2 * k]) + kNames[2 * k + 1], Scalar(0));
            }
        }
        return out;
    }
    if (w.zeros == 0) {
        out.hard_case = 2;
        w.reason = "all six values nonzero";
        w.derived.emplace_back("ax", p.a * p.x);
        w.derived.emplace_back("2bc", Scalar(2) * p.b * p.c);
        w.derived.emplace_back("2yz", Scalar(2) * p.y * p.z);
        w.derived.emplace_back("by+cz", p.b * p.y + p.c * p.z);
        return out;
    }
    out.hard_case = w.zeros == 1 ? 3 : 4;
    w.reason = w.zeros == 1 ? "exactly one zero" : "two zeros in distinct pairs";
    for (int k = 0; k < 6; ++k) {
        if (p[k].is_zero()) {
            w.derived.emplace_back(kNames[k], Scalar(0));
        }
    }
    return out;
}

}  // namespace holant6v
