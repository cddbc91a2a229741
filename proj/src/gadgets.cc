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

#include "holant6v/gadgets.h"

#include "holant6v/classify.h"
#include "holant6v/errors.h"

namespace holant6v {

namespace {

bool all_nonzero(const SixVertexParams &p) {
    return zero_count(p) == 0;
}

std::string view_name(std::array<int, 2> rows, std::array<int, 2> cols) {
    auto v = [](int k) { return "x" + std::to_string(k); };
    return "M[" + v(rows[0]) + v(rows[1]) + "," + v(cols[0]) + v(cols[1]) + "]";
}

SixVertexParams six_vertex_or_throw(const Signature &f) {
    auto p = to_six_vertex(f);
    if (!p) {
        throw std::logic_error("gadget result left the six-vertex support");
    }
    return *p;
}

}  // namespace

void require_twins(const SixVertexParams &p) {
    if (p.a != p.x || p.b != p.y || p.c != p.z) {
        throw InputError("expected twins (a = x, b = y, c = z), got " + p.str());
    }
}

Signature chain_D(const SixVertexParams &twins, int s) {
    require_twins(twins);
    if (s < 1) {
        throw InputError("chain length must be at least 1");
    }
    Signature f = from_six_vertex(twins);
    Matrix m = canonical_view(f).entries;
    Matrix step = double_disequality() * matrix_view(f, {2, 1}, {4, 3}).entries;
    Matrix d = m;
    for (int k = 1; k < s; ++k) {
        d = d * step;
    }
    return from_canonical_matrix(d);
}

Matrix lambda_s(const Scalar &a, const Scalar &b, const Scalar &c, int s) {
    Matrix l(4, 4);
    l(0, 3) = a.pow(s);
    l(3, 0) = a.pow(s);
    l(1, 1) = (b + c).pow(s);
    l(2, 2) = (b - c).pow(s);
    return l;
}

Signature closed_form_D(const Scalar &a, const Scalar &b, const Scalar &c, int s) {
    if (s < 1) {
        throw InputError("chain length must be at least 1");
    }
    Matrix h = hadamard();
    Matrix p = Matrix::identity(4);
    for (size_t r = 0; r < 2; ++r) {
        for (size_t col = 0; col < 2; ++col) {
            p(r + 1, col + 1) = h(r, col);
        }
    }
    return from_canonical_matrix(p * lambda_s(a, b, c, s) * p);
}

SixVertexParams mnm_product(const SixVertexParams &p) {
    Scalar ax = p.a * p.x;
    Scalar mixed = p.b * p.y + p.c * p.z;
    return {ax, ax, Scalar(2) * p.b * p.c, Scalar(2) * p.y * p.z, mixed, mixed};
}

SixVertexParams pair_product(const SixVertexParams &p, std::array<int, 2> rows1, std::array<int, 2> cols1,
                             std::array<int, 2> rows2, std::array<int, 2> cols2) {
    Signature f = from_six_vertex(p);
    return six_vertex_or_throw(compose(matrix_view(f, rows1, cols1), matrix_view(f, rows2, cols2)));
}

SixVertexParams mnm_wiring(const SixVertexParams &p) {
    return pair_product(p, {1, 2}, {4, 3}, {4, 3}, {1, 2});
}

Scalar hardness_determinant(const Scalar &alpha, const Scalar &beta, const Scalar &gamma) {
    for (const Scalar *v : {&alpha, &beta, &gamma}) {
        if (!v->is_zero() && *v != Scalar::i() && *v != -Scalar::i()) {
            throw InputError("argument must be 0, i or -i, got " + v->str());
        }
    }
    return alpha * beta * gamma - Scalar(2) - alpha - beta - gamma;
}

OneZeroReport one_zero_chain(const SixVertexParams &p) {
    if (zero_count(p) != 1) {
        throw InputError("expected exactly one zero, got " + p.str());
    }
    OneZeroReport report;
    bool found = false;
    for (const Permutation &perm : all_permutations()) {
        SixVertexParams q = permute_six_vertex(p, perm);
        if (q.b.is_zero()) {
            report.normalization = perm;
            report.normalized = q;
            found = true;
            break;
        }
    }
    if (!found) {
        throw std::logic_error("no permutation moves the zero to b");
    }
    struct Wiring {
        std::array<int, 2> r1, c1, r2, c2;
    };
    static const Wiring kSteps[3] = {
        {{1, 2}, {4, 3}, {3, 4}, {1, 2}},
        {{3, 4}, {1, 2}, {4, 3}, {2, 1}},
        {{4, 3}, {1, 2}, {2, 1}, {4, 3}},
    };
    auto try_steps = [&](const SixVertexParams &m, const std::string &prefix) {
        for (const Wiring &w : kSteps) {
            GadgetStep step;
            step.wiring = prefix + view_name(w.r1, w.c1) + " N " + view_name(w.r2, w.c2);
            step.params = pair_product(m, w.r1, w.c1, w.r2, w.c2);
            step.all_nonzero = all_nonzero(step.params);
            report.steps.push_back(step);
            if (step.all_nonzero) {
                report.branch = step.wiring;
                report.result = step.params;
                return true;
            }
        }
        return false;
    };
    if (try_steps(report.normalized, "")) {
        return report;
    }
    GadgetStep fallback;
    fallback.wiring = "M N M^T";
    fallback.params = mnm_wiring(report.normalized);
    fallback.all_nonzero = all_nonzero(fallback.params);
    report.steps.push_back(fallback);
    if (try_steps(fallback.params, "(M N M^T): ")) {
        return report;
    }
    throw std::logic_error("no branch produced an all-nonzero signature for " + p.str());
}

TwoZeroReport two_zero_product(const SixVertexParams &p) {
    ZeroPattern pat = zero_pattern(p);
    int one_zero_pairs = 0;
    for (PairStatus s : pat) {
        one_zero_pairs += static_cast<int>(s == PairStatus::one_zero);
    }
    if (zero_count(p) != 2 || one_zero_pairs != 2) {
        throw InputError("expected exactly two zeros in distinct pairs, got " + p.str());
    }
    TwoZeroReport report;
    for (const Permutation &perm : all_permutations()) {
        SixVertexParams q = permute_six_vertex(p, perm);
        if (q.c.is_zero() && q.y.is_zero()) {
            report.normalization = perm;
            report.normalized = q;
            report.product = pair_product(q, {1, 2}, {4, 3}, {3, 4}, {1, 2});
            return report;
        }
    }
    throw std::logic_error("no permutation moves the zeros to c and y");
}

}  // namespace holant6v
