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

#include "holant6v/signature.h"

#include <algorithm>
#include <ostream>

#include "holant6v/errors.h"

namespace holant6v {

Signature::Signature(int arity, std::vector<Scalar> values) : arity_(arity), values_(std::move(values)) {
    if (arity < 0 || arity > 4) {
        throw InputError("signature arity must lie in [0, 4], got " + std::to_string(arity));
    }
    if (values_.size() != (size_t{1} << arity)) {
        throw InputError("signature of arity " + std::to_string(arity) + " needs " +
                         std::to_string(size_t{1} << arity) + " values, got " + std::to_string(values_.size()));
    }
}

Signature Signature::zero(int arity) {
    if (arity < 0 || arity > 4) {
        throw InputError("signature arity must lie in [0, 4]");
    }
    return Signature(arity, std::vector<Scalar>(size_t{1} << arity));
}

const Scalar &Signature::at(const std::string &bits) const {
    if (bits.size() != static_cast<size_t>(arity_)) {
        throw InputError("bit-string '" + bits + "' does not match arity " + std::to_string(arity_));
    }
    size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InputError("bad bit-string '" + bits + "'");
        }
        index = (index << 1) | static_cast<size_t>(c - '0');
    }
    return values_[index];
}

bool Signature::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Scalar &v) { return v.is_zero(); });
}

std::vector<size_t> Signature::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < values_.size(); ++k) {
        if (!values_[k].is_zero()) {
            out.push_back(k);
        }
    }
    return out;
}

std::string Signature::str() const {
    std::string out = "{";
    bool first = true;
    for (size_t k = 0; k < values_.size(); ++k) {
        if (values_[k].is_zero()) {
            continue;
        }
        out += first ? "" : ", ";
        out += bit_string(k, arity_) + ": " + values_[k].str();
        first = false;
    }
    return out + "}";
}

std::string bit_string(size_t index, int arity) {
    std::string out(static_cast<size_t>(arity), '0');
    for (int j = 0; j < arity; ++j) {
        if ((index >> (arity - 1 - j)) & 1U) {
            out[static_cast<size_t>(j)] = '1';
        }
    }
    return out;
}

const Scalar &SixVertexParams::operator[](int k) const {
    switch (k) {
        case 0:
            return a;
        case 1:
            return x;
        case 2:
            return b;
        case 3:
            return y;
        case 4:
            return c;
        case 5:
            return z;
        default:
            throw InputError("six-vertex position out of range");
    }
}

Scalar &SixVertexParams::operator[](int k) {
    return const_cast<Scalar &>(static_cast<const SixVertexParams &>(*this)[k]);
}

std::string SixVertexParams::str() const {
    return "(" + a.str() + ", " + x.str() + ", " + b.str() + ", " + y.str() + ", " + c.str() + ", " + z.str() + ")";
}

std::ostream &operator<<(std::ostream &out, const Signature &f) {
    return out << f.str();
}

std::ostream &operator<<(std::ostream &out, const SixVertexParams &p) {
    return out << p.str();
}

Signature from_six_vertex(const SixVertexParams &p) {
    Signature f = Signature::zero(4);
    for (int k = 0; k < 6; ++k) {
        f[kSixVertexStrings[static_cast<size_t>(k)]] = p[k];
    }
    return f;
}

std::optional<SixVertexParams> to_six_vertex(const Signature &f) {
    if (f.arity() != 4) {
        return std::nullopt;
    }
    for (size_t idx = 0; idx < 16; ++idx) {
        if (__builtin_popcount(static_cast<unsigned>(idx)) != 2 && !f[idx].is_zero()) {
            return std::nullopt;
        }
    }
    SixVertexParams p;
    for (int k = 0; k < 6; ++k) {
        p[k] = f[kSixVertexStrings[static_cast<size_t>(k)]];
    }
    return p;
}

namespace {

void check_partition(std::array<int, 2> rows, std::array<int, 2> cols) {
    std::array<int, 4> all = {rows[0], rows[1], cols[0], cols[1]};
    std::array<bool, 5> seen{};
    for (int v : all) {
        if (v < 1 || v > 4 || seen[static_cast<size_t>(v)]) {
            throw InputError("matrix view variables must partition {1,2,3,4}");
        }
        seen[static_cast<size_t>(v)] = true;
    }
}

size_t index_of(const std::array<int, 4> &assignment) {
    // assignment[j] is the bit of x_{j+1}.
    return (static_cast<size_t>(assignment[0]) << 3) | (static_cast<size_t>(assignment[1]) << 2) |
           (static_cast<size_t>(assignment[2]) << 1) | static_cast<size_t>(assignment[3]);
}

size_t view_index(std::array<int, 2> rows, std::array<int, 2> cols, size_t r, size_t c) {
    std::array<int, 4> assignment{};
    assignment[static_cast<size_t>(rows[0] - 1)] = static_cast<int>((r >> 1) & 1U);
    assignment[static_cast<size_t>(rows[1] - 1)] = static_cast<int>(r & 1U);
    assignment[static_cast<size_t>(cols[0] - 1)] = static_cast<int>((c >> 1) & 1U);
    assignment[static_cast<size_t>(cols[1] - 1)] = static_cast<int>(c & 1U);
    return index_of(assignment);
}

}  // namespace

MatrixView matrix_view(const Signature &f, std::array<int, 2> row_vars, std::array<int, 2> col_vars) {
    if (f.arity() != 4) {
        throw InputError("matrix_view requires arity 4");
    }
    check_partition(row_vars, col_vars);
    MatrixView view{row_vars, col_vars, Matrix(4, 4)};
    for (size_t r = 0; r < 4; ++r) {
        for (size_t c = 0; c < 4; ++c) {
            view.entries(r, c) = f[view_index(row_vars, col_vars, r, c)];
        }
    }
    return view;
}

MatrixView canonical_view(const Signature &f) {
    return matrix_view(f, {1, 2}, {4, 3});
}

Signature from_canonical_matrix(const Matrix &m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw InputError("canonical matrix must be 4x4");
    }
    Signature h = Signature::zero(4);
    for (size_t r = 0; r < 4; ++r) {
        for (size_t c = 0; c < 4; ++c) {
            h[view_index({1, 2}, {4, 3}, r, c)] = m(r, c);
        }
    }
    return h;
}

bool is_permutation(const Permutation &perm) {
    std::array<bool, 5> seen{};
    for (int v : perm) {
        if (v < 1 || v > 4 || seen[static_cast<size_t>(v)]) {
            return false;
        }
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

std::vector<Permutation> all_permutations() {
    std::vector<Permutation> out;
    Permutation p = {1, 2, 3, 4};
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Permutation compose_permutations(const Permutation &sigma, const Permutation &tau) {
    Permutation out{};
    for (size_t j = 0; j < 4; ++j) {
        out[j] = sigma[static_cast<size_t>(tau[j] - 1)];
    }
    return out;
}

Signature permute_variables(const Signature &f, const Permutation &perm) {
    if (f.arity() != 4) {
        throw InputError("permute_variables requires arity 4");
    }
    if (!is_permutation(perm)) {
        throw InputError("invalid permutation of {1,2,3,4}");
    }
    Signature g = Signature::zero(4);
    for (size_t t = 0; t < 16; ++t) {
        std::array<int, 4> source{};
        for (size_t j = 0; j < 4; ++j) {
            source[j] = g.bit(t, perm[j]);
        }
        g[t] = f[index_of(source)];
    }
    return g;
}

SixVertexParams permute_six_vertex(const SixVertexParams &p, const Permutation &perm) {
    return *to_six_vertex(permute_variables(from_six_vertex(p), perm));
}

int BlockAction::flip_count() const {
    return static_cast<int>(std::count(flipped.begin(), flipped.end(), true));
}

BlockAction block_action(const Permutation &perm) {
    if (!is_permutation(perm)) {
        throw InputError("invalid permutation of {1,2,3,4}");
    }
    BlockAction action{};
    for (size_t k = 0; k < 3; ++k) {
        size_t p = kSixVertexStrings[2 * k];
        // t with t_{perm(j)} = p_j is the string of g carrying f's value at p.
        std::array<int, 4> t{};
        for (size_t j = 0; j < 4; ++j) {
            t[static_cast<size_t>(perm[j] - 1)] = static_cast<int>((p >> (3 - j)) & 1U);
        }
        size_t image = index_of(t);
        auto pos = static_cast<size_t>(std::find(kSixVertexStrings.begin(), kSixVertexStrings.end(), image) -
                                       kSixVertexStrings.begin());
        action.target_block[k] = static_cast<int>(pos / 2);
        action.flipped[k] = (pos % 2) == 1;
    }
    return action;
}

Signature compose(const MatrixView &fM, const MatrixView &gM) {
    return from_canonical_matrix(fM.entries * double_disequality() * gM.entries);
}

Signature holographic_transform(const Signature &f, const Matrix &t) {
    if (t.rows() != 2 || t.cols() != 2) {
        throw InputError("holographic transform needs a 2x2 matrix");
    }
    int n = f.arity();
    std::vector<Scalar> cur = f.values();
    for (int var = 1; var <= n; ++var) {
        size_t shift = static_cast<size_t>(n - var);
        std::vector<Scalar> next(cur.size());
        for (size_t w = 0; w < cur.size(); ++w) {
            size_t out_bit = (w >> shift) & 1U;
            size_t base = w & ~(size_t{1} << shift);
            for (size_t u = 0; u < 2; ++u) {
                const Scalar &coef = t(out_bit, u);
                const Scalar &v = cur[base | (u << shift)];
                if (!coef.is_zero() && !v.is_zero()) {
                    next[w] += coef * v;
                }
            }
        }
        cur = std::move(next);
    }
    return Signature(n, std::move(cur));
}

Matrix holographic_basis_z() {
    Scalar s = Scalar(GaussianRational(), GaussianRational(Rational(1, 2)));  // 1/sqrt 2
    return Matrix{{s, s}, {s * Scalar::i(), -(s * Scalar::i())}};
}

Matrix hadamard() {
    Scalar s = Scalar(GaussianRational(), GaussianRational(Rational(1, 2)));
    return Matrix{{s, s}, {s, -s}};
}

bool is_redundant(const Signature &f) {
    if (f.arity() != 4) {
        throw InputError("is_redundant requires arity 4");
    }
    Matrix m = canonical_view(f).entries;
    for (size_t k = 0; k < 4; ++k) {
        if (!(m(1, k) == m(2, k)) || !(m(k, 1) == m(k, 2))) {
            return false;
        }
    }
    return true;
}

Scalar redundant_determinant(const Signature &f) {
    if (!is_redundant(f)) {
        throw InputError("redundant_determinant: signature is not redundant");
    }
    Matrix m{{f.at("0000"), f.at("0010"), f.at("0011")},
             {f.at("0100"), f.at("0110"), f.at("0111")},
             {f.at("1100"), f.at("1110"), f.at("1111")}};
    return m.determinant();
}

}  // namespace holant6v
