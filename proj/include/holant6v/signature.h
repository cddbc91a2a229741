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

#ifndef HOLANT6V_SIGNATURE_H
#define HOLANT6V_SIGNATURE_H

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holant6v/matrix.h"
#include "holant6v/scalar.h"

namespace holant6v {

/// A function {0,1}^arity -> Scalar, arity in [0, 4], stored as its truth
/// table. Index bit (arity - 1 - j) holds variable x_{j+1}, so the table is
/// in lexicographic order of the input string x_1 x_2 ... x_arity.
class Signature {
   public:
    Signature() : values_(1) {
    }
    /// Throws InputError unless values.size() == 2^arity and arity <= 4.
    Signature(int arity, std::vector<Scalar> values);
    static Signature zero(int arity);

    int arity() const {
        return arity_;
    }
    size_t size() const {
        return values_.size();
    }
    const Scalar &operator[](size_t index) const {
        return values_[index];
    }
    Scalar &operator[](size_t index) {
        return values_[index];
    }
    const std::vector<Scalar> &values() const {
        return values_;
    }
    /// Value at a bit-string such as "0110".
    const Scalar &at(const std::string &bits) const;
    /// Bit of variable x_{var} (1-based) within a table index.
    int bit(size_t index, int var) const {
        return static_cast<int>((index >> (arity_ - var)) & 1U);
    }

    bool is_zero() const;
    std::vector<size_t> support() const;
    std::string str() const;

    friend bool operator==(const Signature &lhs, const Signature &rhs) = default;

   private:
    int arity_ = 0;
    std::vector<Scalar> values_;
};

/// Renders an arity-k table index as its bit-string.
std::string bit_string(size_t index, int arity);

/// Weights (a, x, b, y, c, z) on the strings
/// lambda = 0011, lambda-bar = 1100, mu = 0110, mu-bar = 1001, nu = 0101, nu-bar = 1010.
struct SixVertexParams {
    Scalar a, x, b, y, c, z;

    /// Position k in (a, x, b, y, c, z) order.
    const Scalar &operator[](int k) const;
    Scalar &operator[](int k);

    std::string str() const;
    friend bool operator==(const SixVertexParams &lhs, const SixVertexParams &rhs) = default;
};

std::ostream &operator<<(std::ostream &out, const Signature &f);
std::ostream &operator<<(std::ostream &out, const SixVertexParams &p);

/// Table indices of the six support strings, in (a, x, b, y, c, z) order.
inline constexpr std::array<size_t, 6> kSixVertexStrings = {0b0011, 0b1100, 0b0110, 0b1001, 0b0101, 0b1010};

Signature from_six_vertex(const SixVertexParams &p);
/// Inverse of from_six_vertex; nullopt if f is not arity 4 or has support
/// outside the weight-2 strings.
std::optional<SixVertexParams> to_six_vertex(const Signature &f);

/// A 4x4 matrix view M_{x_i x_j, x_k x_l}(f); variables are 1-based.
struct MatrixView {
    std::array<int, 2> row_vars;
    std::array<int, 2> col_vars;
    Matrix entries;
};

MatrixView matrix_view(const Signature &f, std::array<int, 2> row_vars, std::array<int, 2> col_vars);
/// The canonical view M_{x1x2, x4x3}(f), which displays as M(a,x,b,y,c,z).
MatrixView canonical_view(const Signature &f);
/// Arity-4 signature h whose canonical view M_{x1x2, x4x3}(h) equals m.
Signature from_canonical_matrix(const Matrix &m);

/// 1-based permutation of {1,2,3,4}.
using Permutation = std::array<int, 4>;

bool is_permutation(const Permutation &perm);
/// All 24 permutations in lexicographic order.
std::vector<Permutation> all_permutations();
/// (sigma o tau)(j) = sigma(tau(j)).
Permutation compose_permutations(const Permutation &sigma, const Permutation &tau);

/// g(y_1..y_4) = f(y_{perm(1)}, ..., y_{perm(4)}).
///
/// permute_variables(permute_variables(f, s), t) == permute_variables(f, t o s).
/// On a signature grid, g at a vertex reproduces f's value when the edge that
/// was on f's slot j moves to slot perm(j).
Signature permute_variables(const Signature &f, const Permutation &perm);
SixVertexParams permute_six_vertex(const SixVertexParams &p, const Permutation &perm);

/// Effect of a variable permutation on the three complementary pairs.
struct BlockAction {
    /// target_block[k]: the pair of the permuted signature that carries the
    /// values of pair k (0 = lambda, 1 = mu, 2 = nu) of the original.
    std::array<int, 3> target_block;
    /// flipped[k]: the values of pair k arrive in reversed order.
    std::array<bool, 3> flipped;

    int flip_count() const;
};

BlockAction block_action(const Permutation &perm);

/// Links the column variables of fM to the row variables of gM through two
/// disequalities. The result's canonical view is fM * N * gM; its x1, x2 are
/// fM's row variables and its x4, x3 are gM's column variables.
Signature compose(const MatrixView &fM, const MatrixView &gM);

/// T^{tensor n} f for a 2x2 matrix T.
Signature holographic_transform(const Signature &f, const Matrix &t);

/// Z = (1/sqrt 2) [[1, 1], [i, -i]].
Matrix holographic_basis_z();
/// H = (1/sqrt 2) [[1, 1], [1, -1]].
Matrix hadamard();

/// Middle two rows and middle two columns of M_{x1x2,x4x3}(f) coincide.
bool is_redundant(const Signature &f);
/// det [[f0000, f0010, f0011], [f0100, f0110, f0111], [f1100, f1110, f1111]].
/// Throws InputError if f is not redundant.
Scalar redundant_determinant(const Signature &f);

}  // namespace holant6v

#endif
