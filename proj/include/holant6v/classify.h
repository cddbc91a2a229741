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

#ifndef HOLANT6V_CLASSIFY_H
#define HOLANT6V_CLASSIFY_H

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holant6v/signature.h"

namespace holant6v {

/// One factor of a product decomposition: the restriction of f to `vars`
/// (1-based, ascending) is w_u at u, w_ubar at the complement of u, and
/// zero elsewhere. Bits of u follow `vars`, first variable most significant.
struct ProductBlock {
    std::vector<int> vars;
    size_t u = 0;
    Scalar w_u;
    Scalar w_ubar;
};

struct ProductCertificate {
    /// Set for the identically-zero signature; blocks are then empty.
    bool zero = false;
    /// Only used at arity 0, where there are no blocks to carry the value.
    Scalar constant = Scalar(1);
    std::vector<ProductBlock> blocks;
};

/// f = lambda * i^(c + sum a_j u_j + 2 sum_{j<k} b_jk u_j u_k) at the point
/// base ^ (XOR of basis[j] over u_j = 1), zero off that affine set.
struct AffineCertificate {
    size_t base = 0;
    /// Reduced echelon basis; pivot of basis[j] is pivots[j] (1-based
    /// variable), and no other basis vector touches that variable.
    std::vector<size_t> basis;
    std::vector<int> pivots;
    Scalar lambda;
    int c = 0;
    std::vector<int> a;
    std::vector<std::vector<int>> b;
};

std::optional<ProductCertificate> in_P(const Signature &f);
std::optional<AffineCertificate> in_A(const Signature &f);

/// Rebuilds the signature a certificate describes.
Signature reconstruct(const ProductCertificate &cert, int arity);
Signature reconstruct(const AffineCertificate &cert, int arity);

/// Affine support test on its own. Returns base and reduced echelon basis.
std::optional<std::pair<size_t, std::vector<size_t>>> affine_support(const Signature &f);

enum class PairStatus { both_zero, one_zero, no_zero };

/// Status of (a,x), (b,y), (c,z) in that order.
using ZeroPattern = std::array<PairStatus, 3>;

ZeroPattern zero_pattern(const SixVertexParams &p);
int zero_count(const SixVertexParams &p);
std::string pair_status_name(PairStatus s);

bool one_zero_each_pair(const SixVertexParams &p);

enum class TractableClass { P, A, M };

std::string class_name(TractableClass c);

struct ClassificationWitness {
    ZeroPattern pattern{};
    int zeros = 0;
    bool member_P = false;
    bool member_A = false;
    bool member_M = false;
    std::string reason;
    /// Named derived quantities supporting the verdict.
    std::vector<std::pair<std::string, Scalar>> derived;
};

struct Classification {
    bool tractable = false;
    TractableClass cls = TractableClass::P;
    /// 1..4 when not tractable.
    int hard_case = 0;
    ClassificationWitness witness;

    std::string verdict_str() const;
    /// Same verdict and, for hard verdicts, the same case.
    bool same_verdict(const Classification &other) const;
};

Classification classify(const SixVertexParams &p);

}  // namespace holant6v

#endif
