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

#ifndef HOLANT6V_GADGETS_H
#define HOLANT6V_GADGETS_H

#include <string>
#include <vector>

#include "holant6v/signature.h"

namespace holant6v {

/// Requires a = x, b = y, c = z.
void require_twins(const SixVertexParams &p);

/// s copies chained as M (N M')^(s-1), M' the (x2 x1, x4 x3) view.
Signature chain_D(const SixVertexParams &twins, int s);

/// Anti-diagonal corners a^s and middle diagonal (b+c)^s, (b-c)^s.
Matrix lambda_s(const Scalar &a, const Scalar &b, const Scalar &c, int s);
/// P Lambda_s P with P = diag(1, H, 1).
Signature closed_form_D(const Scalar &a, const Scalar &b, const Scalar &c, int s);

/// (ax, ax, 2bc, 2yz, by+cz, by+cz).
SixVertexParams mnm_product(const SixVertexParams &p);
/// Two copies joined back to back through N, evaluated by compose().
SixVertexParams mnm_wiring(const SixVertexParams &p);

/// alpha beta gamma - 2 - alpha - beta - gamma for arguments in {0, i, -i}.
Scalar hardness_determinant(const Scalar &alpha, const Scalar &beta, const Scalar &gamma);

struct GadgetStep {
    std::string wiring;
    SixVertexParams params;
    bool all_nonzero = false;
};

struct OneZeroReport {
    Permutation normalization{};
    /// Input with the zero moved to b.
    SixVertexParams normalized;
    std::vector<GadgetStep> steps;
    /// Wiring of the first all-nonzero result.
    std::string branch;
    SixVertexParams result;
};

/// Requires exactly one zero among the six values.
OneZeroReport one_zero_chain(const SixVertexParams &p);

struct TwoZeroReport {
    Permutation normalization{};
    /// Input with zeros moved to c and y.
    SixVertexParams normalized;
    /// (ax, ax, b^2, z^2, bz, bz) of the normalized input.
    SixVertexParams product;
};

/// Requires exactly two zeros, in distinct pairs.
TwoZeroReport two_zero_product(const SixVertexParams &p);

/// M_{rows}(f) N M_{rows2, cols2}(f) with both views of the same six-vertex f.
SixVertexParams pair_product(const SixVertexParams &p, std::array<int, 2> rows1, std::array<int, 2> cols1,
                             std::array<int, 2> rows2, std::array<int, 2> cols2);

}  // namespace holant6v

#endif
