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

#include <gtest/gtest.h>

#include <random>

#include "holant6v/csp.h"
#include "holant6v/errors.h"
#include "holant6v/holant.h"
#include "holant6v/instances.h"

using namespace holant6v;

namespace {

Scalar csp_oracle(const Signature &g, const CspInstance &inst) {
    Scalar sum(0);
    for (uint32_t sigma = 0; sigma < (1U << inst.num_vars); ++sigma) {
        Scalar w(1);
        for (const auto &[u, v] : inst.clauses) {
            w *= g[(((sigma >> u) & 1U) << 1) | ((sigma >> v) & 1U)];
        }
        sum += w;
    }
    return sum;
}

Scalar reduce_and_eval(const Signature &g, const CspInstance &inst) {
    CspReduction r = csp_reduction(g, inst);
    EXPECT_TRUE(validate(r.grid).empty());
    return contract_eval(r.grid).value * r.multiplier;
}

}  // namespace

TEST(Csp, VertexSignature) {
    Signature g(2, {2, 3, 5, 7});
    SixVertexParams p = csp_vertex_params(g);
    EXPECT_EQ(p, (SixVertexParams{0, 0, 2, 7, 3, 5}));
    Signature f = from_six_vertex(p);
    for (size_t t = 0; t < 16; ++t) {
        int x1 = (t >> 3) & 1;
        int x2 = (t >> 2) & 1;
        int x3 = (t >> 1) & 1;
        int x4 = t & 1;
        Scalar expected = (x1 != x2 && x3 != x4) ? g[static_cast<size_t>(2 * x1 + x4)] : Scalar(0);
        EXPECT_EQ(f[t], expected) << t;
    }
}

TEST(Csp, Examples) {
    Signature ones(2, {1, 1, 1, 1});
    CspInstance inst{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}};
    EXPECT_EQ(reduce_and_eval(ones, inst), Scalar(16));
    Signature eq(2, {1, 0, 0, 1});
    EXPECT_EQ(reduce_and_eval(eq, CspInstance{2, {{0, 1}}}), Scalar(2));
    EXPECT_THROW(csp_reduction(eq, CspInstance{1, {{0, 0}}}), InputError);
    EXPECT_THROW(csp_reduction(eq, CspInstance{2, {{0, 2}}}), InputError);
    CspReduction isolated = csp_reduction(eq, CspInstance{4, {{0, 1}}});
    EXPECT_EQ(isolated.multiplier, Scalar(4));
    EXPECT_EQ(isolated.grid.vertices.size(), 1U);
    EXPECT_EQ(csp_partition_function(eq, CspInstance{4, {{0, 1}}}), Scalar(8));
}

TEST(Csp, ReductionMatchesBruteForce) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        Signature g = random_binary(rng);
        CspInstance inst = random_csp(rng, 4, 6);
        Scalar expected = csp_oracle(g, inst);
        EXPECT_EQ(csp_partition_function(g, inst), expected);
        EXPECT_EQ(reduce_and_eval(g, inst), expected) << "trial " << trial;
    }
}
