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

#include <chrono>
#include <random>

#include "holant6v/classify.h"
#include "holant6v/errors.h"
#include "holant6v/instances.h"
#include "holant6v/solvers.h"

using namespace holant6v;

namespace {

SignatureGrid single_vertex(const Signature &f, int a, int b, int c, int d) {
    SignatureGrid g;
    g.add_vertex(0, f);
    g.add_edge({0, a}, {0, b});
    g.add_edge({0, c}, {0, d});
    return g;
}

SignatureGrid wire(std::mt19937_64 &rng, int max_vertices) {
    return random_wiring(rng, std::uniform_int_distribution<int>(1, max_vertices)(rng));
}

/// A random arity-4 signature of the affine class: random affine support,
/// random Z4 linear part and random even cross terms.
Signature random_affine(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> z4(0, 3);
    std::uniform_int_distribution<size_t> word(0, 15);
    size_t base = word(rng);
    std::vector<size_t> basis;
    for (int tries = 0; tries < 4; ++tries) {
        size_t v = word(rng);
        // Keep v only if it is independent of the vectors chosen so far.
        bool independent = v != 0;
        for (size_t combo = 1; combo < (size_t{1} << basis.size()) && independent; ++combo) {
            size_t span = 0;
            for (size_t j = 0; j < basis.size(); ++j) {
                if ((combo >> j) & 1U) {
                    span ^= basis[j];
                }
            }
            independent = span != v;
        }
        if (independent && std::bernoulli_distribution(0.7)(rng)) {
            basis.push_back(v);
        }
    }
    size_t d = basis.size();
    std::vector<int> a(d);
    for (auto &x : a) {
        x = z4(rng);
    }
    std::vector<std::vector<int>> b(d, std::vector<int>(d, 0));
    for (size_t j = 0; j < d; ++j) {
        for (size_t k = j + 1; k < d; ++k) {
            b[j][k] = std::bernoulli_distribution(0.5)(rng) ? 1 : 0;
        }
    }
    Scalar lambda = nonzero_pool()[std::uniform_int_distribution<size_t>(0, nonzero_pool().size() - 1)(rng)];
    int c = z4(rng);
    std::vector<Scalar> table(16, Scalar(0));
    for (size_t u = 0; u < (size_t{1} << d); ++u) {
        size_t point = base;
        int e = c;
        for (size_t j = 0; j < d; ++j) {
            if ((u >> j) & 1U) {
                point ^= basis[j];
                e += a[j];
                for (size_t k = j + 1; k < d; ++k) {
                    if ((u >> k) & 1U) {
                        e += 2 * b[j][k];
                    }
                }
            }
        }
        table[point] = lambda * Scalar::i_power(e);
    }
    return Signature(4, table);
}

/// A random arity-4 product signature: random set partition of the four
/// variables, each block supported on a random complementary pair.
Signature random_product(std::mt19937_64 &rng) {
    std::vector<int> label(4);
    for (auto &l : label) {
        l = std::uniform_int_distribution<int>(0, 3)(rng);
    }
    std::vector<Scalar> table(16, Scalar(1));
    for (int block = 0; block < 4; ++block) {
        size_t mask = 0;
        for (int j = 0; j < 4; ++j) {
            if (label[static_cast<size_t>(j)] == block) {
                mask |= size_t{1} << (3 - j);
            }
        }
        if (mask == 0) {
            continue;
        }
        size_t u = std::uniform_int_distribution<size_t>(0, 15)(rng) & mask;
        Scalar wu = random_scalar(rng, 0.1);
        Scalar wv = random_scalar(rng, 0.3);
        for (size_t t = 0; t < 16; ++t) {
            size_t part = t & mask;
            table[t] *= part == u ? wu : part == (u ^ mask) ? wv : Scalar(0);
        }
    }
    return Signature(4, table);
}

/// Reverses every vertex's variable order and rewires slots to match.
SignatureGrid reversed(const SignatureGrid &g) {
    Permutation rev = {4, 3, 2, 1};
    SignatureGrid out = g;
    for (auto &[id, f] : out.vertices) {
        f = permute_variables(f, rev);
    }
    for (Edge &e : out.edges) {
        for (Port *p : {&e.first, &e.second}) {
            p->slot = rev[static_cast<size_t>(p->slot)] - 1;
        }
    }
    return out;
}

/// sum over y of i^Q(y) by enumeration.
Scalar gauss_oracle(const QuadraticForm &q) {
    Scalar sum(0);
    for (uint64_t y = 0; y < (uint64_t{1} << q.size()); ++y) {
        sum += Scalar::i_power(q.eval(y));
    }
    return sum;
}

}  // namespace

TEST(GaussSum, MatchesEnumeration) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> z4(0, 3);
    for (int trial = 0; trial < 400; ++trial) {
        size_t n = std::uniform_int_distribution<size_t>(0, 9)(rng);
        QuadraticForm q(n);
        q.c = z4(rng);
        for (auto &a : q.a) {
            a = z4(rng);
        }
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                uint8_t v = std::bernoulli_distribution(0.4)(rng) ? 1 : 0;
                q.cross[j][k] = v;
                q.cross[k][j] = v;
            }
        }
        EXPECT_EQ(gauss_sum(q), gauss_oracle(q)) << "trial " << trial;
    }
    QuadraticForm empty;
    EXPECT_EQ(gauss_sum(empty), Scalar(1));
}

TEST(GaussSum, Substitute) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        QuadraticForm q(5);
        q.c = 1;
        for (auto &a : q.a) {
            a = std::uniform_int_distribution<int>(0, 3)(rng);
        }
        q.cross[0][3] = q.cross[3][0] = 1;
        q.cross[1][2] = q.cross[2][1] = 1;
        QuadraticForm r = q;
        r.substitute(1, 1, {0, 4});
        for (uint64_t y = 0; y < 32; ++y) {
            uint64_t y1 = 1U ^ (y & 1U) ^ ((y >> 4) & 1U);
            uint64_t full = (y & ~uint64_t{2}) | (y1 << 1);
            EXPECT_EQ(r.eval(y) & 3, q.eval(full) & 3);
        }
    }
}

TEST(SolveP, Examples) {
    Signature f = from_six_vertex({2, 3, 0, 0, 0, 0});
    EXPECT_EQ(solve_P(single_vertex(f, 0, 2, 1, 3)), Scalar(5));
    EXPECT_EQ(solve_P(single_vertex(f, 0, 1, 2, 3)), Scalar(0));
    SignatureGrid z = build_torus(2, SixVertexParams{2, 3, 0, 0, 0, 0});
    z.vertices[2] = Signature::zero(4);
    EXPECT_EQ(solve_P(z), Scalar(0));
    SignatureGrid ice = build_torus(2, SixVertexParams{1, 1, 1, 1, 1, 1});
    try {
        solve_P(ice);
        FAIL();
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find("vertex 0"), std::string::npos);
    }
}

TEST(SolveA, Examples) {
    Signature f = from_six_vertex({1, 1, 1, 1, 0, 0});
    EXPECT_EQ(solve_A(single_vertex(f, 0, 2, 1, 3)), Scalar(4));
    EXPECT_EQ(solve_A(single_vertex(f, 0, 1, 2, 3)), Scalar(2));
    // Support forces x1 = x2 while the loop forces x1 != x2.
    Signature eq(4, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    EXPECT_EQ(solve_A(single_vertex(eq, 0, 1, 2, 3)), Scalar(0));
    EXPECT_THROW(solve_A(build_torus(2, SixVertexParams{1, 1, 1, 1, 1, 1})), InputError);
}

TEST(SolveM, Examples) {
    Signature f = from_six_vertex({1, 0, 1, 0, 1, 0});
    for (auto loops : std::vector<std::array<int, 4>>{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}) {
        SignatureGrid g = single_vertex(f, loops[0], loops[1], loops[2], loops[3]);
        EXPECT_EQ(solve_M(g), brute_force_eval(g).value);
    }
    SignatureGrid torus = build_torus(2, SixVertexParams{1, 0, 1, 0, 1, 0});
    EXPECT_EQ(solve_M(torus), brute_force_eval(torus).value);
    // (1,0,0,0,0,1) pins x1 = 0 at every support string; joining slot 0 to
    // slot 0 of a second copy pins both ends of one edge to 0.
    Signature pinned = from_six_vertex({1, 0, 0, 0, 0, 1});
    SignatureGrid g;
    g.add_vertex(0, pinned);
    g.add_vertex(1, pinned);
    g.add_edge({0, 0}, {1, 0});
    g.add_edge({0, 1}, {1, 1});
    g.add_edge({0, 2}, {1, 2});
    g.add_edge({0, 3}, {1, 3});
    EXPECT_EQ(solve_M(g), Scalar(0));
    EXPECT_EQ(brute_force_eval(g).value, Scalar(0));
    EXPECT_THROW(solve_M(build_torus(2, SixVertexParams{1, 1, 1, 1, 1, 1})), InputError);

    // Minority 0 at one vertex, minority 1 at the other: rejected by the
    // M solver, still evaluated by solve() through brute force.
    SignatureGrid mixed;
    mixed.add_vertex(0, from_six_vertex({1, 0, 1, 0, 1, 0}));
    mixed.add_vertex(1, from_six_vertex({1, 0, 0, 1, 1, 0}));
    mixed.add_edge({0, 1}, {1, 0});
    mixed.add_edge({0, 2}, {1, 1});
    mixed.add_edge({0, 3}, {1, 2});
    mixed.add_edge({0, 0}, {1, 3});
    EXPECT_THROW(solve_M(mixed), InputError);
    EvalResult r = solve(mixed);
    EXPECT_EQ(r.method, EvalMethod::brute_force);
    EXPECT_EQ(r.value, brute_force_eval(mixed).value);
}

TEST(Solvers, SoundOnRandomClassGrids) {
    std::mt19937_64 rng(47);
    for (TractableClass cls : {TractableClass::P, TractableClass::A, TractableClass::M}) {
        for (int trial = 0; trial < 120; ++trial) {
            SignatureGrid g = wire(rng, 6);
            // Vertices of an M grid share one zero pattern and differ only in
            // their nonzero weights.
            SixVertexParams shape = random_params_in_class(rng, cls);
            for (auto &[id, f] : g.vertices) {
                SixVertexParams p = cls == TractableClass::M ? shape : random_params_in_class(rng, cls);
                if (cls == TractableClass::M) {
                    for (int k = 0; k < 6; ++k) {
                        if (!p[k].is_zero()) {
                            p[k] = random_scalar(rng, 0.0);
                        }
                    }
                }
                f = from_six_vertex(p);
            }
            Scalar expected = brute_force_eval(g).value;
            switch (cls) {
                case TractableClass::P:
                    ASSERT_EQ(solve_P(g), expected) << "trial " << trial;
                    break;
                case TractableClass::A:
                    ASSERT_EQ(solve_A(g), expected) << "trial " << trial;
                    break;
                case TractableClass::M:
                    ASSERT_EQ(solve_M(g), expected) << "trial " << trial;
                    break;
            }
            EXPECT_EQ(solve(g).value, expected);
        }
    }
}

TEST(Solvers, SoundOnGeneralSignatures) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        SignatureGrid g = wire(rng, 6);
        for (auto &[id, f] : g.vertices) {
            f = random_affine(rng);
            ASSERT_TRUE(in_A(f).has_value()) << f.str();
        }
        Scalar expected = brute_force_eval(g).value;
        ASSERT_EQ(solve_A(g), expected) << "trial " << trial;
        EXPECT_EQ(solve_A(reversed(g)), expected);
    }
    for (int trial = 0; trial < 200; ++trial) {
        SignatureGrid g = wire(rng, 6);
        for (auto &[id, f] : g.vertices) {
            f = random_product(rng);
            ASSERT_TRUE(in_P(f).has_value()) << f.str();
        }
        ASSERT_EQ(solve_P(g), brute_force_eval(g).value) << "trial " << trial;
    }
}

TEST(Solvers, Dispatch) {
    EvalResult ice = solve(build_torus(2, SixVertexParams{1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(ice.method, EvalMethod::brute_force);
    EXPECT_EQ(ice.value, Scalar(18));
    SignatureGrid a = build_torus(2, SixVertexParams{1, 1, 1, 1, 0, 0});
    a.vertices[0] = from_six_vertex({1, 1, 1, -1, 0, 0});
    EvalResult ra = solve(a);
    EXPECT_EQ(ra.method, EvalMethod::solver_a);
    EXPECT_EQ(ra.value, brute_force_eval(a).value);
    EvalResult rp = solve(build_torus(2, SixVertexParams{2, 3, 0, 0, 0, 0}));
    EXPECT_EQ(rp.method, EvalMethod::solver_p);
    EXPECT_EQ(rp.value, brute_force_eval(build_torus(2, SixVertexParams{2, 3, 0, 0, 0, 0})).value);
    EvalResult rm = solve(build_torus(3, SixVertexParams{1, 0, 2, 0, 3, 0}));
    EXPECT_EQ(rm.method, EvalMethod::solver_m);
    EXPECT_THROW(solve(build_torus(5, SixVertexParams{1, 1, 1, 1, 1, 1})), CapExceeded);
}

TEST(Solvers, LargeToriAgreeWithContractionAndScale) {
    std::mt19937_64 rng(59);
    for (TractableClass cls : {TractableClass::P, TractableClass::A, TractableClass::M}) {
        for (int trial = 0; trial < 3; ++trial) {
            SixVertexParams p = random_params_in_class(rng, cls);
            SignatureGrid small = build_torus(6, p);
            EXPECT_EQ(solve(small).value, contract_eval(small).value) << class_name(cls);
            auto start = std::chrono::steady_clock::now();
            EvalResult big = solve(build_torus(12, p));
            double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            EXPECT_LT(seconds, 5.0) << class_name(cls);
            EXPECT_NE(big.method, EvalMethod::brute_force);
        }
    }
}
