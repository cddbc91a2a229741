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

#include "holant6v/errors.h"
#include "holant6v/holant.h"
#include "holant6v/instances.h"

using namespace holant6v;

namespace {

SignatureGrid single_vertex(const Signature &f, int a, int b, int c, int d) {
    SignatureGrid g;
    g.add_vertex(0, f);
    g.add_edge({0, a}, {0, b});
    g.add_edge({0, c}, {0, d});
    return g;
}

SixVertexParams ice() {
    return {1, 1, 1, 1, 1, 1};
}

/// Row-to-row transfer matrix of the n x n torus: the state is the values at
/// the south ports of one row; the next row sees their complements at its
/// north ports.
Scalar torus_by_transfer_matrix(int n, const Signature &f) {
    size_t states = size_t{1} << n;
    std::vector<std::vector<Scalar>> t(states, std::vector<Scalar>(states, Scalar(0)));
    auto bit = [](size_t word, int k) { return static_cast<int>((word >> k) & 1U); };
    for (size_t in = 0; in < states; ++in) {
        for (size_t out = 0; out < states; ++out) {
            Scalar sum(0);
            for (size_t h = 0; h < states; ++h) {
                Scalar prod(1);
                for (int c = 0; c < n && !prod.is_zero(); ++c) {
                    int north = 1 - bit(in, c);
                    int east = bit(h, c);
                    int south = bit(out, c);
                    int west = 1 - bit(h, (c + n - 1) % n);
                    prod *= f[static_cast<size_t>((north << 3) | (east << 2) | (south << 1) | west)];
                }
                sum += prod;
            }
            t[in][out] = sum;
        }
    }
    std::vector<std::vector<Scalar>> power = t;
    for (int r = 1; r < n; ++r) {
        std::vector<std::vector<Scalar>> next(states, std::vector<Scalar>(states, Scalar(0)));
        for (size_t i = 0; i < states; ++i) {
            for (size_t k = 0; k < states; ++k) {
                if (power[i][k].is_zero()) {
                    continue;
                }
                for (size_t j = 0; j < states; ++j) {
                    next[i][j] += power[i][k] * t[k][j];
                }
            }
        }
        power = std::move(next);
    }
    Scalar trace(0);
    for (size_t i = 0; i < states; ++i) {
        trace += power[i][i];
    }
    return trace;
}

SignatureGrid random_grid(std::mt19937_64 &rng, int max_vertices) {
    SignatureGrid g = random_wiring(rng, std::uniform_int_distribution<int>(1, max_vertices)(rng));
    for (auto &[id, f] : g.vertices) {
        f = std::bernoulli_distribution(0.6)(rng) ? from_six_vertex(random_six_vertex(rng)) : random_signature(rng);
    }
    return g;
}

}  // namespace

TEST(Grid, Validate) {
    Signature f = from_six_vertex(ice());
    EXPECT_TRUE(validate(single_vertex(f, 0, 1, 2, 3)).empty());

    SignatureGrid twice;
    twice.add_vertex(0, f);
    twice.add_edge({0, 0}, {0, 1});
    twice.add_edge({0, 1}, {0, 2});
    auto problems = validate(twice);
    ASSERT_FALSE(problems.empty());
    bool names_port = false;
    for (const auto &p : problems) {
        names_port = names_port || p.find("port (0, 1) is used by edges #0 and #1") != std::string::npos;
    }
    EXPECT_TRUE(names_port);
    try {
        require_valid(twice);
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.diagnostics, problems);
    }

    SignatureGrid bad;
    bad.add_vertex(0, Signature(2, {1, 0, 0, 1}));
    bad.add_edge({0, 0}, {7, 1});
    bad.add_edge({0, 2}, {0, 5});
    auto msgs = validate(bad);
    std::string all;
    for (const auto &m : msgs) {
        all += m + "\n";
    }
    EXPECT_NE(all.find("arity 2"), std::string::npos);
    EXPECT_NE(all.find("unknown vertex 7"), std::string::npos);
    EXPECT_NE(all.find("slot outside"), std::string::npos);
    EXPECT_NE(all.find("port (0, 1) is not covered"), std::string::npos);

    SignatureGrid empty;
    EXPECT_TRUE(validate(empty).empty());
    EXPECT_EQ(brute_force_eval(empty).value, Scalar(1));
    EXPECT_EQ(contract_eval(empty).value, Scalar(1));
}

TEST(Grid, Torus) {
    SignatureGrid t = build_torus(2, ice());
    EXPECT_EQ(t.vertices.size(), 4U);
    EXPECT_EQ(t.edges.size(), 8U);
    EXPECT_TRUE(validate(t).empty());
    EXPECT_THROW(build_torus(1, ice()), InputError);
    SignatureGrid t5 = build_torus(5, ice());
    EXPECT_EQ(t5.edges.size(), 50U);
    EXPECT_EQ(connected_components(t5).size(), 1U);
}

TEST(BruteForce, Examples) {
    Signature f = from_six_vertex(ice());
    EXPECT_EQ(brute_force_eval(single_vertex(f, 0, 2, 1, 3)).value, Scalar(4));
    Signature g = from_six_vertex({2, 3, 0, 0, 0, 0});
    EXPECT_EQ(brute_force_eval(single_vertex(g, 0, 2, 1, 3)).value, Scalar(5));
    SignatureGrid with_zero = build_torus(2, ice());
    with_zero.vertices[3] = Signature::zero(4);
    EXPECT_EQ(brute_force_eval(with_zero).value, Scalar(0));
    EXPECT_EQ(brute_force_eval(build_torus(2, ice())).assignments, 256U);
}

TEST(BruteForce, Cap) {
    EXPECT_THROW(brute_force_eval(build_torus(4, ice())), CapExceeded);
    EvalLimits small;
    small.brute_force_edge_cap = 4;
    EXPECT_THROW(brute_force_eval(build_torus(2, ice()), small), CapExceeded);
    EvalLimits big;
    big.brute_force_edge_cap = 32;
    EXPECT_EQ(brute_force_eval(build_torus(4, ice()), big).value, Scalar(2970));
}

TEST(Contraction, MatchesBruteForceOnRandomGrids) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        SignatureGrid g = random_grid(rng, 6);
        EvalResult b = brute_force_eval(g);
        EvalResult c = contract_eval(g);
        ASSERT_EQ(b.value, c.value) << "trial " << trial;
        EXPECT_LE(c.peak_rank, 12);
    }
}

TEST(Contraction, TorusAgainstTransferMatrix) {
    std::mt19937_64 rng(8);
    for (int n : {2, 3, 4, 5}) {
        EXPECT_EQ(contract_eval(build_torus(n, ice())).value, torus_by_transfer_matrix(n, from_six_vertex(ice())));
        for (int k = 0; k < 3; ++k) {
            Signature f = from_six_vertex(random_six_vertex(rng, 0.1));
            EXPECT_EQ(contract_eval(build_torus(n, f)).value, torus_by_transfer_matrix(n, f)) << "n=" << n;
        }
        Signature general = random_signature(rng, 0.2);
        EXPECT_EQ(contract_eval(build_torus(n, general)).value, torus_by_transfer_matrix(n, general));
    }
    EXPECT_EQ(brute_force_eval(build_torus(2, ice())).value, contract_eval(build_torus(2, ice())).value);
}

TEST(Contraction, DisconnectedIsProduct) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        SignatureGrid a = random_grid(rng, 3);
        SignatureGrid b = random_grid(rng, 3);
        SignatureGrid both = a;
        int shift = 100;
        for (const auto &[id, f] : b.vertices) {
            both.add_vertex(id + shift, f);
        }
        for (const Edge &e : b.edges) {
            both.add_edge({e.first.vertex + shift, e.first.slot}, {e.second.vertex + shift, e.second.slot});
        }
        EXPECT_EQ(contract_eval(both).value, contract_eval(a).value * contract_eval(b).value);
        EXPECT_EQ(brute_force_eval(both).value, brute_force_eval(a).value * brute_force_eval(b).value);
    }
}

TEST(Contraction, InvariantUnderRelabeling) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        SignatureGrid g = random_grid(rng, 5);
        SignatureGrid relabeled;
        auto label = [](int v) { return 1000 - 7 * v; };
        for (const auto &[id, f] : g.vertices) {
            relabeled.add_vertex(label(id), f);
        }
        for (const Edge &e : g.edges) {
            relabeled.add_edge({label(e.second.vertex), e.second.slot}, {label(e.first.vertex), e.first.slot});
        }
        EXPECT_EQ(contract_eval(relabeled).value, contract_eval(g).value);
    }
}

TEST(Contraction, InvariantUnderRewiring) {
    std::mt19937_64 rng(23);
    auto perms = all_permutations();
    for (int trial = 0; trial < 30; ++trial) {
        SignatureGrid g = random_grid(rng, 4);
        Scalar before = brute_force_eval(g).value;
        int v = std::uniform_int_distribution<int>(0, static_cast<int>(g.vertices.size()) - 1)(rng);
        Permutation perm = perms[std::uniform_int_distribution<size_t>(0, 23)(rng)];
        g.vertices[v] = permute_variables(g.vertices[v], perm);
        // The edge at slot j of the old signature moves to slot perm(j) - 1.
        for (Edge &e : g.edges) {
            for (Port *p : {&e.first, &e.second}) {
                if (p->vertex == v) {
                    p->slot = perm[static_cast<size_t>(p->slot)] - 1;
                }
            }
        }
        EXPECT_EQ(brute_force_eval(g).value, before);
        EXPECT_EQ(contract_eval(g).value, before);
    }
}

TEST(Contraction, HolographicInvariance) {
    std::mt19937_64 rng(29);
    Matrix z = holographic_basis_z();
    for (int trial = 0; trial < 30; ++trial) {
        SignatureGrid g = random_grid(rng, 5);
        std::map<int, Signature> transformed;
        for (const auto &[id, f] : g.vertices) {
            transformed.emplace(id, holographic_transform(f, z));
        }
        EXPECT_EQ(eval_bipartite_equality(g, transformed), brute_force_eval(g).value);
    }
    Signature f = from_six_vertex(ice());
    SignatureGrid one = single_vertex(f, 0, 2, 1, 3);
    EXPECT_EQ(eval_bipartite_equality(one, {{0, holographic_transform(f, z)}}), Scalar(4));
    SignatureGrid zero = single_vertex(Signature::zero(4), 0, 1, 2, 3);
    EXPECT_EQ(eval_bipartite_equality(zero, {{0, Signature::zero(4)}}), Scalar(0));
    EXPECT_THROW(eval_bipartite_equality(one, {}), InputError);
}

TEST(Contraction, IceCountsEulerianOrientations) {
    Signature f = from_six_vertex(ice());
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        SignatureGrid g = random_wiring(rng, std::uniform_int_distribution<int>(1, 6)(rng));
        for (auto &[id, sig] : g.vertices) {
            sig = f;
        }
        EXPECT_EQ(contract_eval(g).value, Scalar(static_cast<int64_t>(count_eulerian_orientations(g))));
    }
    EXPECT_EQ(Scalar(static_cast<int64_t>(count_eulerian_orientations(build_torus(3, ice())))),
              contract_eval(build_torus(3, ice())).value);
    EXPECT_EQ(count_eulerian_orientations(build_torus(2, ice())), 18U);
}

TEST(Contraction, PlansAndCaps) {
    SignatureGrid g = build_torus(4, ice());
    ContractionPlan p1 = greedy_plan(g);
    ContractionPlan p2 = greedy_plan(g);
    EXPECT_EQ(p1.steps, p2.steps);
    EXPECT_EQ(p1.steps.size(), 15U);
    EvalResult r = contract_eval(g, p1);
    EXPECT_EQ(r.value, Scalar(2970));
    EXPECT_EQ(r.peak_rank, p1.peak_rank);

    // Sequential order: merge vertex 0 with 1, result with 2, ...
    ContractionPlan linear;
    for (int k = 1; k < 16; ++k) {
        linear.steps.emplace_back(k == 1 ? 0 : 15 + k - 1, k);
    }
    EXPECT_EQ(contract_eval(g, linear).value, Scalar(2970));

    ContractionPlan broken = linear;
    broken.steps[3] = {0, 4};
    EXPECT_THROW(contract_eval(g, broken), InputError);
    ContractionPlan short_plan;
    short_plan.steps = {{0, 1}};
    EXPECT_THROW(contract_eval(g, short_plan), InputError);

    EvalLimits tight;
    tight.contraction_rank_cap = 3;
    try {
        contract_eval(g, {}, tight);
        FAIL();
    } catch (const CapExceeded &e) {
        EXPECT_NE(std::string(e.what()).find("step"), std::string::npos);
    }
}
