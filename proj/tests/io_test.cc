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
#include "holant6v/instances.h"
#include "holant6v/io.h"

using namespace holant6v;
using nlohmann::json;

TEST(Io, Scalars) {
    EXPECT_EQ(scalar_from_json(json(3)), Scalar(3));
    EXPECT_EQ(scalar_from_json(json("1/2")), Scalar(Rational(1, 2)));
    EXPECT_EQ(scalar_from_json(json("i")), Scalar::i());
    EXPECT_THROW(scalar_from_json(json(1.5)), InputError);
    EXPECT_THROW(scalar_from_json(json("1 +")), InputError);
    auto p = six_vertex_from_strings({"1", "-1", "i", "2", "0", "1/3"});
    EXPECT_EQ(p[2], Scalar::i());
    EXPECT_THROW(six_vertex_from_strings({"1", "2"}), InputError);
}

TEST(Io, GridRoundTrip) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 50; ++trial) {
        SignatureGrid g = random_wiring(rng, 4);
        for (auto &[id, f] : g.vertices) {
            f = trial % 2 == 0 ? random_signature(rng) : from_six_vertex(random_six_vertex(rng));
        }
        SignatureGrid back = grid_from_json(json::parse(grid_to_json(g).dump()));
        EXPECT_EQ(back.vertices, g.vertices);
        ASSERT_EQ(back.edges.size(), g.edges.size());
        for (size_t k = 0; k < g.edges.size(); ++k) {
            EXPECT_EQ(back.edges[k].first.vertex, g.edges[k].first.vertex);
            EXPECT_EQ(back.edges[k].first.slot, g.edges[k].first.slot);
            EXPECT_EQ(back.edges[k].second.vertex, g.edges[k].second.vertex);
            EXPECT_EQ(back.edges[k].second.slot, g.edges[k].second.slot);
        }
    }
}

TEST(Io, GridErrors) {
    EXPECT_THROW(grid_from_json(json::parse("{}")), InputError);
    EXPECT_THROW(grid_from_json(json::parse(R"({"vertices": [{"id": 0}], "edges": []})")), InputError);
    EXPECT_THROW(grid_from_json(json::parse(R"({"vertices": [], "edges": [[[0, 1]]]})")), InputError);
    EXPECT_THROW(signature_from_json(json::parse(R"({"arity": 2, "values": [1, 2, 3]})")), InputError);
    SignatureGrid g = grid_from_json(json::parse(
        R"({"vertices": [{"id": 0, "signature": {"six_vertex": ["1", "1", "1", "1", "1", "1"]}}],
            "edges": [[[0, 0], [0, 2]], [[0, 1], [0, 3]]]})"));
    EXPECT_EQ(brute_force_eval(g).value, Scalar(4));
}

TEST(Io, ClassificationJson) {
    json hard = classification_to_json(classify({2, 2, 1, 1, 1, 1}));
    EXPECT_EQ(hard["verdict"], "Hard");
    EXPECT_EQ(hard["case"], 2);
    EXPECT_TRUE(hard.contains("witness"));
    json m = classification_to_json(classify({1, 0, 1, 0, 1, 0}));
    EXPECT_EQ(m["verdict"], "Tractable");
    EXPECT_EQ(m["class"], "M");
}

TEST(Io, Config) {
    Config c = config_from_json(json::parse(R"({"brute_force_edge_cap": 10, "deterministic_seed": 7})"));
    EXPECT_EQ(c.brute_force_edge_cap, 10U);
    EXPECT_EQ(c.seed, 7U);
    EXPECT_EQ(c.contraction_rank_cap, 26);
    EXPECT_EQ(c.limits().brute_force_edge_cap, 10U);
    EXPECT_THROW(config_from_json(json::parse(R"({"precision_bits": "x"})")), InputError);
}
