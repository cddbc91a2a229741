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
#include "holant6v/interpolate.h"

using namespace holant6v;

namespace {

Scalar power(const Scalar &x, long long e) {
    Scalar base = e < 0 ? Scalar(1) / x : x;
    Scalar out(1);
    for (long long k = 0; k < (e < 0 ? -e : e); ++k) {
        out *= base;
    }
    return out;
}

Scalar direct_sum(int m, const std::vector<Scalar> &x, const Scalar &phi, const Scalar &psi) {
    auto points = cone_points(m);
    Scalar sum(0);
    for (size_t k = 0; k < points.size(); ++k) {
        sum += power(phi, points[k].first) * power(psi, points[k].second) * x[k];
    }
    return sum;
}

}  // namespace

TEST(Lattice, Examples) {
    EXPECT_EQ(compute_lattice(2, 3).rank, 0);
    ExponentLattice half = compute_lattice(2, Scalar(Rational(1, 2)));
    EXPECT_EQ(half.rank, 1);
    EXPECT_EQ(half.generator, std::make_pair(1LL, 1LL));
    ExponentLattice units = compute_lattice(Scalar::i(), Scalar::i());
    EXPECT_EQ(units.rank, 2);
    EXPECT_TRUE(units.contains(1, -1));
    EXPECT_TRUE(units.contains(4, 0));
    EXPECT_TRUE(units.contains(3, 1));
    EXPECT_FALSE(units.contains(1, 0));
    EXPECT_FALSE(units.contains(2, 0));
    ExponentLattice mixed = compute_lattice(Scalar::i(), 2);
    EXPECT_EQ(mixed.rank, 1);
    EXPECT_EQ(mixed.generator, std::make_pair(4LL, 0LL));
    ExponentLattice same = compute_lattice(2, 2);
    EXPECT_EQ(same.generator, std::make_pair(1LL, -1LL));
    EXPECT_THROW(compute_lattice(Scalar::sqrt2(), 2), InputError);
    EXPECT_THROW(compute_lattice(0, 2), InputError);
}

TEST(Lattice, MembershipMatchesDirectPowers) {
    std::vector<Scalar> pool = {Scalar(2),
                                Scalar(-2),
                                Scalar::i(),
                                -Scalar::i(),
                                Scalar(-1),
                                Scalar(Rational(1, 2)),
                                Scalar(GaussianRational(Rational(1), Rational(1))),
                                Scalar(GaussianRational(Rational(1), Rational(-1))),
                                Scalar(GaussianRational(Rational(3, 5), Rational(4, 5))),
                                Scalar(4),
                                Scalar(GaussianRational(Rational(0), Rational(2)))};
    for (const auto &alpha : pool) {
        for (const auto &beta : pool) {
            ExponentLattice l = compute_lattice(alpha, beta);
            if (l.rank == 1) {
                auto [s, t] = *l.generator;
                EXPECT_EQ(power(alpha, s) * power(beta, t), Scalar(1));
            }
            for (long long j = -8; j <= 8; ++j) {
                for (long long k = -8; k <= 8; ++k) {
                    bool one = power(alpha, j) * power(beta, k) == Scalar(1);
                    EXPECT_EQ(l.contains(j, k), one) << alpha.str() << " " << beta.str() << " " << j << "," << k;
                }
            }
        }
    }
}

TEST(Interpolation, Examples) {
    EXPECT_EQ(cone_size(0), 1U);
    EXPECT_EQ(cone_size(2), 6U);
    EXPECT_EQ(cone_points(1), (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}}));

    InterpolationInstance basic{2, 3, 1, synthesize_values(2, 3, 1, {1, 2, 3})};
    EXPECT_EQ(basic.values.size(), 3U);
    EXPECT_EQ(interpolation_solve(basic, 1, 1), Scalar(6));
    EXPECT_EQ(interpolation_solve(basic, 5, -1), Scalar(1 + 10 - 3));

    Scalar half(Rational(1, 2));
    std::vector<Scalar> x = {1, 2, -1, 4, Scalar::i(), 7};
    InterpolationInstance coset{2, half, 2, synthesize_values(2, half, 2, x)};
    Scalar third(Rational(1, 3));
    EXPECT_EQ(interpolation_solve(coset, 3, third), direct_sum(2, x, 3, third));
    EXPECT_EQ(interpolation_solve(coset, 1, 1), Scalar(1 + 2 - 1 + 4 + 7) + Scalar::i());
    EXPECT_THROW(interpolation_solve(coset, 3, 3), InputError);

    InterpolationInstance rank2{Scalar::i(), Scalar::i(), 1, synthesize_values(Scalar::i(), Scalar::i(), 1, {1, 1, 1})};
    EXPECT_THROW(interpolation_solve(rank2, 1, 1), InputError);
    InterpolationInstance short_values{2, 3, 1, {1, 2}};
    EXPECT_THROW(interpolation_solve(short_values, 1, 1), InputError);
}

TEST(Interpolation, RecoversCosetSums) {
    std::mt19937_64 rng(79);
    std::vector<std::pair<Scalar, Scalar>> pairs = {{2, 3},
                                                    {2, Scalar(Rational(1, 2))},
                                                    {2, 2},
                                                    {Scalar::i(), 2},
                                                    {-2, 4},
                                                    {3, Scalar(GaussianRational(Rational(1), Rational(1)))}};
    for (const auto &[alpha, beta] : pairs) {
        ExponentLattice l = compute_lattice(alpha, beta);
        for (int m = 0; m <= 3; ++m) {
            std::vector<Scalar> x(cone_size(m));
            for (auto &v : x) {
                v = random_scalar(rng);
            }
            InterpolationInstance inst{alpha, beta, m, synthesize_values(alpha, beta, m, x)};
            EXPECT_EQ(interpolation_solve(inst, 1, 1), direct_sum(m, x, 1, 1));
            if (l.rank == 0) {
                EXPECT_EQ(interpolation_solve(inst, 3, -2), direct_sum(m, x, 3, -2));
            } else {
                // phi = alpha, psi = beta always satisfies the lattice.
                EXPECT_EQ(interpolation_solve(inst, alpha, beta), direct_sum(m, x, alpha, beta));
            }
        }
    }
}

TEST(RootBracket, SignChange) {
    EXPECT_EQ(root_polynomial(2, 1, 3), Rational(4));
    auto exact = bracket_root(2, 1, 1, 3, Rational(1, 100));
    ASSERT_TRUE(exact.has_value());
    EXPECT_EQ(exact->first, Rational(2));
    EXPECT_EQ(exact->second, Rational(2));
    EXPECT_FALSE(bracket_root(2, 1, 3, 4, Rational(1, 100)).has_value());

    Rational width(1, 1000);
    auto r = bracket_root(3, 1, 1, 2, width);
    ASSERT_TRUE(r.has_value());
    EXPECT_LE(r->second - r->first, width);
    EXPECT_NE(root_polynomial(3, 1, r->first).sign(), root_polynomial(3, 1, r->second).sign());
    // The real root of phi^3 = phi + 2.
    EXPECT_LE(r->first.to_double(), 1.5213797068);
    EXPECT_GE(r->second.to_double(), 1.5213797068);
    EXPECT_THROW(bracket_root(3, 1, 1, 2, Rational(0)), InputError);
    EXPECT_THROW(root_polynomial(-1, 1, 0), InputError);
}
