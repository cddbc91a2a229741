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
#include "holant6v/scalar.h"

using namespace holant6v;

namespace {

Rational random_rational(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int64_t> num(-20, 20);
    std::uniform_int_distribution<int64_t> den(1, 9);
    return Rational(num(rng), den(rng));
}

Scalar random_field_element(std::mt19937_64 &rng) {
    return Scalar(GaussianRational(random_rational(rng), random_rational(rng)),
                  GaussianRational(random_rational(rng), random_rational(rng)));
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational(0, 5).denominator(), 1);
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, OverflowSpillsToBigAndBack) {
    Rational big(INT64_MAX);
    Rational sum = big + big;
    EXPECT_EQ(sum.to_mpq(), mpq_class(mpz_class(INT64_MAX) * 2));
    Rational back = sum - big;
    EXPECT_EQ(back, big);
    Rational tiny(1, INT64_MAX);
    EXPECT_EQ((tiny * tiny).to_mpq(), mpq_class(1, mpz_class(INT64_MAX) * mpz_class(INT64_MAX)));
    EXPECT_EQ(Rational(INT64_MIN + 1) - Rational(1) + Rational(1), Rational(INT64_MIN + 1));
}

TEST(Rational, ParseAndCompare) {
    EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("+4"), Rational(4));
    EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
    EXPECT_THROW(Rational::parse("x"), InputError);
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational::parse("123456789012345678901234567890"), Rational(INT64_MAX));
}

TEST(Scalar, FieldArithExamples) {
    Scalar one(1);
    Scalar r2 = Scalar::sqrt2();
    EXPECT_EQ(field_arith(one, r2, ArithKind::add).str(), "1+(1)r2");
    EXPECT_EQ(field_arith(r2, r2, ArithKind::mul), Scalar(2));
    Scalar inv = field_arith(one, one + r2, ArithKind::div);
    EXPECT_EQ(inv, Scalar(-1) + r2);
    EXPECT_EQ(inv * (one + r2), one);
    EXPECT_THROW(field_arith(one, Scalar(0), ArithKind::div), DivisionByZero);
}

TEST(Scalar, ParseFormatRoundTrip) {
    EXPECT_EQ(Scalar::parse("1/2+3i+(0+1i)r2").str(), "1/2+3i+(0+1i)r2");
    EXPECT_EQ(Scalar::parse("i"), Scalar::i());
    EXPECT_EQ(Scalar::parse("-i"), -Scalar::i());
    EXPECT_EQ(Scalar::parse("1+-3i"), Scalar(GaussianRational(1, -3)));
    EXPECT_EQ(Scalar::parse("(1)r2"), Scalar::sqrt2());
    EXPECT_THROW(Scalar::parse("1+"), InputError);
    EXPECT_THROW(Scalar::parse("sqrt(3)"), InputError);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 2000; ++k) {
        Scalar s = random_field_element(rng);
        EXPECT_EQ(Scalar::parse(s.str()), s) << s.str();
    }
}

TEST(Scalar, FieldAxiomsRandomized) {
    std::mt19937_64 rng(12345);
    for (int k = 0; k < 10000; ++k) {
        Scalar a = random_field_element(rng);
        Scalar b = random_field_element(rng);
        Scalar c = random_field_element(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inverse(), Scalar(1)) << a.str();
            ASSERT_EQ((b / a) * a, b);
        }
    }
}

TEST(Scalar, PowAndTimesI) {
    EXPECT_EQ(Scalar::i().pow(4), Scalar(1));
    EXPECT_EQ(Scalar::sqrt2().pow(-2), Scalar(Rational(1, 2)));
    EXPECT_EQ(Scalar(3).times_i(), Scalar(GaussianRational(0, 3)));
    EXPECT_EQ(Scalar(2).pow(0), Scalar(1));
}

TEST(Scalar, RatioPowerOfI) {
    EXPECT_EQ(ratio_power_of_i(Scalar::i(), Scalar(1)), 1);
    EXPECT_EQ(ratio_power_of_i(Scalar(-3), Scalar(3)), 2);
    EXPECT_EQ(ratio_power_of_i(Scalar(1) + Scalar::sqrt2(), Scalar(1)), std::nullopt);
    EXPECT_THROW(ratio_power_of_i(Scalar(1), Scalar(0)), InputError);
    // Exhaustive agreement with a direct check over e in {0..3}.
    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; ++k) {
        Scalar v = random_field_element(rng);
        if (v.is_zero()) {
            continue;
        }
        int e = std::uniform_int_distribution<int>(0, 3)(rng);
        Scalar u = k % 3 == 0 ? random_field_element(rng) : Scalar::i_power(e) * v;
        auto got = ratio_power_of_i(u, v);
        std::optional<int> expect;
        for (int j = 0; j < 4; ++j) {
            if (u == Scalar::i_power(j) * v) {
                expect = j;
            }
        }
        EXPECT_EQ(got, expect);
    }
}

TEST(Scalar, ApproxComplex) {
    auto z = approx_complex(Scalar(1) + Scalar::sqrt2());
    EXPECT_NEAR(static_cast<double>(z.real()), 2.414213562373095, 1e-15);
    auto w = approx_complex(Scalar::i());
    EXPECT_EQ(w.real(), 0);
    EXPECT_EQ(w.imag(), 1);
    // Near-cancellation keeps relative accuracy.
    Scalar close = Scalar(Rational(665857, 470832)) - Scalar::sqrt2();
    long double expected = 1.0L / (470832.0L * (665857.0L + 470832.0L * std::sqrt(2.0L)));
    EXPECT_NEAR(static_cast<double>(approx_complex(close).real() / expected), 1.0, 1e-15);
    EXPECT_THROW(approx_complex(Scalar(1), 10), InputError);
}
