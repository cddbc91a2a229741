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

#ifndef HOLANT6V_SCALAR_H
#define HOLANT6V_SCALAR_H

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "holant6v/rational.h"

namespace holant6v {

/// re + im*i with rational components; an element of Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational re_part) : re(std::move(re_part)) {  // NOLINT(google-explicit-constructor)
    }
    GaussianRational(int64_t re_part) : re(re_part) {  // NOLINT(google-explicit-constructor)
    }
    GaussianRational(Rational re_part, Rational im_part) : re(std::move(re_part)), im(std::move(im_part)) {
    }

    static GaussianRational i() {
        return {Rational(0), Rational(1)};
    }
    /// i^k for any integer k.
    static GaussianRational i_power(int k);

    bool is_zero() const {
        return re.is_zero() && im.is_zero();
    }
    bool is_real() const {
        return im.is_zero();
    }
    GaussianRational conj() const {
        return {re, -im};
    }
    /// re^2 + im^2.
    Rational norm() const {
        return re * re + im * im;
    }
    GaussianRational inverse() const;
    /// Multiplication by i, without a general product.
    GaussianRational times_i() const {
        return {-im, re};
    }

    GaussianRational operator-() const {
        return {-re, -im};
    }
    GaussianRational &operator+=(const GaussianRational &rhs);
    GaussianRational &operator-=(const GaussianRational &rhs);
    GaussianRational &operator*=(const GaussianRational &rhs);
    GaussianRational &operator/=(const GaussianRational &rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational &rhs) {
        return lhs += rhs;
    }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational &rhs) {
        return lhs -= rhs;
    }
    friend GaussianRational operator*(const GaussianRational &lhs, const GaussianRational &rhs);
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational &rhs) {
        return lhs /= rhs;
    }
    friend bool operator==(const GaussianRational &lhs, const GaussianRational &rhs) = default;

    std::string str() const;
};

/// An element g0 + g1*sqrt(2) of the field Q(i, sqrt 2), with g0, g1 in Q(i).
///
/// Every signature entry, partition-function value, and holographic basis
/// entry lives here. Since sqrt(2) is not in Q(i), the pair (g0, g1) is unique
/// and equality is component-wise.
///
/// Textual form: "<re>[+<im>i][+(<re2>[+<im2>i])r2]" where each component is
/// "p" or "p/q". Negative imaginary parts print as "-<im>i".
class Scalar {
   public:
    Scalar() = default;
    Scalar(int64_t v) : g0_(v) {  // NOLINT(google-explicit-constructor)
    }
    Scalar(Rational v) : g0_(std::move(v)) {  // NOLINT(google-explicit-constructor)
    }
    Scalar(GaussianRational v) : g0_(std::move(v)) {  // NOLINT(google-explicit-constructor)
    }
    Scalar(GaussianRational g0, GaussianRational g1) : g0_(std::move(g0)), g1_(std::move(g1)) {
    }

    static Scalar i() {
        return Scalar(GaussianRational::i());
    }
    static Scalar sqrt2() {
        return Scalar(GaussianRational(), GaussianRational(1));
    }
    static Scalar i_power(int k) {
        return Scalar(GaussianRational::i_power(k));
    }

    /// Exact parse of the textual form. Throws InputError.
    static Scalar parse(std::string_view text);
    /// Canonical textual form; parse(str()) == *this.
    std::string str() const;

    const GaussianRational &g0() const {
        return g0_;
    }
    const GaussianRational &g1() const {
        return g1_;
    }

    bool is_zero() const {
        return g0_.is_zero() && g1_.is_zero();
    }
    bool is_one() const {
        return g0_.re.is_one() && g0_.im.is_zero() && g1_.is_zero();
    }
    /// True when the value lies in Q(i), i.e. has no sqrt(2) component.
    bool is_gaussian() const {
        return g1_.is_zero();
    }
    Scalar times_i() const {
        return Scalar(g0_.times_i(), g1_.times_i());
    }
    /// Throws DivisionByZero on zero.
    Scalar inverse() const;
    /// Integer power; negative exponents invert.
    Scalar pow(long long e) const;

    Scalar operator-() const {
        return Scalar(-g0_, -g1_);
    }
    Scalar &operator+=(const Scalar &rhs);
    Scalar &operator-=(const Scalar &rhs);
    Scalar &operator*=(const Scalar &rhs);
    Scalar &operator/=(const Scalar &rhs);

    friend Scalar operator+(Scalar lhs, const Scalar &rhs) {
        return lhs += rhs;
    }
    friend Scalar operator-(Scalar lhs, const Scalar &rhs) {
        return lhs -= rhs;
    }
    friend Scalar operator*(const Scalar &lhs, const Scalar &rhs);
    friend Scalar operator/(Scalar lhs, const Scalar &rhs) {
        return lhs /= rhs;
    }
    friend bool operator==(const Scalar &lhs, const Scalar &rhs) = default;

   private:
    GaussianRational g0_;
    GaussianRational g1_;
};

std::ostream &operator<<(std::ostream &out, const Scalar &s);
std::ostream &operator<<(std::ostream &out, const GaussianRational &g);

enum class ArithKind { add, sub, mul, div };

/// Field arithmetic dispatch. kind == div with rhs == 0 throws DivisionByZero.
Scalar field_arith(const Scalar &lhs, const Scalar &rhs, ArithKind kind);

/// Returns e in {0,1,2,3} with u == i^e * v, if any. Throws InputError if v == 0.
std::optional<int> ratio_power_of_i(const Scalar &u, const Scalar &v);

/// Floating approximation with relative error at most 2^(1 - precision_bits).
/// Supported precision range is [24, 64]; InputError outside it.
std::complex<long double> approx_complex(const Scalar &s, int precision_bits = 64);

}  // namespace holant6v

#endif
