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

#include "holant6v/scalar.h"

#include <cmath>
#include <ostream>

#include "holant6v/errors.h"

namespace holant6v {

GaussianRational GaussianRational::i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {Rational(1), Rational(0)};
        case 1:
            return {Rational(0), Rational(1)};
        case 2:
            return {Rational(-1), Rational(0)};
        default:
            return {Rational(0), Rational(-1)};
    }
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    if (im.is_zero()) {
        return {re.inverse(), Rational()};
    }
    Rational n = norm().inverse();
    return {re * n, -(im * n)};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

GaussianRational operator*(const GaussianRational &lhs, const GaussianRational &rhs) {
    if (lhs.im.is_zero()) {
        return {lhs.re * rhs.re, lhs.re * rhs.im};
    }
    if (rhs.im.is_zero()) {
        return {lhs.re * rhs.re, lhs.im * rhs.re};
    }
    return {lhs.re * rhs.re - lhs.im * rhs.im, lhs.re * rhs.im + lhs.im * rhs.re};
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &rhs) {
    *this = *this * rhs;
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &rhs) {
    *this = *this * rhs.inverse();
    return *this;
}

std::string GaussianRational::str() const {
    std::string out = re.str();
    if (!im.is_zero()) {
        if (im.sign() < 0) {
            out += "-" + (-im).str() + "i";
        } else {
            out += "+" + im.str() + "i";
        }
    }
    return out;
}

Scalar &Scalar::operator+=(const Scalar &rhs) {
    g0_ += rhs.g0_;
    if (!rhs.g1_.is_zero()) {
        g1_ += rhs.g1_;
    }
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) {
    g0_ -= rhs.g0_;
    if (!rhs.g1_.is_zero()) {
        g1_ -= rhs.g1_;
    }
    return *this;
}

Scalar operator*(const Scalar &lhs, const Scalar &rhs) {
    bool l_plain = lhs.g1_.is_zero();
    bool r_plain = rhs.g1_.is_zero();
    if (l_plain && r_plain) {
        return Scalar(lhs.g0_ * rhs.g0_);
    }
    if (l_plain) {
        return Scalar(lhs.g0_ * rhs.g0_, lhs.g0_ * rhs.g1_);
    }
    if (r_plain) {
        return Scalar(lhs.g0_ * rhs.g0_, lhs.g1_ * rhs.g0_);
    }
    GaussianRational bd = lhs.g1_ * rhs.g1_;
    return Scalar(lhs.g0_ * rhs.g0_ + bd + bd, lhs.g0_ * rhs.g1_ + lhs.g1_ * rhs.g0_);
}

Scalar &Scalar::operator*=(const Scalar &rhs) {
    *this = *this * rhs;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    if (g1_.is_zero()) {
        return Scalar(g0_.inverse());
    }
    // (A + B r2)^-1 = (A - B r2) / (A^2 - 2 B^2); the denominator is nonzero
    // because r2 is irrational over Q(i).
    GaussianRational bb = g1_ * g1_;
    GaussianRational d = (g0_ * g0_ - bb - bb).inverse();
    return Scalar(g0_ * d, -(g1_ * d));
}

Scalar &Scalar::operator/=(const Scalar &rhs) {
    *this = *this * rhs.inverse();
    return *this;
}

Scalar Scalar::pow(long long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    Scalar acc(1);
    while (n != 0) {
        if (n & 1) {
            acc *= base;
        }
        n >>= 1;
        if (n != 0) {
            base *= base;
        }
    }
    return acc;
}

namespace {

GaussianRational parse_gaussian(std::string_view text, std::string_view whole) {
    auto bad = [&]() { return InputError("malformed scalar '" + std::string(whole) + "'"); };
    if (text.empty()) {
        throw bad();
    }
    if (text.back() != 'i') {
        return GaussianRational(Rational::parse(text));
    }
    std::string_view body = text.substr(0, text.size() - 1);
    // The imaginary part starts at the last sign that is not leading.
    size_t split = std::string_view::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split != std::string_view::npos && split >= 2 && (body[split - 1] == '+' || body[split - 1] == '-')) {
        --split;
    }
    std::string_view re_text;
    std::string_view im_text = body;
    if (split != std::string_view::npos) {
        re_text = body.substr(0, split);
        im_text = body.substr(split);
        if (im_text.size() >= 2 && im_text[0] == '+' && (im_text[1] == '-' || im_text[1] == '+')) {
            im_text.remove_prefix(1);
        }
    }
    Rational im;
    if (im_text.empty() || im_text == "+") {
        im = Rational(1);
    } else if (im_text == "-") {
        im = Rational(-1);
    } else {
        im = Rational::parse(im_text);
    }
    Rational re;
    if (!re_text.empty()) {
        if (re_text.back() == '+') {
            throw bad();
        }
        re = Rational::parse(re_text);
    }
    return {std::move(re), std::move(im)};
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    auto bad = [&]() { return InputError("malformed scalar '" + std::string(text) + "'"); };
    std::string compact;
    for (char c : text) {
        if (c != ' ' && c != '\t') {
            compact.push_back(c);
        }
    }
    std::string_view s(compact);
    if (s.empty()) {
        throw bad();
    }
    constexpr std::string_view kSuffix = ")r2";
    if (s.size() >= kSuffix.size() && s.substr(s.size() - kSuffix.size()) == kSuffix) {
        size_t open = s.rfind('(');
        if (open == std::string_view::npos) {
            throw bad();
        }
        std::string_view inner = s.substr(open + 1, s.size() - kSuffix.size() - open - 1);
        std::string_view head = s.substr(0, open);
        bool negate = false;
        if (!head.empty() && (head.back() == '+' || head.back() == '-')) {
            negate = head.back() == '-';
            head.remove_suffix(1);
        } else if (!head.empty()) {
            throw bad();
        }
        GaussianRational g1 = parse_gaussian(inner, text);
        if (negate) {
            g1 = -g1;
        }
        GaussianRational g0 = head.empty() ? GaussianRational() : parse_gaussian(head, text);
        return Scalar(std::move(g0), std::move(g1));
    }
    if (s.find('(') != std::string_view::npos || s.find(')') != std::string_view::npos) {
        throw bad();
    }
    return Scalar(parse_gaussian(s, text));
}

std::string Scalar::str() const {
    std::string out = g0_.str();
    if (!g1_.is_zero()) {
        out += "+(" + g1_.str() + ")r2";
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const Scalar &s) {
    return out << s.str();
}

std::ostream &operator<<(std::ostream &out, const GaussianRational &g) {
    return out << g.str();
}

Scalar field_arith(const Scalar &lhs, const Scalar &rhs, ArithKind kind) {
    switch (kind) {
        case ArithKind::add:
            return lhs + rhs;
        case ArithKind::sub:
            return lhs - rhs;
        case ArithKind::mul:
            return lhs * rhs;
        case ArithKind::div:
            return lhs / rhs;
    }
    throw InputError("unknown arithmetic kind");
}

std::optional<int> ratio_power_of_i(const Scalar &u, const Scalar &v) {
    if (v.is_zero()) {
        throw InputError("ratio_power_of_i: divisor is zero");
    }
    Scalar rotated = v;
    for (int e = 0; e < 4; ++e) {
        if (rotated == u) {
            return e;
        }
        rotated = rotated.times_i();
    }
    return std::nullopt;
}

namespace {

long double mpf_to_long_double(const mpf_class &x) {
    if (x == 0) {
        return 0.0L;
    }
    long e1;
    double hi = mpf_get_d_2exp(&e1, x.get_mpf_t());
    mpf_class rest(0, x.get_prec());
    mpf_class hi_mpf(hi, x.get_prec());
    mpf_mul_2exp(hi_mpf.get_mpf_t(), hi_mpf.get_mpf_t(), static_cast<mp_bitcnt_t>(e1 > 0 ? e1 : 0));
    if (e1 < 0) {
        mpf_div_2exp(hi_mpf.get_mpf_t(), hi_mpf.get_mpf_t(), static_cast<mp_bitcnt_t>(-e1));
    }
    rest = x - hi_mpf;
    long double result = std::ldexp(static_cast<long double>(hi), static_cast<int>(e1));
    if (rest != 0) {
        long e2;
        double lo = mpf_get_d_2exp(&e2, rest.get_mpf_t());
        result += std::ldexp(static_cast<long double>(lo), static_cast<int>(e2));
    }
    return result;
}

mpf_class mpf_of(const Rational &r, mp_bitcnt_t prec) {
    mpf_class num(r.numerator(), prec);
    mpf_class den(r.denominator(), prec);
    return mpf_class(num / den, prec);
}

// r1 + r2*sqrt(2), evaluated without catastrophic cancellation.
long double approx_component(const Rational &r1, const Rational &r2, mp_bitcnt_t prec) {
    mpf_class root2 = sqrt(mpf_class(2, prec));
    if (r2.is_zero()) {
        return mpf_to_long_double(mpf_of(r1, prec));
    }
    if (r1.is_zero() || r1.sign() == r2.sign()) {
        mpf_class v = mpf_of(r1, prec) + mpf_of(r2, prec) * root2;
        return mpf_to_long_double(v);
    }
    // Opposite signs: rewrite as (r1^2 - 2 r2^2) / (r1 - r2 sqrt 2), whose
    // denominator adds two same-signed terms.
    Rational numerator = r1 * r1 - Rational(2) * r2 * r2;
    mpf_class den = mpf_of(r1, prec) - mpf_of(r2, prec) * root2;
    mpf_class v = mpf_of(numerator, prec) / den;
    return mpf_to_long_double(v);
}

}  // namespace

std::complex<long double> approx_complex(const Scalar &s, int precision_bits) {
    if (precision_bits < 24 || precision_bits > 64) {
        throw InputError("precision_bits must lie in [24, 64]");
    }
    auto prec = static_cast<mp_bitcnt_t>(precision_bits + 64);
    return {approx_component(s.g0().re, s.g1().re, prec), approx_component(s.g0().im, s.g1().im, prec)};
}

}  // namespace holant6v
