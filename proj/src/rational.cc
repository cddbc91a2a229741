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

#include "holant6v/rational.h"

#include <cmath>
#include <limits>
#include <ostream>

#include "holant6v/errors.h"

namespace holant6v {

namespace {

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();

using u128 = unsigned __int128;

u128 abs128(__int128 v) {
    return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t gcd64(uint64_t a, uint64_t b) {
    while (b != 0) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t uabs(int64_t v) {
    return v < 0 ? static_cast<uint64_t>(-(v + 1)) + 1 : static_cast<uint64_t>(v);
}

bool fits(__int128 v) {
    return v > static_cast<__int128>(kMin) && v <= static_cast<__int128>(std::numeric_limits<int64_t>::max());
}

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    u128 mag = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(mag)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_i64(int64_t v) {
    return mpz_from_i128(v);
}

bool mpz_to_i64(const mpz_class &z, int64_t &out) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) {
        return false;
    }
    long v = z.get_si();
    if (v == kMin) {
        return false;
    }
    out = v;
    return true;
}

}  // namespace

Rational::Rational(int64_t n) {
    if (n == kMin) {
        big_ = std::make_unique<mpq_class>(mpz_from_i64(n));
    } else {
        num_ = n;
    }
}

Rational::Rational(int64_t num, int64_t den) {
    if (den == 0) {
        throw DivisionByZero();
    }
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class &q) {
    set_from_mpq(q);
}

Rational::Rational(const mpz_class &z) {
    set_from_mpq(mpq_class(z));
}

Rational::Rational(const Rational &other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {
}

Rational &Rational::operator=(const Rational &other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::set_from_mpq(const mpq_class &q) {
    int64_t n;
    int64_t d;
    if (mpz_to_i64(q.get_num(), n) && mpz_to_i64(q.get_den(), d)) {
        num_ = n;
        den_ = d;
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(q);
        big_->canonicalize();
    }
}

Rational Rational::from_i128(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    Rational r;
    if (num == 0) {
        return r;
    }
    if (fits(num) && fits(den)) {
        r.num_ = static_cast<int64_t>(num);
        r.den_ = static_cast<int64_t>(den);
        return r;
    }
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    r.big_ = std::make_unique<mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&]() { return InputError("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw bad();
    }
    auto check_digits = [&](std::string_view s, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '+' || s[0] == '-')) {
            i = 1;
        }
        if (i >= s.size()) {
            throw bad();
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw bad();
            }
        }
    };
    size_t slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    check_digits(num_text, true);
    std::string num_str(num_text);
    if (num_str[0] == '+') {
        num_str.erase(0, 1);
    }
    mpz_class num(num_str, 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        std::string_view den_text = text.substr(slash + 1);
        check_digits(den_text, false);
        den = mpz_class(std::string(den_text), 10);
        if (den == 0) {
            throw DivisionByZero();
        }
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) {
        return *big_;
    }
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_);
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_);
}

double Rational::to_double() const {
    if (big_) {
        return big_->get_d();
    }
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) {
        return big_->get_str(10);
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    if (big_) {
        mpq_class q = 1 / *big_;
        return Rational(q);
    }
    return from_i128(den_, num_);
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::operator-() const {
    if (big_) {
        return Rational(mpq_class(-*big_));
    }
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational &lhs, const Rational &rhs) {
    if (!lhs.big_ && !rhs.big_) {
        if (rhs.num_ == 0) {
            return lhs;
        }
        if (lhs.num_ == 0) {
            return rhs;
        }
        if (lhs.den_ == 1 && rhs.den_ == 1) {
            int64_t out;
            if (!__builtin_add_overflow(lhs.num_, rhs.num_, &out) && out != kMin) {
                Rational r;
                r.num_ = out;
                return r;
            }
        }
        __int128 n = static_cast<__int128>(lhs.num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * lhs.den_;
        __int128 d = static_cast<__int128>(lhs.den_) * rhs.den_;
        return Rational::from_i128(n, d);
    }
    return Rational(mpq_class(lhs.to_mpq() + rhs.to_mpq()));
}

Rational operator-(const Rational &lhs, const Rational &rhs) {
    return lhs + (-rhs);
}

Rational operator*(const Rational &lhs, const Rational &rhs) {
    if (!lhs.big_ && !rhs.big_) {
        if (lhs.num_ == 0 || rhs.num_ == 0) {
            return Rational();
        }
        if (lhs.den_ == 1 && rhs.den_ == 1) {
            int64_t out;
            if (!__builtin_mul_overflow(lhs.num_, rhs.num_, &out) && out != kMin) {
                Rational r;
                r.num_ = out;
                return r;
            }
            return Rational::from_i128(static_cast<__int128>(lhs.num_) * rhs.num_, 1);
        }
        uint64_t g1 = gcd64(uabs(lhs.num_), static_cast<uint64_t>(rhs.den_));
        uint64_t g2 = gcd64(uabs(rhs.num_), static_cast<uint64_t>(lhs.den_));
        __int128 n = static_cast<__int128>(lhs.num_ / static_cast<int64_t>(g1)) * (rhs.num_ / static_cast<int64_t>(g2));
        __int128 d = static_cast<__int128>(lhs.den_ / static_cast<int64_t>(g2)) * (rhs.den_ / static_cast<int64_t>(g1));
        return Rational::from_i128(n, d);
    }
    if (lhs.is_zero() || rhs.is_zero()) {
        return Rational();
    }
    return Rational(mpq_class(lhs.to_mpq() * rhs.to_mpq()));
}

Rational operator/(const Rational &lhs, const Rational &rhs) {
    return lhs * rhs.inverse();
}

Rational &Rational::operator+=(const Rational &rhs) {
    *this = *this + rhs;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
    *this = *this - rhs;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
    *this = *this * rhs;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
    *this = *this / rhs;
    return *this;
}

bool operator==(const Rational &lhs, const Rational &rhs) {
    if (!lhs.big_ && !rhs.big_) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    if (lhs.big_ && rhs.big_) {
        return *lhs.big_ == *rhs.big_;
    }
    return false;
}

std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
    if (!lhs.big_ && !rhs.big_) {
        __int128 a = static_cast<__int128>(lhs.num_) * rhs.den_;
        __int128 b = static_cast<__int128>(rhs.num_) * lhs.den_;
        return a <=> b;
    }
    int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c <=> 0;
}

std::ostream &operator<<(std::ostream &out, const Rational &r) {
    return out << r.str();
}

}  // namespace holant6v
