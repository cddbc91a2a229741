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

#ifndef HOLANT6V_RATIONAL_H
#define HOLANT6V_RATIONAL_H

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace holant6v {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an int64_t are stored inline
/// and manipulated with overflow-checked machine arithmetic; anything larger
/// spills into a heap-allocated GMP rational. The representation is canonical:
/// a value is stored as a GMP rational only if it does not fit inline, so
/// equality never needs to cross representations.
class Rational {
   public:
    Rational() = default;
    Rational(int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(int64_t num, int64_t den);
    explicit Rational(const mpq_class &q);
    explicit Rational(const mpz_class &z);

    Rational(const Rational &other);
    Rational(Rational &&other) noexcept = default;
    Rational &operator=(const Rational &other);
    Rational &operator=(Rational &&other) noexcept = default;
    ~Rational() = default;

    /// Parses "p" or "p/q" with an optional leading sign. Throws InputError.
    static Rational parse(std::string_view text);

    bool is_zero() const {
        return big_ == nullptr && num_ == 0;
    }
    bool is_one() const {
        return big_ == nullptr && num_ == 1 && den_ == 1;
    }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    double to_double() const;
    std::string str() const;

    /// Multiplicative inverse. Throws DivisionByZero on zero.
    Rational inverse() const;
    Rational abs() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(const Rational &lhs, const Rational &rhs);
    friend Rational operator-(const Rational &lhs, const Rational &rhs);
    friend Rational operator*(const Rational &lhs, const Rational &rhs);
    friend Rational operator/(const Rational &lhs, const Rational &rhs);
    friend bool operator==(const Rational &lhs, const Rational &rhs);
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs);

   private:
    static Rational from_i128(__int128 num, __int128 den);
    void set_from_mpq(const mpq_class &q);

    int64_t num_ = 0;
    int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream &operator<<(std::ostream &out, const Rational &r);

}  // namespace holant6v

#endif
