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

#ifndef HOLANT6V_FACTOR_H
#define HOLANT6V_FACTOR_H

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holant6v/scalar.h"

namespace holant6v {

/// Element of Z[i].
struct GaussianInteger {
    mpz_class re;
    mpz_class im;

    mpz_class norm() const {
        return re * re + im * im;
    }
    GaussianRational to_rational() const {
        return {Rational(re), Rational(im)};
    }
    /// Associate with re > 0 and im >= 0 (nonzero input).
    GaussianInteger canonical_associate() const;
    std::string str() const;

    friend bool operator==(const GaussianInteger &a, const GaussianInteger &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator<(const GaussianInteger &a, const GaussianInteger &b);
};

/// q == i^unit * prod(prime^exponent). Primes are canonical associates
/// (first quadrant, re > 0, im >= 0), listed by increasing norm then re;
/// exponents are nonzero and may be negative for denominator primes.
struct GaussianFactorization {
    int unit = 0;
    std::vector<std::pair<GaussianInteger, int>> factors;

    GaussianRational product() const;
};

/// Factors a nonzero rational integer into primes with multiplicity.
std::map<mpz_class, int> factor_integer(mpz_class n);

/// Factors a nonzero element of Q(i) over Z[i]. Throws InputError on zero.
GaussianFactorization factor_gaussian(const GaussianRational &q);

}  // namespace holant6v

#endif
