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

#include "holant6v/factor.h"

#include <algorithm>

#include "holant6v/errors.h"

namespace holant6v {

namespace {

GaussianInteger mul(const GaussianInteger &a, const GaussianInteger &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Rounded quotient a / b in Z[i].
GaussianInteger round_div(const GaussianInteger &a, const GaussianInteger &b) {
    mpz_class n = b.norm();
    mpz_class x = a.re * b.re + a.im * b.im;
    mpz_class y = a.im * b.re - a.re * b.im;
    auto round = [&](const mpz_class &v) {
        mpz_class t = 2 * v + n;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * n).get_mpz_t());
        return q;
    };
    return {round(x), round(y)};
}

// a / b if b divides a exactly.
bool exact_div(const GaussianInteger &a, const GaussianInteger &b, GaussianInteger &out) {
    mpz_class n = b.norm();
    mpz_class x = a.re * b.re + a.im * b.im;
    mpz_class y = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(y.get_mpz_t(), n.get_mpz_t())) {
        return false;
    }
    out.re = x / n;
    out.im = y / n;
    return true;
}

GaussianInteger gaussian_gcd(GaussianInteger a, GaussianInteger b) {
    while (b.re != 0 || b.im != 0) {
        GaussianInteger q = round_div(a, b);
        GaussianInteger qb = mul(q, b);
        GaussianInteger r{a.re - qb.re, a.im - qb.im};
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

mpz_class pollard_brent(const mpz_class &n) {
    if (mpz_even_p(n.get_mpz_t())) {
        return 2;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2;
        mpz_class x;
        mpz_class q = 1;
        mpz_class g = 1;
        mpz_class ys;
        unsigned long r = 1;
        constexpr unsigned long m = 64;
        auto f = [&](const mpz_class &v) {
            mpz_class t = v * v + c;
            mpz_class out;
            mpz_mod(out.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        while (g == 1) {
            x = y;
            for (unsigned long k = 0; k < r; ++k) {
                y = f(y);
            }
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long j = 0; j < std::min(m, r - k); ++j) {
                    y = f(y);
                    mpz_class d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class d = abs(mpz_class(x - ys));
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(const mpz_class &n, std::map<mpz_class, int> &out) {
    if (n == 1) {
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out[n] += 1;
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(mpz_class(n / d), out);
}

// Canonical Gaussian prime above a rational prime p == 1 (mod 4).
GaussianInteger prime_above(const mpz_class &p) {
    mpz_class e = (p - 1) / 4;
    mpz_class half = (p - 1) / 2;
    for (unsigned long c = 2;; ++c) {
        mpz_class base(c);
        mpz_class legendre;
        mpz_powm(legendre.get_mpz_t(), base.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
        if (legendre != p - 1) {
            continue;
        }
        mpz_class t;
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        GaussianInteger g = gaussian_gcd({p, 0}, {t, 1});
        return g.canonical_associate();
    }
}

}  // namespace

GaussianInteger GaussianInteger::canonical_associate() const {
    GaussianInteger z = *this;
    for (int k = 0; k < 4; ++k) {
        if (z.re > 0 && z.im >= 0) {
            return z;
        }
        z = {-z.im, z.re};
    }
    throw InputError("canonical_associate of zero");
}

std::string GaussianInteger::str() const {
    return GaussianRational(Rational(re), Rational(im)).str();
}

bool operator<(const GaussianInteger &a, const GaussianInteger &b) {
    mpz_class na = a.norm();
    mpz_class nb = b.norm();
    if (na != nb) {
        return na < nb;
    }
    if (a.re != b.re) {
        return a.re < b.re;
    }
    return a.im < b.im;
}

GaussianRational GaussianFactorization::product() const {
    GaussianRational acc = GaussianRational::i_power(unit);
    for (const auto &[prime, exponent] : factors) {
        GaussianRational p = prime.to_rational();
        GaussianRational base = exponent < 0 ? p.inverse() : p;
        for (int k = 0; k < std::abs(exponent); ++k) {
            acc *= base;
        }
    }
    return acc;
}

std::map<mpz_class, int> factor_integer(mpz_class n) {
    if (n == 0) {
        throw InputError("factor_integer: zero");
    }
    n = abs(n);
    std::map<mpz_class, int> out;
    for (unsigned long p = 2; p < 1000 && n != 1; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            out[mpz_class(p)] += 1;
            n /= p;
        }
    }
    factor_into(n, out);
    return out;
}

GaussianFactorization factor_gaussian(const GaussianRational &q) {
    if (q.is_zero()) {
        throw InputError("factor_gaussian: zero has no factorization");
    }
    // q = num / den with num in Z[i] and den a positive integer.
    mpz_class den;
    mpz_class re_den = q.re.denominator();
    mpz_class im_den = q.im.denominator();
    mpz_lcm(den.get_mpz_t(), re_den.get_mpz_t(), im_den.get_mpz_t());
    GaussianInteger num{q.re.numerator() * (den / re_den), q.im.numerator() * (den / im_den)};

    std::map<GaussianInteger, int> exps;
    auto strip = [&](GaussianInteger &z, const GaussianInteger &prime, int sign) {
        GaussianInteger quotient;
        while (exact_div(z, prime, quotient)) {
            z = quotient;
            exps[prime] += sign;
        }
    };
    auto primes_over = [&](const mpz_class &p) {
        std::vector<GaussianInteger> out;
        if (p == 2) {
            out.push_back({1, 1});
        } else if (mpz_class(p % 4) == 3) {
            out.push_back({p, 0});
        } else {
            GaussianInteger pi = prime_above(p);
            out.push_back(pi);
            out.push_back(GaussianInteger{pi.re, -pi.im}.canonical_associate());
        }
        return out;
    };

    for (const auto &[p, _] : factor_integer(num.norm())) {
        for (const GaussianInteger &prime : primes_over(p)) {
            strip(num, prime, +1);
        }
    }
    GaussianInteger den_z{den, 0};
    for (const auto &[p, _] : factor_integer(den)) {
        for (const GaussianInteger &prime : primes_over(p)) {
            strip(den_z, prime, -1);
        }
    }

    GaussianFactorization result;
    for (const auto &[prime, e] : exps) {
        if (e != 0) {
            result.factors.emplace_back(prime, e);
        }
    }
    GaussianRational rest = q / result.product();
    for (int k = 0; k < 4; ++k) {
        if (rest == GaussianRational::i_power(k)) {
            result.unit = k;
            return result;
        }
    }
    throw std::logic_error("factor_gaussian: residual is not a unit");
}

}  // namespace holant6v
