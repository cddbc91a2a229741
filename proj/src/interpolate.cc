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

#include "holant6v/interpolate.h"

#include <map>
#include <numeric>

#include "holant6v/errors.h"
#include "holant6v/factor.h"
#include "holant6v/matrix.h"

namespace holant6v {

namespace {

long long mod4(long long v) {
    return ((v % 4) + 4) % 4;
}

std::pair<long long, long long> sign_normalized(long long s, long long t) {
    if (s < 0 || (s == 0 && t < 0)) {
        return {-s, -t};
    }
    return {s, t};
}

}  // namespace

bool ExponentLattice::contains(long long j, long long k) const {
    switch (rank) {
        case 0:
            return j == 0 && k == 0;
        case 1: {
            auto [s, t] = *generator;
            // (j, k) = n (s, t) for some integer n.
            if (j * t != k * s) {
                return false;
            }
            long long n = s != 0 ? j / s : k / t;
            return n * s == j && n * t == k;
        }
        default: {
            // Lower triangular basis (d1, k1), (0, d2).
            auto [d1, k1] = basis[0];
            long long d2 = basis[1].second;
            if (j % d1 != 0) {
                return false;
            }
            return (k - (j / d1) * k1) % d2 == 0;
        }
    }
}

ExponentLattice compute_lattice(const Scalar &alpha, const Scalar &beta) {
    if (!alpha.is_gaussian() || !beta.is_gaussian()) {
        throw InputError("lattice undetermined over this field: inputs must lie in Q(i)");
    }
    if (alpha.is_zero() || beta.is_zero()) {
        throw InputError("lattice needs nonzero alpha and beta");
    }
    GaussianFactorization fa = factor_gaussian(alpha.g0());
    GaussianFactorization fb = factor_gaussian(beta.g0());
    std::map<std::pair<mpz_class, mpz_class>, std::pair<long long, long long>> rows;
    for (const auto &[p, e] : fa.factors) {
        rows[{p.re, p.im}].first = e;
    }
    for (const auto &[p, e] : fb.factors) {
        rows[{p.re, p.im}].second = e;
    }
    ExponentLattice out;
    std::optional<std::pair<long long, long long>> first;
    bool independent = false;
    for (const auto &[_, row] : rows) {
        if (!first) {
            first = row;
        } else if (first->first * row.second != first->second * row.first) {
            independent = true;
        }
    }
    if (independent) {
        out.rank = 0;
        return out;
    }
    long long ua = fa.unit;
    long long ub = fb.unit;
    if (first) {
        auto [p, q] = *first;
        long long g = std::gcd(p, q);
        long long s = q / g;
        long long t = -p / g;
        long long r = mod4(s * ua + t * ub);
        long long n = 4 / std::gcd(r, 4LL);
        out.rank = 1;
        out.generator = sign_normalized(n * s, n * t);
        return out;
    }
    // Both are units: only the i-power condition remains.
    out.rank = 2;
    long long d2 = 4 / std::gcd(mod4(ub), 4LL);
    for (long long d1 = 1; d1 <= 4; ++d1) {
        for (long long k1 = 0; k1 < d2; ++k1) {
            if (mod4(d1 * ua + k1 * ub) == 0) {
                out.basis = {{d1, k1}, {0, d2}};
                return out;
            }
        }
    }
    throw std::logic_error("unit lattice has no basis");
}

size_t cone_size(int m) {
    return static_cast<size_t>(m + 1) * static_cast<size_t>(m + 2) / 2;
}

std::vector<std::pair<int, int>> cone_points(int m) {
    std::vector<std::pair<int, int>> pts;
    for (int total = 0; total <= m; ++total) {
        for (int j = total; j >= 0; --j) {
            pts.emplace_back(j, total - j);
        }
    }
    return pts;
}

std::vector<Scalar> synthesize_values(const Scalar &alpha, const Scalar &beta, int m, const std::vector<Scalar> &x) {
    auto pts = cone_points(m);
    if (x.size() != pts.size()) {
        throw InputError("expected " + std::to_string(pts.size()) + " unknowns");
    }
    std::vector<Scalar> node;
    for (auto [j, k] : pts) {
        node.push_back(alpha.pow(j) * beta.pow(k));
    }
    std::vector<Scalar> values;
    for (size_t l = 1; l <= pts.size(); ++l) {
        Scalar sum(0);
        for (size_t p = 0; p < pts.size(); ++p) {
            sum += node[p].pow(static_cast<long long>(l)) * x[p];
        }
        values.push_back(sum);
    }
    return values;
}

Scalar interpolation_solve(const InterpolationInstance &inst, const Scalar &phi, const Scalar &psi) {
    if (inst.m < 0) {
        throw InputError("m must be nonnegative");
    }
    auto pts = cone_points(inst.m);
    if (inst.values.size() != pts.size()) {
        throw InputError("expected " + std::to_string(pts.size()) + " values N_1..N_" + std::to_string(pts.size()) +
                         ", got " + std::to_string(inst.values.size()));
    }
    ExponentLattice lattice = compute_lattice(inst.alpha, inst.beta);
    if (lattice.rank == 2) {
        throw InputError("alpha and beta are both roots of unity; the lattice has rank 2");
    }
    if (lattice.rank == 1) {
        auto [s, t] = *lattice.generator;
        if (!(phi.pow(s) * psi.pow(t)).is_one()) {
            throw InputError("phi^s psi^t != 1 for lattice generator (" + std::to_string(s) + ", " +
                             std::to_string(t) + ")");
        }
    }
    // One unknown per coset of L met by the cone.
    std::vector<size_t> rep;
    std::vector<size_t> coset_of(pts.size());
    for (size_t p = 0; p < pts.size(); ++p) {
        size_t found = rep.size();
        for (size_t c = 0; c < rep.size(); ++c) {
            auto [j0, k0] = pts[rep[c]];
            if (lattice.contains(pts[p].first - j0, pts[p].second - k0)) {
                found = c;
                break;
            }
        }
        if (found == rep.size()) {
            rep.push_back(p);
        }
        coset_of[p] = found;
    }
    size_t r = rep.size();
    Matrix vandermonde(r, r);
    std::vector<Scalar> rhs(inst.values.begin(), inst.values.begin() + static_cast<long>(r));
    for (size_t c = 0; c < r; ++c) {
        auto [j, k] = pts[rep[c]];
        Scalar node = inst.alpha.pow(j) * inst.beta.pow(k);
        Scalar power = node;
        for (size_t l = 0; l < r; ++l) {
            vandermonde(l, c) = power;
            power *= node;
        }
    }
    auto sums = vandermonde.solve(rhs);
    if (!sums) {
        throw std::logic_error("reduced Vandermonde system is singular");
    }
    Scalar total(0);
    for (size_t c = 0; c < r; ++c) {
        auto [j, k] = pts[rep[c]];
        total += phi.pow(j) * psi.pow(k) * (*sums)[c];
    }
    return total;
}

Rational root_polynomial(int s, int t, const Rational &phi) {
    if (s < 0 || t < 0) {
        throw InputError("exponents must be non-negative");
    }
    Rational lhs(1);
    for (int k = 0; k < s; ++k) {
        lhs *= phi;
    }
    Rational rhs(1);
    Rational shifted = phi + Rational(2);
    for (int k = 0; k < t; ++k) {
        rhs *= shifted;
    }
    return lhs - rhs;
}

std::optional<std::pair<Rational, Rational>> bracket_root(int s, int t, Rational lo, Rational hi,
                                                          const Rational &width) {
    if (hi < lo) {
        std::swap(lo, hi);
    }
    if (width.sign() <= 0) {
        throw InputError("bracket width must be positive");
    }
    int sign_lo = root_polynomial(s, t, lo).sign();
    int sign_hi = root_polynomial(s, t, hi).sign();
    if (sign_lo == 0) {
        return std::make_pair(lo, lo);
    }
    if (sign_hi == 0) {
        return std::make_pair(hi, hi);
    }
    if (sign_lo == sign_hi) {
        return std::nullopt;
    }
    while (width < hi - lo) {
        Rational mid = (lo + hi) / Rational(2);
        int sign_mid = root_polynomial(s, t, mid).sign();
        if (sign_mid == 0) {
            return std::make_pair(mid, mid);
        }
        if (sign_mid == sign_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::make_pair(lo, hi);
}

}  // namespace holant6v
