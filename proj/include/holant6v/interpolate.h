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

#ifndef HOLANT6V_INTERPOLATE_H
#define HOLANT6V_INTERPOLATE_H

#include <optional>
#include <utility>
#include <vector>

#include "holant6v/scalar.h"

namespace holant6v {

/// L = {(j, k) : alpha^j beta^k = 1}.
struct ExponentLattice {
    int rank = 0;
    /// Rank 1: L = Z * generator, first nonzero coordinate positive.
    std::optional<std::pair<long long, long long>> generator;
    /// Rank 2: a basis in Hermite normal form.
    std::vector<std::pair<long long, long long>> basis;

    bool contains(long long j, long long k) const;
};

/// Inputs must be nonzero elements of Q(i); anything with a sqrt(2) part is
/// rejected with InputError.
ExponentLattice compute_lattice(const Scalar &alpha, const Scalar &beta);

struct InterpolationInstance {
    Scalar alpha;
    Scalar beta;
    int m = 0;
    /// N_l = sum over j,k >= 0, j+k <= m of (alpha^j beta^k)^l x_{j,k}, for
    /// l = 1 .. (m+1)(m+2)/2.
    std::vector<Scalar> values;
};

/// Number of (j, k) with j, k >= 0 and j + k <= m.
size_t cone_size(int m);

/// The N_l values for known unknowns x (indexed like cone_points(m)).
std::vector<Scalar> synthesize_values(const Scalar &alpha, const Scalar &beta, int m, const std::vector<Scalar> &x);
/// Cone points in the order used by synthesize_values: by j+k, then j.
std::vector<std::pair<int, int>> cone_points(int m);

/// sum phi^j psi^k x_{j,k}, recovered from the N_l.
Scalar interpolation_solve(const InterpolationInstance &inst, const Scalar &phi, const Scalar &psi);

/// phi^s - (phi + 2)^t at a rational point, for s, t >= 0.
Rational root_polynomial(int s, int t, const Rational &phi);

/// Bisects [lo, hi] while phi^s - (phi + 2)^t changes sign between the
/// endpoints, stopping once the width is at most `width`. Empty when the
/// endpoints do not bracket a sign change.
std::optional<std::pair<Rational, Rational>> bracket_root(int s, int t, Rational lo, Rational hi,
                                                          const Rational &width);

}  // namespace holant6v

#endif
