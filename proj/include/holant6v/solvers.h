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

#ifndef HOLANT6V_SOLVERS_H
#define HOLANT6V_SOLVERS_H

#include <cstdint>
#include <vector>

#include "holant6v/holant.h"

namespace holant6v {

/// Q(y) = c + sum a_k y_k + 2 sum_{j<l} cross[j][l] y_j y_l over Z4, with y
/// in {0,1}^n. cross is symmetric with zero diagonal.
struct QuadraticForm {
    int c = 0;
    std::vector<int> a;
    std::vector<std::vector<uint8_t>> cross;

    explicit QuadraticForm(size_t n = 0) : a(n, 0), cross(n, std::vector<uint8_t>(n, 0)) {
    }
    size_t size() const {
        return a.size();
    }
    /// Q evaluated at y (bit k of y is y_k); only for n < 64.
    int eval(uint64_t y) const;
    /// Replaces y_k by constant ^ XOR_{j in rest} y_j. y_k stays in the form
    /// with no coefficients left.
    void substitute(size_t k, int constant, const std::vector<size_t> &rest);
};

/// sum over y in {0,1}^n of i^Q(y), by eliminating one variable at a time.
Scalar gauss_sum(QuadraticForm q);

/// Throw InputError naming the first vertex outside the required class.
Scalar solve_P(const SignatureGrid &grid);
Scalar solve_A(const SignatureGrid &grid);
Scalar solve_M(const SignatureGrid &grid);

/// Picks P, then A, then M when every vertex qualifies, otherwise brute
/// force. Throws CapExceeded when no polynomial algorithm applies and the
/// grid is over the brute force cap.
EvalResult solve(const SignatureGrid &grid, const EvalLimits &limits = {});

}  // namespace holant6v

#endif
