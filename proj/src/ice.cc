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

#include "holant6v/ice.h"

#include <cmath>

#include "holant6v/errors.h"

namespace holant6v {

long double lieb_constant() {
    return std::pow(4.0L / 3.0L, 1.5L);
}

std::vector<IceRow> ice_report(int n_max, const EvalLimits &limits, int precision_bits) {
    if (n_max < 0) {
        throw InputError("n_max must be nonnegative");
    }
    SixVertexParams ice{Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
    std::vector<IceRow> rows;
    for (int n = 2; n <= n_max; n += 2) {
        EvalResult r = contract_eval(build_torus(n, ice), {}, limits);
        IceRow row;
        row.n = n;
        row.z = r.value;
        row.z_float = approx_complex(r.value, precision_bits).real();
        row.w = std::pow(row.z_float, 1.0L / static_cast<long double>(n * n));
        row.peak_rank = r.peak_rank;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace holant6v
