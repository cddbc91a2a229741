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

#ifndef HOLANT6V_ICE_H
#define HOLANT6V_ICE_H

#include <vector>

#include "holant6v/holant.h"

namespace holant6v {

/// (4/3)^(3/2), the limiting partition function per vertex of square ice.
long double lieb_constant();

struct IceRow {
    int n = 0;
    Scalar z;
    long double z_float = 0;
    /// Z^(1/n^2).
    long double w = 0;
    int peak_rank = 0;
};

/// Ice point on the n x n torus for even n = 2 .. n_max, by contraction.
std::vector<IceRow> ice_report(int n_max, const EvalLimits &limits = {}, int precision_bits = 64);

}  // namespace holant6v

#endif
