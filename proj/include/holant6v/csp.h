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

#ifndef HOLANT6V_CSP_H
#define HOLANT6V_CSP_H

#include <utility>
#include <vector>

#include "holant6v/grid.h"

namespace holant6v {

/// Variables 0..num_vars-1; each clause applies g to an ordered pair of
/// distinct variables.
struct CspInstance {
    int num_vars = 0;
    std::vector<std::pair<int, int>> clauses;
};

/// sum over assignments of prod g(assignment[u], assignment[w]).
Scalar csp_partition_function(const Signature &g, const CspInstance &inst);

/// The vertex signature g(x1, x4) [x1 != x2] [x3 != x4], as six-vertex
/// params (0, 0, g00, g11, g01, g10).
SixVertexParams csp_vertex_params(const Signature &g);

struct CspReduction {
    SignatureGrid grid;
    /// 2 per variable that appears in no clause.
    Scalar multiplier = Scalar(1);
};

/// One vertex per clause (vertex id = clause index). At a clause (u, w), u
/// enters on x1 and leaves on x2, w enters on x4 and leaves on x3; each
/// variable's occurrences form a cycle in clause order.
CspReduction csp_reduction(const Signature &g, const CspInstance &inst);

}  // namespace holant6v

#endif
