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

#ifndef HOLANT6V_HOLANT_H
#define HOLANT6V_HOLANT_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holant6v/grid.h"

namespace holant6v {

/// Binary constraint carried by every edge.
enum class EdgeKind {
    /// [0, 1; 1, 0]: the two ends take opposite values.
    disequality,
    /// [1, 0; 0, 1]: the two ends take equal values.
    equality,
};

struct EvalLimits {
    size_t brute_force_edge_cap = 24;
    int contraction_rank_cap = 26;
};

enum class EvalMethod { brute_force, contraction, solver_p, solver_a, solver_m };

std::string method_name(EvalMethod m);

struct EvalResult {
    Scalar value;
    EvalMethod method = EvalMethod::brute_force;
    /// Size of the enumerated assignment space (brute force only).
    uint64_t assignments = 0;
    /// Largest intermediate tensor rank (contraction only).
    int peak_rank = 0;
};

/// Sum over all edge assignments. Throws CapExceeded when the grid has more
/// than limits.brute_force_edge_cap edges.
EvalResult brute_force_eval(const SignatureGrid &grid, const EvalLimits &limits = {},
                            EdgeKind kind = EdgeKind::disequality);

/// Holant of the grid with equality edges, using `transformed` in place of
/// each vertex signature.
Scalar eval_bipartite_equality(const SignatureGrid &grid, const std::map<int, Signature> &transformed,
                               const EvalLimits &limits = {});

/// Pairwise contraction order. Tensors are numbered by vertex order (0 ..
/// V-1, ascending vertex id) and each merge appends a new tensor V, V+1, ...
struct ContractionPlan {
    std::vector<std::pair<int, int>> steps;
    int peak_rank = 0;
};

/// Greedy order: repeatedly merge the pair of tensors sharing an edge whose
/// result has the fewest open edges; ties go to the pair with the smallest
/// tensor numbers. Tensors with nothing in common are merged last.
ContractionPlan greedy_plan(const SignatureGrid &grid);

/// Contracts along `plan` (greedy when empty). Throws CapExceeded, naming
/// the step, when an intermediate would exceed limits.contraction_rank_cap.
EvalResult contract_eval(const SignatureGrid &grid, const ContractionPlan &plan = {}, const EvalLimits &limits = {},
                         EdgeKind kind = EdgeKind::disequality);

}  // namespace holant6v

#endif
