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

#ifndef HOLANT6V_INSTANCES_H
#define HOLANT6V_INSTANCES_H

#include <cstdint>
#include <random>
#include <vector>

#include "holant6v/classify.h"
#include "holant6v/csp.h"
#include "holant6v/grid.h"

namespace holant6v {

/// 0, 1, -1, 2, -2, i, -i, 1/2.
const std::vector<Scalar> &scalar_pool();
/// The nonzero entries of scalar_pool().
const std::vector<Scalar> &nonzero_pool();

Scalar random_scalar(std::mt19937_64 &rng, double zero_probability = 0.2);
SixVertexParams random_six_vertex(std::mt19937_64 &rng, double zero_probability = 0.2);
/// Arbitrary arity-4 table over the pool.
Signature random_signature(std::mt19937_64 &rng, double zero_probability = 0.3);

/// Random 4-regular multigraph on `vertices` vertices (ids 0..n-1): ports
/// paired by a uniform perfect matching, so loops and parallel edges occur.
/// Signatures are left zero.
SignatureGrid random_wiring(std::mt19937_64 &rng, int vertices);

/// Random six-vertex params whose signature lies in the class (for M: a
/// zero in each pair).
SixVertexParams random_params_in_class(std::mt19937_64 &rng, TractableClass cls);

CspInstance random_csp(std::mt19937_64 &rng, int max_vars, int max_clauses);
Signature random_binary(std::mt19937_64 &rng);

/// Orientations of the underlying multigraph with in-degree 2 at every
/// vertex (a loop counts once in and once out, in either direction).
uint64_t count_eulerian_orientations(const SignatureGrid &grid);

}  // namespace holant6v

#endif
