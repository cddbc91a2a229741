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

#ifndef HOLANT6V_IO_H
#define HOLANT6V_IO_H

#include <cstdint>
#include <string>

#include "json.hpp"

#include "holant6v/classify.h"
#include "holant6v/grid.h"
#include "holant6v/holant.h"

namespace holant6v {

/// {"arity": k, "values": [...]} or {"six_vertex": [a, x, b, y, c, z]};
/// scalars are strings in the exact grammar (plain JSON integers accepted).
Signature signature_from_json(const nlohmann::json &j);
nlohmann::json signature_to_json(const Signature &f);

/// {"vertices": [{"id": v, "signature": ...}], "edges": [[[v, s], [v, s]]]}.
SignatureGrid grid_from_json(const nlohmann::json &j);
nlohmann::json grid_to_json(const SignatureGrid &grid);

/// Reads and parses a grid file. Throws InputError with the reason.
SignatureGrid load_grid(const std::string &path);

Scalar scalar_from_json(const nlohmann::json &j);
SixVertexParams six_vertex_from_strings(const std::vector<std::string> &values);
nlohmann::json six_vertex_to_json(const SixVertexParams &p);

nlohmann::json classification_to_json(const Classification &c);

struct Config {
    size_t brute_force_edge_cap = 24;
    int contraction_rank_cap = 26;
    int precision_bits = 64;
    uint64_t seed = 1;

    EvalLimits limits() const {
        return {brute_force_edge_cap, contraction_rank_cap};
    }
};

/// Fields missing from the file keep their defaults. Throws InputError.
Config config_from_json(const nlohmann::json &j);
/// Reads the file named by HOLANT6V_CONFIG if set, else returns defaults.
Config load_config_from_env();

}  // namespace holant6v

#endif
