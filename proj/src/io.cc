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

#include "holant6v/io.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "holant6v/errors.h"

namespace holant6v {

using nlohmann::json;

Scalar scalar_from_json(const json &j) {
    if (j.is_string()) {
        return Scalar::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Scalar(j.get<int64_t>());
    }
    throw InputError("expected a scalar string, got " + j.dump());
}

Signature signature_from_json(const json &j) {
    if (!j.is_object()) {
        throw InputError("signature must be a JSON object");
    }
    if (j.contains("six_vertex")) {
        const json &v = j.at("six_vertex");
        if (!v.is_array() || v.size() != 6) {
            throw InputError("six_vertex needs exactly 6 values");
        }
        SixVertexParams p;
        for (int k = 0; k < 6; ++k) {
            p[k] = scalar_from_json(v[static_cast<size_t>(k)]);
        }
        return from_six_vertex(p);
    }
    if (!j.contains("arity") || !j.contains("values") || !j.at("arity").is_number_integer() ||
        !j.at("values").is_array()) {
        throw InputError("signature needs \"arity\" and \"values\" or \"six_vertex\"");
    }
    std::vector<Scalar> values;
    for (const json &v : j.at("values")) {
        values.push_back(scalar_from_json(v));
    }
    return Signature(j.at("arity").get<int>(), std::move(values));
}

json signature_to_json(const Signature &f) {
    if (auto p = to_six_vertex(f); p && f.arity() == 4) {
        return {{"six_vertex", six_vertex_to_json(*p)}};
    }
    json values = json::array();
    for (const Scalar &s : f.values()) {
        values.push_back(s.str());
    }
    return {{"arity", f.arity()}, {"values", values}};
}

SignatureGrid grid_from_json(const json &j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw InputError("grid needs \"vertices\" and \"edges\"");
    }
    SignatureGrid grid;
    for (const json &v : j.at("vertices")) {
        if (!v.is_object() || !v.contains("id") || !v.at("id").is_number_integer() || !v.contains("signature")) {
            throw InputError("vertex entry needs an integer \"id\" and a \"signature\": " + v.dump());
        }
        int id = v.at("id").get<int>();
        if (grid.vertices.contains(id)) {
            throw InputError("duplicate vertex id " + std::to_string(id));
        }
        grid.add_vertex(id, signature_from_json(v.at("signature")));
    }
    auto port = [](const json &p) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            throw InputError("port must be [vertex, slot], got " + p.dump());
        }
        return Port{p[0].get<int>(), p[1].get<int>()};
    };
    for (const json &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw InputError("edge must be a pair of ports, got " + e.dump());
        }
        grid.add_edge(port(e[0]), port(e[1]));
    }
    return grid;
}

json grid_to_json(const SignatureGrid &grid) {
    json vertices = json::array();
    for (const auto &[id, f] : grid.vertices) {
        vertices.push_back({{"id", id}, {"signature", signature_to_json(f)}});
    }
    json edges = json::array();
    for (const Edge &e : grid.edges) {
        edges.push_back({{e.first.vertex, e.first.slot}, {e.second.vertex, e.second.slot}});
    }
    return {{"vertices", vertices}, {"edges", edges}};
}

SignatureGrid load_grid(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError(path + ": " + e.what());
    }
    return grid_from_json(j);
}

SixVertexParams six_vertex_from_strings(const std::vector<std::string> &values) {
    if (values.size() != 6) {
        throw InputError("expected six values a x b y c z");
    }
    SixVertexParams p;
    for (int k = 0; k < 6; ++k) {
        p[k] = Scalar::parse(values[static_cast<size_t>(k)]);
    }
    return p;
}

json six_vertex_to_json(const SixVertexParams &p) {
    json out = json::array();
    for (int k = 0; k < 6; ++k) {
        out.push_back(p[k].str());
    }
    return out;
}

json classification_to_json(const Classification &c) {
    const ClassificationWitness &w = c.witness;
    json witness = {
        {"zero_pattern",
         {pair_status_name(w.pattern[0]), pair_status_name(w.pattern[1]), pair_status_name(w.pattern[2])}},
        {"zero_count", w.zeros},
        {"in_P", w.member_P},
        {"in_A", w.member_A},
        {"one_zero_each_pair", w.member_M},
        {"reason", w.reason},
    };
    json derived = json::object();
    for (const auto &[name, value] : w.derived) {
        derived[name] = value.str();
    }
    witness["derived"] = derived;
    json out = {{"verdict", c.tractable ? "Tractable" : "Hard"}, {"witness", witness}};
    if (c.tractable) {
        out["class"] = class_name(c.cls);
    } else {
        out["case"] = c.hard_case;
    }
    return out;
}

Config config_from_json(const json &j) {
    Config cfg;
    if (!j.is_object()) {
        throw InputError("config must be a JSON object");
    }
    try {
        if (j.contains("brute_force_edge_cap")) {
            cfg.brute_force_edge_cap = j.at("brute_force_edge_cap").get<size_t>();
        }
        if (j.contains("contraction_rank_cap")) {
            cfg.contraction_rank_cap = j.at("contraction_rank_cap").get<int>();
        }
        if (j.contains("precision_bits")) {
            cfg.precision_bits = j.at("precision_bits").get<int>();
        }
        if (j.contains("deterministic_seed")) {
            cfg.seed = j.at("deterministic_seed").get<uint64_t>();
        }
    } catch (const json::exception &e) {
        throw InputError(std::string("bad config value: ") + e.what());
    }
    if (cfg.brute_force_edge_cap == 0 || cfg.contraction_rank_cap <= 0) {
        throw InputError("config caps must be positive");
    }
    return cfg;
}

Config load_config_from_env() {
    const char *path = std::getenv("HOLANT6V_CONFIG");
    if (path == nullptr || *path == '\0') {
        return {};
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError(std::string("cannot open config ") + path);
    }
    try {
        return config_from_json(json::parse(in));
    } catch (const json::parse_error &e) {
        throw InputError(std::string(path) + ": " + e.what());
    }
}

}  // namespace holant6v
