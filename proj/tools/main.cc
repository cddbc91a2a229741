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

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "holant6v/acceptance.h"
#include "holant6v/errors.h"
#include "holant6v/gadgets.h"
#include "holant6v/ice.h"
#include "holant6v/interpolate.h"
#include "holant6v/io.h"
#include "holant6v/solvers.h"

using namespace holant6v;
using nlohmann::json;

namespace {

std::string approx_str(const Scalar &s, int bits) {
    auto z = approx_complex(s, bits);
    std::ostringstream out;
    out << std::setprecision(bits > 53 ? 18 : 15) << static_cast<double>(z.real());
    if (z.imag() != 0) {
        out << (z.imag() < 0 ? "-" : "+") << std::fabs(static_cast<double>(z.imag())) << "i";
    }
    return out.str();
}

json scalar_json(const Scalar &s, int bits) {
    return {{"exact", s.str()}, {"approx", approx_str(s, bits)}};
}

void print(const json &j, bool as_json, const std::string &human) {
    if (as_json) {
        std::cout << j.dump(2) << std::endl;
    } else {
        std::cout << human;
    }
}

std::string params_line(const SixVertexParams &p) {
    std::string out;
    for (int k = 0; k < 6; ++k) {
        out += (k ? " " : "") + p[k].str();
    }
    return out;
}

std::vector<Scalar> read_values(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::vector<Scalar> out;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error &e) {
            throw InputError(path + ": " + e.what());
        }
        for (const json &v : j) {
            out.push_back(scalar_from_json(v));
        }
        return out;
    }
    std::istringstream words(text);
    std::string w;
    while (words >> w) {
        out.push_back(Scalar::parse(w));
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact evaluation and classification for the six-vertex model as Holant(!=2 | f)"};
    app.require_subcommand(1);
    Config cfg;
    bool as_json = false;
    std::optional<size_t> cap_edges;
    std::optional<int> cap_rank;
    std::optional<uint64_t> seed;
    app.add_flag("--json", as_json, "Machine-readable JSON output");
    app.add_option("--cap-edges", cap_edges, "Brute force edge cap");
    app.add_option("--cap-rank", cap_rank, "Contraction rank cap");
    app.add_option("--seed", seed, "Seed for randomized suites");

    auto *eval = app.add_subcommand("eval", "Evaluate a grid file");
    std::string grid_path;
    std::string method = "auto";
    eval->add_option("grid", grid_path, "Grid JSON file")->required();
    eval->add_option("--method", method, "auto|brute|contract|p|a|m")
        ->check(CLI::IsMember({"auto", "brute", "contract", "p", "a", "m"}));

    auto *cls = app.add_subcommand("classify", "Classify six-vertex params a x b y c z");
    std::vector<std::string> six;
    cls->add_option("params", six, "a x b y c z")->expected(6)->required();

    auto *gadget = app.add_subcommand("gadget", "Gadget constructions");
    std::string gadget_kind;
    std::vector<std::string> gparams;
    int chain_s = 1;
    gadget->add_option("kind", gadget_kind, "chain|mnm|one-zero|two-zero|det27")
        ->required()
        ->check(CLI::IsMember({"chain", "mnm", "one-zero", "two-zero", "det27"}));
    gadget->add_option("--params", gparams, "a b c for chain; a x b y c z otherwise");
    gadget->add_option("--s", chain_s, "Chain length for chain");

    auto *interp = app.add_subcommand("interpolate", "Solve an interpolation instance");
    std::string alpha_s, beta_s, phi_s = "1", psi_s = "1", values_path;
    int interp_m = 0;
    interp->add_option("--alpha", alpha_s)->required();
    interp->add_option("--beta", beta_s)->required();
    interp->add_option("--m", interp_m)->required();
    interp->add_option("--phi", phi_s);
    interp->add_option("--psi", psi_s);
    interp->add_option("--values", values_path, "File with N_1..N_R (JSON array or whitespace separated)")
        ->required();

    auto *ice = app.add_subcommand("ice", "Square ice on even tori up to n_max");
    int n_max = 8;
    ice->add_option("n_max", n_max);

    auto *selftest = app.add_subcommand("selftest", "Run the acceptance checks");

    auto *torus = app.add_subcommand("torus", "Emit an n x n torus grid as JSON");
    int torus_n = 2;
    std::vector<std::string> torus_params = {"1", "1", "1", "1", "1", "1"};
    torus->add_option("n", torus_n)->required();
    torus->add_option("params", torus_params, "a x b y c z")->expected(6);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg = load_config_from_env();
        if (cap_edges) {
            cfg.brute_force_edge_cap = *cap_edges;
        }
        if (cap_rank) {
            cfg.contraction_rank_cap = *cap_rank;
        }
        if (seed) {
            cfg.seed = *seed;
        }
        EvalLimits limits = cfg.limits();
        int bits = cfg.precision_bits;

        if (*eval) {
            SignatureGrid grid = load_grid(grid_path);
            EvalResult r;
            if (method == "auto") {
                r = solve(grid, limits);
            } else if (method == "brute") {
                r = brute_force_eval(grid, limits);
            } else if (method == "contract") {
                r = contract_eval(grid, {}, limits);
            } else {
                r.value = method == "p" ? solve_P(grid) : method == "a" ? solve_A(grid) : solve_M(grid);
                r.method = method == "p" ? EvalMethod::solver_p
                           : method == "a" ? EvalMethod::solver_a
                                           : EvalMethod::solver_m;
            }
            json j = {{"value", r.value.str()}, {"approx", approx_str(r.value, bits)},
                      {"class_used", method_name(r.method)}};
            if (r.method == EvalMethod::brute_force) {
                j["assignments"] = r.assignments;
            } else if (r.method == EvalMethod::contraction) {
                j["peak_rank"] = r.peak_rank;
            }
            print(j, as_json,
                  r.value.str() + "\n" + "approx " + approx_str(r.value, bits) + " via " + method_name(r.method) + "\n");
        } else if (*cls) {
            std::cout << classification_to_json(classify(six_vertex_from_strings(six))).dump(2) << std::endl;
        } else if (*gadget) {
            json j;
            std::string human;
            if (gadget_kind == "det27") {
                const std::vector<Scalar> domain = {Scalar(0), Scalar::i(), -Scalar::i()};
                json rows = json::array();
                bool all_nonzero = true;
                for (const Scalar &x : domain) {
                    for (const Scalar &y : domain) {
                        for (const Scalar &z : domain) {
                            Scalar d = hardness_determinant(x, y, z);
                            all_nonzero = all_nonzero && !d.is_zero();
                            rows.push_back({x.str(), y.str(), z.str(), d.str()});
                            human += x.str() + " " + y.str() + " " + z.str() + " -> " + d.str() + "\n";
                        }
                    }
                }
                j = {{"determinants", rows}, {"all_nonzero", all_nonzero}};
                human += all_nonzero ? "all 27 nonzero\n" : "some determinant vanishes\n";
            } else if (gadget_kind == "chain") {
                if (gparams.size() != 3) {
                    throw InputError("chain needs --params a b c");
                }
                Scalar a = Scalar::parse(gparams[0]), b = Scalar::parse(gparams[1]), c = Scalar::parse(gparams[2]);
                Signature chained = chain_D({a, a, b, b, c, c}, chain_s);
                Signature closed = closed_form_D(a, b, c, chain_s);
                j = {{"chain", signature_to_json(chained)},
                     {"closed_form", signature_to_json(closed)},
                     {"equal", chained == closed}};
                human = "D_s: " + params_line(*to_six_vertex(chained)) + "\n" +
                        (chained == closed ? "matches closed form\n" : "DIFFERS from closed form\n");
            } else {
                SixVertexParams p = six_vertex_from_strings(gparams);
                if (gadget_kind == "mnm") {
                    SixVertexParams formula = mnm_product(p);
                    SixVertexParams wired = mnm_wiring(p);
                    j = {{"product", six_vertex_to_json(formula)}, {"matches_wiring", formula == wired}};
                    human = params_line(formula) + "\n" +
                            (formula == wired ? "matches compose wiring\n" : "DIFFERS from compose wiring\n");
                } else if (gadget_kind == "two-zero") {
                    TwoZeroReport r = two_zero_product(p);
                    j = {{"normalized", six_vertex_to_json(r.normalized)},
                         {"permutation", r.normalization},
                         {"product", six_vertex_to_json(r.product)}};
                    human = "normalized " + params_line(r.normalized) + "\nproduct " + params_line(r.product) + "\n";
                } else {
                    OneZeroReport r = one_zero_chain(p);
                    json steps = json::array();
                    for (const GadgetStep &s : r.steps) {
                        steps.push_back({{"wiring", s.wiring},
                                         {"params", six_vertex_to_json(s.params)},
                                         {"all_nonzero", s.all_nonzero}});
                        human += s.wiring + ": " + params_line(s.params) + (s.all_nonzero ? "  <- all nonzero" : "") +
                                 "\n";
                    }
                    j = {{"normalized", six_vertex_to_json(r.normalized)},
                         {"permutation", r.normalization},
                         {"steps", steps},
                         {"branch", r.branch},
                         {"result", six_vertex_to_json(r.result)}};
                    human = "normalized " + params_line(r.normalized) + "\n" + human;
                }
            }
            print(j, as_json, human);
        } else if (*interp) {
            InterpolationInstance inst{Scalar::parse(alpha_s), Scalar::parse(beta_s), interp_m,
                                       read_values(values_path)};
            Scalar phi = Scalar::parse(phi_s), psi = Scalar::parse(psi_s);
            Scalar r = interpolation_solve(inst, phi, psi);
            ExponentLattice lat = compute_lattice(inst.alpha, inst.beta);
            json j = {{"value", r.str()}, {"approx", approx_str(r, bits)}, {"lattice_rank", lat.rank}};
            if (lat.generator) {
                j["generator"] = {lat.generator->first, lat.generator->second};
            }
            print(j, as_json, r.str() + "\n");
        } else if (*ice) {
            std::vector<IceRow> rows = ice_report(n_max, limits, bits);
            json table = json::array();
            std::ostringstream human;
            human << std::setw(4) << "n" << std::setw(24) << "Z" << std::setw(14) << "W_n" << "\n";
            for (const IceRow &r : rows) {
                table.push_back({{"n", r.n},
                                 {"Z", r.z.str()},
                                 {"Z_approx", approx_str(r.z, bits)},
                                 {"W", static_cast<double>(r.w)},
                                 {"peak_rank", r.peak_rank}});
                human << std::setw(4) << r.n << std::setw(24) << r.z.str() << std::setw(14) << std::setprecision(9)
                      << static_cast<double>(r.w) << "\n";
            }
            human << "reference (4/3)^(3/2) = " << std::setprecision(9) << static_cast<double>(lieb_constant())
                  << "\n";
            print({{"rows", table}, {"reference", static_cast<double>(lieb_constant())}}, as_json, human.str());
        } else if (*selftest) {
            bool all = true;
            json results = json::array();
            run_acceptance(cfg, [&](const CriterionResult &r) {
                all = all && r.passed;
                if (as_json) {
                    results.push_back({{"id", r.id},
                                       {"name", r.name},
                                       {"passed", r.passed},
                                       {"detail", r.detail},
                                       {"seconds", r.seconds}});
                } else {
                    std::cout << format_result(r) << std::endl;
                }
            });
            if (as_json) {
                std::cout << json{{"passed", all}, {"criteria", results}}.dump(2) << std::endl;
            }
            return all ? 0 : 1;
        } else if (*torus) {
            std::cout << grid_to_json(build_torus(torus_n, six_vertex_from_strings(torus_params))).dump() << std::endl;
        }
    } catch (const CapExceeded &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const DivisionByZero &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}
