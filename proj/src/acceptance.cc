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

#include "holant6v/acceptance.h"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "holant6v/csp.h"
#include "holant6v/errors.h"
#include "holant6v/gadgets.h"
#include "holant6v/ice.h"
#include "holant6v/instances.h"
#include "holant6v/interpolate.h"
#include "holant6v/solvers.h"

namespace holant6v {

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string &why) {
        if (passed) {
            detail = why;
        }
        passed = false;
    }
};

SignatureGrid with_signatures(SignatureGrid grid, const std::function<Signature(int)> &sig) {
    for (auto &[id, f] : grid.vertices) {
        f = sig(id);
    }
    return grid;
}

int random_size(std::mt19937_64 &rng) {
    return std::uniform_int_distribution<int>(1, 6)(rng);
}

Outcome oracle_equivalence(std::mt19937_64 &rng, const EvalLimits &limits) {
    Outcome out;
    for (int trial = 0; trial < 200; ++trial) {
        SignatureGrid grid = with_signatures(random_wiring(rng, random_size(rng)), [&](int) {
            return std::bernoulli_distribution(0.7)(rng) ? from_six_vertex(random_six_vertex(rng))
                                                         : random_signature(rng);
        });
        Scalar brute = brute_force_eval(grid, limits).value;
        Scalar contracted = contract_eval(grid, {}, limits).value;
        if (brute != contracted) {
            out.fail("grid " + std::to_string(trial) + ": brute " + brute.str() + " vs contract " + contracted.str());
        }
    }
    if (out.passed) {
        out.detail = "200 random grids agree";
    }
    return out;
}

Outcome holographic_invariance(std::mt19937_64 &rng, const EvalLimits &limits) {
    Outcome out;
    Matrix z = holographic_basis_z();
    Matrix neq{{0, 1}, {1, 0}};
    if (z.transpose() * z != neq) {
        out.fail("Z^T Z is not the disequality matrix");
    }
    for (int trial = 0; trial < 50; ++trial) {
        SignatureGrid grid = with_signatures(random_wiring(rng, random_size(rng)),
                                             [&](int) { return from_six_vertex(random_six_vertex(rng)); });
        std::map<int, Signature> transformed;
        for (const auto &[id, f] : grid.vertices) {
            transformed.emplace(id, holographic_transform(f, z));
        }
        Scalar lhs = brute_force_eval(grid, limits).value;
        Scalar rhs = eval_bipartite_equality(grid, transformed, limits);
        if (lhs != rhs) {
            out.fail("grid " + std::to_string(trial) + ": " + lhs.str() + " vs " + rhs.str());
        }
    }
    if (out.passed) {
        out.detail = "Z^T Z = [0 1; 1 0]; 50 random grids agree";
    }
    return out;
}

Outcome solver_soundness(std::mt19937_64 &rng, const EvalLimits &limits) {
    Outcome out;
    for (TractableClass cls : {TractableClass::P, TractableClass::A, TractableClass::M}) {
        for (int trial = 0; trial < 100; ++trial) {
            SixVertexParams shared = random_params_in_class(rng, cls);
            SignatureGrid grid = with_signatures(random_wiring(rng, random_size(rng)), [&](int) {
                // M grids share one signature; P and A grids mix members.
                return from_six_vertex(cls == TractableClass::M ? shared : random_params_in_class(rng, cls));
            });
            Scalar expected = brute_force_eval(grid, limits).value;
            Scalar got = cls == TractableClass::P   ? solve_P(grid)
                         : cls == TractableClass::A ? solve_A(grid)
                                                    : solve_M(grid);
            if (got != expected) {
                out.fail(class_name(cls) + " grid " + std::to_string(trial) + ": solver " + got.str() + " vs brute " +
                         expected.str());
            }
        }
    }
    if (out.passed) {
        out.detail = "100 grids each for P, A, M agree with brute force";
    }
    return out;
}

SixVertexParams params(std::initializer_list<Scalar> v) {
    SixVertexParams p;
    int k = 0;
    for (const Scalar &s : v) {
        p[k++] = s;
    }
    return p;
}

Outcome classifier_vectors(std::mt19937_64 &rng) {
    Outcome out;
    struct Vector {
        SixVertexParams p;
        bool tractable;
        int hard_case;
        std::optional<TractableClass> cls;
    };
    const std::vector<Vector> vectors = {
        {params({2, 2, 1, 1, 1, 1}), false, 2, std::nullopt},
        {params({1, 1, 5, 5, 4, 4}), false, 2, std::nullopt},
        {params({2, 2, 1, 1, -1, -1}), false, 2, std::nullopt},
        {params({1, 1, 1, 1, 0, 0}), true, 0, std::nullopt},
        {params({1, 0, 1, 0, 1, 0}), true, 0, TractableClass::M},
    };
    for (const Vector &v : vectors) {
        Classification c = classify(v.p);
        bool ok = c.tractable == v.tractable && (v.tractable || c.hard_case == v.hard_case) &&
                  (!v.cls || c.cls == *v.cls);
        if (!ok) {
            out.fail(v.p.str() + " classified " + c.verdict_str());
        }
    }
    const std::vector<Scalar> scales = {Scalar(2), Scalar(-1), Scalar::i(), Scalar(Rational(1, 2)),
                                        Scalar(1) + Scalar::sqrt2()};
    for (int trial = 0; trial < 20; ++trial) {
        SixVertexParams p = random_six_vertex(rng, 0.3);
        Classification base = classify(p);
        for (const Permutation &perm : all_permutations()) {
            SixVertexParams q = permute_six_vertex(p, perm);
            for (const Scalar &k : scales) {
                SixVertexParams r = q;
                for (int j = 0; j < 6; ++j) {
                    r[j] = k * r[j];
                }
                Classification c = classify(r);
                if (!c.same_verdict(base)) {
                    out.fail(p.str() + " is " + base.verdict_str() + " but " + r.str() + " is " + c.verdict_str());
                }
            }
        }
    }
    if (out.passed) {
        out.detail = "5 vectors; 20 tuples x 24 permutations x 5 scalings invariant";
    }
    return out;
}

Outcome gadget_identities(std::mt19937_64 &rng) {
    Outcome out;
    const std::vector<std::array<Scalar, 3>> pool = {
        {1, 2, 3}, {1, 1, 1}, {2, 1, 1}, {1, 5, 4}, {2, 1, -1}, {Scalar::i(), 1, 2},
        {1, Scalar(Rational(1, 2)), Scalar(Rational(1, 2))}, {3, -2, 1}, {1, 0, 2}, {-1, Scalar::i(), -Scalar::i()},
    };
    for (const auto &[a, b, c] : pool) {
        for (int s = 1; s <= 5; ++s) {
            if (chain_D({a, a, b, b, c, c}, s) != closed_form_D(a, b, c, s)) {
                out.fail("chain_D != closed_form_D at (" + a.str() + "," + b.str() + "," + c.str() + "), s=" +
                         std::to_string(s));
            }
        }
    }
    for (int s = 1; s <= 5; ++s) {
        for (const Scalar &b : nonzero_pool()) {
            if (!lambda_s(1, b, b, s)(2, 2).is_zero() || !lambda_s(1, b, -b, s)(1, 1).is_zero()) {
                out.fail("Lambda_s does not collapse for b = +-c");
            }
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        SixVertexParams p = random_six_vertex(rng);
        if (mnm_product(p) != mnm_wiring(p)) {
            out.fail("mnm_product differs from its wiring at " + p.str());
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        // Two zeros in distinct pairs.
        SixVertexParams p;
        for (int k = 0; k < 6; ++k) {
            p[k] = random_scalar(rng, 0.0);
        }
        int skip = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int pair = 0; pair < 3; ++pair) {
            if (pair != skip) {
                p[2 * pair + std::uniform_int_distribution<int>(0, 1)(rng)] = Scalar(0);
            }
        }
        TwoZeroReport r = two_zero_product(p);
        const SixVertexParams &q = r.normalized;
        SixVertexParams formula{q.a * q.x, q.a * q.x, q.b * q.b, q.z * q.z, q.b * q.z, q.b * q.z};
        if (r.product != formula || zero_count(r.product) != 0) {
            out.fail("two_zero_product mismatch at " + p.str());
        }
    }
    const std::vector<Scalar> domain = {Scalar(0), Scalar::i(), -Scalar::i()};
    for (const Scalar &x : domain) {
        for (const Scalar &y : domain) {
            for (const Scalar &z : domain) {
                if (hardness_determinant(x, y, z).is_zero()) {
                    out.fail("determinant vanishes at (" + x.str() + "," + y.str() + "," + z.str() + ")");
                }
            }
        }
    }
    if (out.passed) {
        out.detail = "chain = closed form (10 triples, s<=5); mnm, two-zero wirings; Lambda_s collapse; 27 determinants";
    }
    return out;
}

Outcome interpolation_round_trips(std::mt19937_64 &rng) {
    Outcome out;
    struct Case {
        Scalar alpha, beta;
        int rank;
        std::pair<long long, long long> gen;
    };
    const std::vector<Case> cases = {
        {Scalar(2), Scalar(3), 0, {0, 0}},
        {Scalar(2), Scalar(Rational(1, 2)), 1, {1, 1}},
        {Scalar(3), Scalar(Rational(1, 3)), 1, {1, 1}},
    };
    for (const Case &c : cases) {
        ExponentLattice lat = compute_lattice(c.alpha, c.beta);
        if (lat.rank != c.rank || (c.rank == 1 && lat.generator != c.gen)) {
            out.fail("lattice of (" + c.alpha.str() + "," + c.beta.str() + ") has rank " + std::to_string(lat.rank));
        }
        std::vector<std::pair<Scalar, Scalar>> targets = {{1, 1}, {Scalar::i(), -Scalar::i()}};
        if (c.rank == 0) {
            targets.emplace_back(Scalar(5), Scalar(Rational(-2, 7)));
        } else {
            targets.emplace_back(Scalar(3), Scalar(Rational(1, 3)));
        }
        for (int m = 0; m <= 6; ++m) {
            auto pts = cone_points(m);
            std::vector<Scalar> x;
            for (size_t k = 0; k < pts.size(); ++k) {
                x.push_back(random_scalar(rng, 0.2));
            }
            InterpolationInstance inst{c.alpha, c.beta, m, synthesize_values(c.alpha, c.beta, m, x)};
            for (const auto &[phi, psi] : targets) {
                if (c.rank == 1 && !(phi * psi).is_one()) {
                    continue;
                }
                Scalar direct(0);
                for (size_t k = 0; k < pts.size(); ++k) {
                    direct += phi.pow(pts[k].first) * psi.pow(pts[k].second) * x[k];
                }
                Scalar got = interpolation_solve(inst, phi, psi);
                if (got != direct) {
                    out.fail("round trip failed for (" + c.alpha.str() + "," + c.beta.str() + "), m=" +
                             std::to_string(m));
                }
            }
        }
    }
    if (out.passed) {
        out.detail = "lattices rank 0, (1,1), (1,1); exact round trips for m <= 6";
    }
    return out;
}

Outcome csp_reduction_check(std::mt19937_64 &rng, const EvalLimits &limits) {
    Outcome out;
    for (int trial = 0; trial < 50; ++trial) {
        Signature g = random_binary(rng);
        CspInstance inst = random_csp(rng, 4, 5);
        CspReduction red = csp_reduction(g, inst);
        Scalar holant = brute_force_eval(red.grid, limits).value * red.multiplier;
        Scalar expected = csp_partition_function(g, inst);
        if (holant != expected) {
            out.fail("instance " + std::to_string(trial) + ": Holant " + holant.str() + " vs #CSP " + expected.str());
        }
    }
    if (out.passed) {
        out.detail = "50 random instances agree with brute-force #CSP";
    }
    return out;
}

Outcome ice_constant(const Config &cfg) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    std::vector<IceRow> rows = ice_report(8, cfg.limits(), cfg.precision_bits);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const long double ref = 1.5396007L;
    long double w4 = rows.at(1).w;
    long double w8 = rows.at(3).w;
    std::ostringstream detail;
    detail << std::setprecision(8) << "W4=" << static_cast<double>(w4) << " W8=" << static_cast<double>(w8)
           << " ref=" << static_cast<double>(lieb_constant());
    bool trend = std::fabs(w8 - ref) <= std::fabs(w4 - ref);
    detail << (trend ? ", trend ok" : ", trend not monotone (informational)");
    if (std::fabs(w8 - lieb_constant()) > 0.1L) {
        out.fail("|W8 - (4/3)^(3/2)| > 0.1: " + detail.str());
    } else if (secs >= 60) {
        out.fail("8x8 ice took " + std::to_string(secs) + " s");
    } else {
        out.detail = detail.str();
    }
    return out;
}

Outcome eulerian_semantics(const EvalLimits &limits) {
    Outcome out;
    SixVertexParams ice{1, 1, 1, 1, 1, 1};
    Signature f = from_six_vertex(ice);
    std::vector<std::pair<std::string, SignatureGrid>> graphs;
    auto single = [&](int a, int b, int c, int d) {
        SignatureGrid g;
        g.add_vertex(0, f);
        g.add_edge({0, a}, {0, b});
        g.add_edge({0, c}, {0, d});
        return g;
    };
    graphs.emplace_back("single vertex, loops (0,2)(1,3)", single(0, 2, 1, 3));
    graphs.emplace_back("single vertex, loops (0,1)(2,3)", single(0, 1, 2, 3));
    graphs.emplace_back("2x2 torus", build_torus(2, ice));
    graphs.emplace_back("3x3 torus", build_torus(3, ice));
    SignatureGrid theta;
    theta.add_vertex(0, f);
    theta.add_vertex(1, f);
    theta.add_vertex(2, f);
    theta.add_edge({0, 0}, {0, 1});
    theta.add_edge({0, 2}, {1, 0});
    theta.add_edge({0, 3}, {2, 0});
    theta.add_edge({1, 1}, {2, 1});
    theta.add_edge({1, 2}, {2, 2});
    theta.add_edge({1, 3}, {2, 3});
    graphs.emplace_back("three vertices with a loop and parallel edges", theta);
    std::ostringstream detail;
    for (const auto &[name, g] : graphs) {
        Scalar holant = brute_force_eval(g, limits).value;
        uint64_t count = count_eulerian_orientations(g);
        if (holant != Scalar(static_cast<int64_t>(count))) {
            out.fail(name + ": Holant " + holant.str() + " vs " + std::to_string(count) + " orientations");
        }
        detail << (detail.tellp() > 0 ? ", " : "") << count;
    }
    if (out.passed) {
        out.detail = "orientation counts " + detail.str();
    }
    return out;
}

}  // namespace

std::string format_result(const CriterionResult &r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << " ("
        << std::fixed << std::setprecision(2) << r.seconds << " s)";
    return out.str();
}

std::vector<CriterionResult> run_acceptance(const Config &cfg,
                                            const std::function<void(const CriterionResult &)> &on_result) {
    EvalLimits limits = cfg.limits();
    std::vector<CriterionResult> results;
    auto run = [&](int id, const std::string &name, double budget_seconds, const std::function<Outcome()> &body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.passed && budget_seconds > 0 && r.seconds > budget_seconds) {
            o.fail("over time budget of " + std::to_string(static_cast<int>(budget_seconds)) + " s");
        }
        r.passed = o.passed;
        r.detail = o.detail;
        if (on_result) {
            on_result(r);
        }
        results.push_back(r);
    };
    std::mt19937_64 rng(cfg.seed);
    run(1, "oracle equivalence", 120, [&] { return oracle_equivalence(rng, limits); });
    run(2, "holographic invariance", 0, [&] { return holographic_invariance(rng, limits); });
    run(3, "tractable solver soundness", 300, [&] { return solver_soundness(rng, limits); });
    run(4, "classifier vectors and invariance", 0, [&] { return classifier_vectors(rng); });
    run(5, "gadget identities", 0, [&] { return gadget_identities(rng); });
    run(6, "interpolation round trips", 0, [&] { return interpolation_round_trips(rng); });
    run(7, "CSP reduction", 0, [&] { return csp_reduction_check(rng, limits); });
    run(8, "ice constant", 60, [&] { return ice_constant(cfg); });
    run(9, "Eulerian orientation semantics", 0, [&] { return eulerian_semantics(limits); });
    return results;
}

}  // namespace holant6v
