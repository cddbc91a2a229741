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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holant6v/classify.h"
#include "holant6v/csp.h"
#include "holant6v/errors.h"
#include "holant6v/gadgets.h"
#include "holant6v/ice.h"
#include "holant6v/interpolate.h"
#include "holant6v/io.h"
#include "holant6v/solvers.h"

namespace py = pybind11;
using namespace holant6v;

namespace {

Scalar to_scalar(const py::handle &v) {
    if (py::isinstance<Scalar>(v)) {
        return v.cast<Scalar>();
    }
    if (py::isinstance<py::bool_>(v)) {
        throw InputError("expected an int, str or Scalar");
    }
    if (py::isinstance<py::int_>(v)) {
        return Scalar(v.cast<int64_t>());
    }
    if (py::isinstance<py::str>(v)) {
        return Scalar::parse(v.cast<std::string>());
    }
    throw InputError("expected an int, str or Scalar, got " + std::string(py::str(v.get_type())));
}

SixVertexParams to_params(const py::sequence &values) {
    if (values.size() != 6) {
        throw InputError("expected six values (a, x, b, y, c, z)");
    }
    SixVertexParams p;
    for (int k = 0; k < 6; ++k) {
        p[k] = to_scalar(values[static_cast<size_t>(k)]);
    }
    return p;
}

py::tuple from_params(const SixVertexParams &p) {
    return py::make_tuple(p.a, p.x, p.b, p.y, p.c, p.z);
}

EvalLimits limits_of(size_t cap_edges, int cap_rank) {
    return {cap_edges, cap_rank};
}

EvalResult evaluate(const SignatureGrid &grid, const std::string &method, const EvalLimits &limits) {
    require_valid(grid);
    if (method == "auto") {
        return solve(grid, limits);
    }
    if (method == "brute") {
        return brute_force_eval(grid, limits);
    }
    if (method == "contract") {
        return contract_eval(grid, {}, limits);
    }
    EvalResult r;
    if (method == "p") {
        r.value = solve_P(grid);
        r.method = EvalMethod::solver_p;
    } else if (method == "a") {
        r.value = solve_A(grid);
        r.method = EvalMethod::solver_a;
    } else if (method == "m") {
        r.value = solve_M(grid);
        r.method = EvalMethod::solver_m;
    } else {
        throw InputError("unknown method " + method);
    }
    return r;
}

}  // namespace

PYBIND11_MODULE(_holant6v, m) {
    m.doc() = "Exact six-vertex Holant toolkit";

    static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const CapExceeded &e) {
            cap_exceeded(e.what());
        } catch (const InputError &e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const DivisionByZero &e) {
            PyErr_SetString(PyExc_ZeroDivisionError, e.what());
        }
    });

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const py::object &v) { return to_scalar(v); }), py::arg("value") = 0)
        .def_static("i", &Scalar::i)
        .def_static("sqrt2", &Scalar::sqrt2)
        .def("is_zero", &Scalar::is_zero)
        .def("is_gaussian", &Scalar::is_gaussian)
        .def("__str__", &Scalar::str)
        .def("__repr__", [](const Scalar &s) { return "Scalar('" + s.str() + "')"; })
        .def("__complex__",
             [](const Scalar &s) {
                 auto z = approx_complex(s);
                 return std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()));
             })
        .def("__hash__", [](const Scalar &s) { return py::hash(py::str(s.str())); })
        .def("__eq__", [](const Scalar &a, const py::object &b) { return a == to_scalar(b); })
        .def("__neg__", [](const Scalar &a) { return -a; })
        .def("__add__", [](const Scalar &a, const py::object &b) { return a + to_scalar(b); })
        .def("__radd__", [](const Scalar &a, const py::object &b) { return to_scalar(b) + a; })
        .def("__sub__", [](const Scalar &a, const py::object &b) { return a - to_scalar(b); })
        .def("__rsub__", [](const Scalar &a, const py::object &b) { return to_scalar(b) - a; })
        .def("__mul__", [](const Scalar &a, const py::object &b) { return a * to_scalar(b); })
        .def("__rmul__", [](const Scalar &a, const py::object &b) { return to_scalar(b) * a; })
        .def("__truediv__", [](const Scalar &a, const py::object &b) { return a / to_scalar(b); })
        .def("__rtruediv__", [](const Scalar &a, const py::object &b) { return to_scalar(b) / a; })
        .def("__pow__", [](const Scalar &a, long long e) { return a.pow(e); });

    m.def(
        "classify_json", [](const py::sequence &p) { return classification_to_json(classify(to_params(p))).dump(); },
        py::arg("params"));

    m.def(
        "evaluate",
        [](const std::string &grid_json, const std::string &method, size_t cap_edges, int cap_rank) {
            SignatureGrid grid = grid_from_json(nlohmann::json::parse(grid_json));
            EvalResult r = evaluate(grid, method, limits_of(cap_edges, cap_rank));
            return py::make_tuple(r.value, method_name(r.method));
        },
        py::arg("grid_json"), py::arg("method") = "auto", py::arg("cap_edges") = 24, py::arg("cap_rank") = 26);

    m.def(
        "torus_json", [](int n, const py::sequence &p) { return grid_to_json(build_torus(n, to_params(p))).dump(); },
        py::arg("n"), py::arg("params"));

    m.def(
        "chain", [](const py::sequence &p, int s) { return from_params(*to_six_vertex(chain_D(to_params(p), s))); },
        py::arg("params"), py::arg("s"));
    m.def(
        "closed_form",
        [](const py::object &a, const py::object &b, const py::object &c, int s) {
            return from_params(*to_six_vertex(closed_form_D(to_scalar(a), to_scalar(b), to_scalar(c), s)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("s"));
    m.def(
        "mnm_product", [](const py::sequence &p) { return from_params(mnm_product(to_params(p))); }, py::arg("params"));
    m.def(
        "one_zero_chain",
        [](const py::sequence &p) {
            OneZeroReport r = one_zero_chain(to_params(p));
            return py::make_tuple(r.branch, from_params(r.result));
        },
        py::arg("params"));
    m.def(
        "two_zero_product", [](const py::sequence &p) { return from_params(two_zero_product(to_params(p)).product); },
        py::arg("params"));
    m.def(
        "hardness_determinant",
        [](const py::object &a, const py::object &b, const py::object &c) {
            return hardness_determinant(to_scalar(a), to_scalar(b), to_scalar(c));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

    m.def(
        "compute_lattice",
        [](const py::object &alpha, const py::object &beta) {
            ExponentLattice l = compute_lattice(to_scalar(alpha), to_scalar(beta));
            py::object gen = py::none();
            if (l.generator) {
                gen = py::make_tuple(l.generator->first, l.generator->second);
            }
            return py::make_tuple(l.rank, gen, l.basis);
        },
        py::arg("alpha"), py::arg("beta"));
    m.def(
        "interpolation_solve",
        [](const py::object &alpha, const py::object &beta, int m_, const py::sequence &values, const py::object &phi,
           const py::object &psi) {
            InterpolationInstance inst{to_scalar(alpha), to_scalar(beta), m_, {}};
            for (const auto &v : values) {
                inst.values.push_back(to_scalar(v));
            }
            return interpolation_solve(inst, to_scalar(phi), to_scalar(psi));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("m"), py::arg("values"), py::arg("phi"), py::arg("psi"));
    m.def(
        "synthesize_values",
        [](const py::object &alpha, const py::object &beta, int m_, const py::sequence &x) {
            std::vector<Scalar> xs;
            for (const auto &v : x) {
                xs.push_back(to_scalar(v));
            }
            return synthesize_values(to_scalar(alpha), to_scalar(beta), m_, xs);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("m"), py::arg("x"));

    m.def(
        "csp_holant",
        [](const py::sequence &g, int num_vars, const std::vector<std::pair<int, int>> &clauses) {
            if (g.size() != 4) {
                throw InputError("g needs four values g00, g01, g10, g11");
            }
            Signature sig(2, {to_scalar(g[0]), to_scalar(g[1]), to_scalar(g[2]), to_scalar(g[3])});
            CspInstance inst{num_vars, clauses};
            CspReduction r = csp_reduction(sig, inst);
            Scalar holant = contract_eval(r.grid).value * r.multiplier;
            return py::make_tuple(holant, csp_partition_function(sig, inst));
        },
        py::arg("g"), py::arg("num_vars"), py::arg("clauses"));

    m.def(
        "ice_report",
        [](int n_max) {
            py::list rows;
            for (const IceRow &row : ice_report(n_max)) {
                rows.append(py::make_tuple(row.n, row.z, static_cast<double>(row.w)));
            }
            return rows;
        },
        py::arg("n_max"));
    m.attr("LIEB_CONSTANT") = static_cast<double>(lieb_constant());
}
