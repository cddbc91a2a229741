# Copyright 2026 The holant6v Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import holant6v
from holant6v import Scalar

ICE = (1, 1, 1, 1, 1, 1)


def test_scalar_arithmetic():
    r2 = Scalar.sqrt2()
    assert r2 * r2 == 2
    assert 1 / (1 + r2) == Scalar("-1+(1)r2")
    assert Scalar.i() ** 4 == 1
    assert abs(complex(1 + r2) - (1 + 2**0.5)) < 1e-12
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / 0
    with pytest.raises(ValueError):
        Scalar("1 +")


def test_classify():
    assert holant6v.classify((2, 2, 1, 1, 1, 1))["case"] == 2
    m = holant6v.classify((1, 0, 1, 0, 1, 0))
    assert m["verdict"] == "Tractable" and m["class"] == "M"
    assert holant6v.classify((0,) * 6)["class"] == "P"


def test_evaluate_single_vertex_and_torus():
    grid = {
        "vertices": [{"id": 0, "signature": {"six_vertex": list(ICE)}}],
        "edges": [[[0, 0], [0, 2]], [[0, 1], [0, 3]]],
    }
    value, method = holant6v.evaluate(grid)
    assert value == 4 and method == "brute"
    t = holant6v.torus(2, ICE)
    assert holant6v.evaluate(t, "contract")[0] == holant6v.evaluate(t, "brute")[0] == 18
    assert holant6v.evaluate(holant6v.torus(4, (1, 1, 1, 1, 0, 0)))[1] in ("P", "A")
    with pytest.raises(holant6v.CapExceeded):
        holant6v.evaluate(holant6v.torus(5, ICE), "brute")
    bad = {"vertices": grid["vertices"], "edges": [[[0, 0], [0, 1]], [[0, 1], [0, 3]]]}
    with pytest.raises(ValueError, match=r"port \(0, 1\)"):
        holant6v.evaluate(bad)


def test_gadgets():
    assert holant6v.chain((1, 1, 2, 2, 3, 3), 2) == tuple(Scalar(v) for v in (1, 1, 13, 13, 12, 12))
    assert holant6v.closed_form(1, 2, 3, 2) == holant6v.chain((1, 1, 2, 2, 3, 3), 2)
    assert holant6v.mnm_product(ICE) == tuple(Scalar(v) for v in (1, 1, 2, 2, 2, 2))
    assert holant6v.two_zero_product((2, 3, 1, 0, 0, 5)) == tuple(Scalar(v) for v in (6, 6, 1, 25, 5, 5))
    branch, result = holant6v.one_zero_chain((1, 1, 0, 1, 1, 1))
    assert branch and all(not v.is_zero() for v in result)
    assert holant6v.hardness_determinant(0, 0, 0) == -2
    with pytest.raises(ValueError):
        holant6v.one_zero_chain(ICE)


def test_lattice_and_interpolation():
    assert holant6v.compute_lattice(2, 3)[0] == 0
    assert holant6v.compute_lattice(2, "1/2")[:2] == (1, (1, 1))
    values = holant6v.synthesize_values(2, 3, 1, [1, 2, 3])
    assert holant6v.interpolation_solve(2, 3, 1, values, 1, 1) == 6


def test_csp_and_ice():
    holant, direct = holant6v.csp_holant((1, 0, 0, 1), 2, [(0, 1)])
    assert holant == direct == 2
    rows = holant6v.ice_report(4)
    assert [r[0] for r in rows] == [2, 4]
    assert rows[1][1] == 2970
    assert abs(holant6v.LIEB_CONSTANT - 1.5396007) < 1e-6
