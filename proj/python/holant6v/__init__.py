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

"""Exact evaluation and classification of six-vertex Holant problems."""

import json

from ._holant6v import (
    LIEB_CONSTANT,
    CapExceeded,
    Scalar,
    chain,
    closed_form,
    compute_lattice,
    csp_holant,
    hardness_determinant,
    ice_report,
    interpolation_solve,
    mnm_product,
    one_zero_chain,
    synthesize_values,
    two_zero_product,
)
from . import _holant6v

__all__ = [
    "LIEB_CONSTANT",
    "CapExceeded",
    "Scalar",
    "chain",
    "classify",
    "closed_form",
    "compute_lattice",
    "csp_holant",
    "evaluate",
    "hardness_determinant",
    "ice_report",
    "interpolation_solve",
    "mnm_product",
    "one_zero_chain",
    "synthesize_values",
    "torus",
    "two_zero_product",
]


def classify(params):
    """Classification of (a, x, b, y, c, z) as a dict with verdict and witness."""
    return json.loads(_holant6v.classify_json(list(params)))


def evaluate(grid, method="auto", cap_edges=24, cap_rank=26):
    """Holant value of a grid given as a dict or JSON string.

    Returns (value, method used). method is one of auto, brute, contract,
    p, a, m.
    """
    text = grid if isinstance(grid, str) else json.dumps(grid)
    return _holant6v.evaluate(text, method, cap_edges, cap_rank)


def torus(n, params):
    """The n x n periodic grid with every vertex carrying params, as a dict."""
    return json.loads(_holant6v.torus_json(n, list(params)))
