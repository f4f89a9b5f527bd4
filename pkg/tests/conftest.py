"""Shared fixtures: the four standing test datums and JSON file helpers.

Datum overview (all on cyclic groups, generator written g):

* ``datum_a`` -- Z_2, chi(g) = -1, a = g, alpha = 0: nilpotent, n = 2, m = 1.
* ``datum_b`` -- Z_4, chi(g) = -1, a = g, alpha = 0: nilpotent, n = 2, m = 2.
* ``datum_c`` -- Z_4, chi(g) = -1, a = g, alpha = 1: non-nilpotent, n = 2, m = 2.
* ``datum_e`` -- Z_9, chi(g) = zeta_3, a = g, alpha = 1: non-nilpotent, n = 3,
  m = 3.  Used where n = 2 is too small to expose an error (the closing-edge
  coefficient misread is invisible when l = n - 1).
"""

from __future__ import annotations

import json

import pytest

from doublerep.datum import datum_from_json

DATUM_JSON = {
    "A": {"orders": [2], "chi": [1], "a": [1], "alpha": 0},
    "B": {"orders": [4], "chi": [2], "a": [1], "alpha": 0},
    "C": {"orders": [4], "chi": [2], "a": [1], "alpha": 1},
    "E": {"orders": [9], "chi": [3], "a": [1], "alpha": 1},
}

INVALID_DATUM_JSON = {"orders": [8], "chi": [2], "a": [2], "alpha": 1}


def make_datum(key: str):
    return datum_from_json(DATUM_JSON[key])


@pytest.fixture(scope="session")
def datum_a():
    return make_datum("A")


@pytest.fixture(scope="session")
def datum_b():
    return make_datum("B")


@pytest.fixture(scope="session")
def datum_c():
    return make_datum("C")


@pytest.fixture(scope="session")
def datum_e():
    return make_datum("E")


@pytest.fixture
def write_json(tmp_path):
    """Write an object as JSON under tmp_path and return the path as str."""

    def _write(name: str, obj) -> str:
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    return _write


def first_weight(datum, l):
    return datum.weights_in_class(l)[0]
