"""Additive index of maps on small finite fields.

Thin wrappers over the compiled ``_core`` module; structured results are
returned as plain dicts with the same layout as the command-line tool's JSON.
"""

import json

from . import _core
from ._core import AddixError, BudgetExceeded, check_ids, count_squares, schema_version, suite_ids

__all__ = [
    "AddixError",
    "BudgetExceeded",
    "additive_index",
    "check_ids",
    "count",
    "count_squares",
    "find_field",
    "run_check",
    "run_suite",
    "schema_version",
    "suite_ids",
    "verify_witness",
]


def find_field(p, n):
    """Canonical modulus, basis and generator of F_{p^n}."""
    return json.loads(_core.find_field(p, n))


def additive_index(p, n, map="dh", T=None, table=None, m=0, seed=0, k_max=None, outliers=False, threads=1):
    """Least codimension of an affine fit for a map on F_{p^n}.

    ``map`` is ``"dh"``, ``"disclog"`` or ``"table"``; a table lists the value
    index for each element index 0..q-1. ``T`` defaults to q - 1.
    """
    return json.loads(_core.additive_index(p, n, map, T, table, m, seed, k_max, outliers, threads))


def verify_witness(p, n, map, witness, T=None, table=None):
    return _core.verify_witness(p, n, map, T, table, json.dumps(witness))


def count(what, T, s=None, a=None):
    """N(T), N(s, a, T) or L_T via ``what`` in {"NT", "NsT", "LT"}."""
    return json.loads(_core.count(what, T, s, a))


def run_check(check_id, threads=1, **params):
    return json.loads(_core.run_check(check_id, json.dumps(params), threads))


def run_suite(id, threads=1, with_elapsed=True):
    return json.loads(_core.run_suite(id, threads, with_elapsed))
