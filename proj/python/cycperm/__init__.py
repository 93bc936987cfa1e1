"""Automorphism groups and permutation equivalence of cyclic codes."""

import json

from . import _core
from ._core import BudgetExceeded, CycpermError, cyclotomic_cosets, multiplier_set


def count_cyclic_codes(n, q):
    return json.loads(_core.count_cyclic_codes(n, q))


def enumerate_codes(q, n):
    return json.loads(_core.enumerate_json(q, n))


def analyze(q, n, defining_set, node_budget=50_000_000):
    return json.loads(_core.analyze_json(q, n, list(defining_set), node_budget))


def equivalent(q, n, defining_set, other_defining_set, strategy="hp"):
    return json.loads(_core.equivalent_json(q, n, list(defining_set), list(other_defining_set), strategy))


__all__ = [
    "BudgetExceeded",
    "CycpermError",
    "analyze",
    "count_cyclic_codes",
    "cyclotomic_cosets",
    "enumerate_codes",
    "equivalent",
    "multiplier_set",
]
