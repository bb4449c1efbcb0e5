"""Exact toric spectral sequences, homotopy K-theory rank tables and affine monoids.

Fans, polytopes and monoids are plain dicts in the JSON format of the command
line tool. Lattice integers come back as decimal strings; use ``ints`` to
convert nested lists of them.
"""

import json

from . import _core
from ._core import HypothesisError, InvalidFanError, SchemaError

__all__ = [
    "HypothesisError", "InvalidFanError", "SchemaError",
    "catalog", "fan_info", "e2", "betti", "purity", "frobenius", "kh_table",
    "check_corollary_c", "torsion_bound", "normal_fan", "proj_lower_bounds",
    "monoid", "normalization", "seminormalization", "gap", "conjecture_k0",
    "smith_normal_form", "ints",
]


def _wrap(fn):
    def call(obj, *args):
        return json.loads(fn(json.dumps(obj), *args))
    call.__name__ = fn.__name__
    return call


fan_info = _wrap(_core.fan_info)
e2 = _wrap(_core.e2)
betti = _wrap(_core.betti)
purity = _wrap(_core.purity)
normal_fan = _wrap(_core.normal_fan)
proj_lower_bounds = _wrap(_core.proj_lower_bounds)
normalization = _wrap(_core.normalization)
seminormalization = _wrap(_core.seminormalization)


def catalog(expr):
    """Named fan, e.g. ``catalog("projective_space(2)")``."""
    return json.loads(_core.catalog(expr))


def frobenius(fan, c):
    return json.loads(_core.frobenius(json.dumps(fan), c))


def kh_table(fan, max_n):
    return json.loads(_core.kh_table(json.dumps(fan), max_n))


def check_corollary_c(fan, max_n=4):
    return json.loads(_core.check_corollary_c(json.dumps(fan), max_n))


def torsion_bound(r):
    return json.loads(_core.torsion_bound(r))


def monoid(*generators):
    """Monoid dict from generator tuples: ``monoid((2,), (3,))``."""
    gens = [list(g) for g in generators]
    return {"type": "monoid", "rank": len(gens[0]), "generators": gens}


def gap(m, bound):
    return json.loads(_core.gap(json.dumps(m), bound))


def conjecture_k0(m, bound=12):
    return json.loads(_core.conjecture_k0(json.dumps(m), bound))


def smith_normal_form(rows):
    """(D, U, V) with U A V = D, as lists of Python ints."""
    cols = len(rows[0]) if rows else 0
    out = json.loads(_core.smith_normal_form([[str(x) for x in r] for r in rows], cols))
    return ints(out["D"]), ints(out["U"]), ints(out["V"])


def ints(x):
    if isinstance(x, list):
        return [ints(y) for y in x]
    return int(x)
