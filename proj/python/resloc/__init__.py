"""Exact lattice sums by residue localization.

Problems are plain dicts in the same JSON layout the ``resloc`` command line
reads. Rationals may be given as ints, ``fractions.Fraction`` or "p/q" strings.
"""

import json
from fractions import Fraction

from . import _resloc
from ._resloc import MalformedProblem, ResLocError

__all__ = [
    "ResLocError",
    "MalformedProblem",
    "ct",
    "trig_sum",
    "rat_sum",
    "verlinde",
    "verlinde_quasipolynomial",
    "vertices",
    "nbc",
    "partial_fractions",
    "delta_check",
    "scalar_value",
]


def _encode(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


def _dump(obj):
    return json.dumps(_encode(obj))


def _vec(v):
    return None if v is None else _dump(list(v))


def _rational(text):
    return Fraction(text)


def scalar_value(scalar):
    """Fraction for a rational Scalar JSON, else None."""
    if not scalar:
        return Fraction(0)
    if len(scalar) == 1 and scalar[0]["upow"] == 0 and scalar[0]["order"] == 1:
        return _rational(scalar[0]["coeffs"][0])
    return None


def _with_value(report):
    if "result" in report and isinstance(report["result"], list):
        report["value"] = scalar_value(report["result"])
    return report


def ct(problem):
    return _with_value(json.loads(_resloc.ct(_dump(problem))))


def trig_sum(problem, mu=None, t=None, k=0, oracle=False):
    return _with_value(json.loads(_resloc.trig_sum(_dump(problem), _vec(mu), _vec(t), k, oracle)))


def rat_sum(problem, mu=None, t=None, numeric_cutoff=0):
    return _with_value(json.loads(_resloc.rat_sum(_dump(problem), _vec(mu), _vec(t), numeric_cutoff)))


def verlinde(family, rank, g=1, k=0, lam=None, oracle=False):
    """Verlinde number as a Python int."""
    desc = _dump({"family": family, "rank": rank})
    report = json.loads(_resloc.verlinde(desc, g, k, _vec(lam), 0, oracle))
    if oracle and not report["oracle_match"]:
        raise AssertionError(f"oracle mismatch: {report['result']} vs {report['oracle']}")
    return int(report["result"])


def verlinde_quasipolynomial(family, rank, k0, g=1, lam=None):
    """(period, polys) with Fraction coefficients, lowest degree first."""
    desc = _dump({"family": family, "rank": rank})
    qp = json.loads(_resloc.verlinde(desc, g, 0, _vec(lam), k0, False))["quasipolynomial"]
    return qp["period"], [[_rational(c) for c in p] for p in qp["polys"]]


def vertices(problem):
    return json.loads(_resloc.vertices(_dump(problem)))["vertices"]


def nbc(problem):
    return json.loads(_resloc.nbc(_dump(problem)))["nbc"]


def partial_fractions(problem, mu=None):
    return json.loads(_resloc.partial_fractions(_dump(problem), _vec(mu)))


def delta_check(problem, mu=None):
    return json.loads(_resloc.delta_check(_dump(problem), _vec(mu)))
