"""Spectral numbers and Seifert forms of upper triangular Stokes matrices.

Exact values travel as "p/q" strings in both directions.
"""

import json
from fractions import Fraction

from . import _core
from ._core import StokesError

__all__ = [
    "StokesError",
    "hor_spectrum",
    "hor_matrix",
    "classify",
    "chain_verify",
    "chain_invariants",
    "reduce_chain",
    "qh_spectrum",
    "solve2",
    "hor1_line3",
    "classify3",
    "orbit_explore",
    "stratum_experiment",
    "run_acceptance",
    "cli",
]


def _s(x):
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _strs(xs):
    return [_s(x) for x in xs]


def _matrix(rows):
    return json.dumps([[x if isinstance(x, float) else _s(x) for x in row] for row in rows])


def hor_spectrum(k, beta):
    return json.loads(_core.hor_spectrum(k, _strs(beta)))


def hor_matrix(poly, k=0):
    """poly: coefficients, constant term first."""
    return json.loads(_core.hor_matrix(_strs(poly), k))


def classify(gram):
    return json.loads(_core.classify(_matrix(gram)))


def chain_verify(a):
    return json.loads(_core.chain_verify(list(a)))


def chain_invariants(a):
    return json.loads(_core.chain_invariants(list(a)))


def reduce_chain(a):
    return json.loads(_core.reduce_chain(list(a)))


def qh_spectrum(weights):
    return [Fraction(x) for x in json.loads(_core.qh_spectrum(_strs(weights)))]


def solve2(a):
    return json.loads(_core.solve2(_s(a)))


def hor1_line3(p1):
    return json.loads(_core.hor1_line3(_s(p1)))


def classify3(a):
    return json.loads(_core.classify3(_strs(a)))


def orbit_explore(matrix, depth=6, budget=100000):
    return json.loads(_core.orbit_explore(_matrix(matrix), depth, budget))


def stratum_experiment(n):
    return json.loads(_core.stratum_experiment(n))


def run_acceptance(only=()):
    return json.loads(_core.run_acceptance(list(only)))


def cli(*args):
    """Runs the command line front end; returns (exit code, stdout, stderr)."""
    return _core.cli([str(a) for a in args])
