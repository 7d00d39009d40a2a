"""Exact computations on weighted dual graphs.

Graphs are passed as text in the graph file format::

    v a w=2
    v b w=3 g=0
    e a b m=1

Rational results come back as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    Error,
    GraphError,
    InfiniteTail,
    ParseError,
    PreconditionError,
    SingularSystem,
    blowdown,
    blowup,
    classify,
    normalize_graph,
    run_cli,
)

__version__ = _core.__version__


def _q(x):
    return Fraction(x)


def _s(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def signature(rows):
    return _core.signature([[_s(x) for x in row] for row in rows])


def discrepancies(graph):
    r = _core.discrepancies(graph)
    if "singular" in r:
        r["singular"]["kernel"] = [_q(x) for x in r["singular"]["kernel"]]
        return r
    r["log_discrepancy"] = [_q(x) for x in r["log_discrepancy"]]
    r["codiscrepancy"] = [_q(x) for x in r["codiscrepancy"]]
    return r


def classify_singularity(graph, epsilon, literal=False):
    r = _core.classify_singularity(graph, _s(epsilon), literal)
    r["min_log_discrepancy"] = _q(r["min_log_discrepancy"])
    return r


def log_terminal(graph, budget=None):
    r = _core.log_terminal(graph) if budget is None else _core.log_terminal(graph, budget)
    r["witness_log_discrepancy"] = [_q(x) for x in r["witness_log_discrepancy"]]
    return r


def check_star(graph, epsilon):
    r = _core.check_star(graph, _s(epsilon))
    if r["witness"] is not None:
        r["witness"] = [_q(x) for x in r["witness"]]
    return r


def minimal_elliptic(epsilon, max_vertices, threads=1):
    return _core.minimal_elliptic(_s(epsilon), max_vertices, threads)


def lanner_closure(epsilon, seed=None, max_steps=32, threads=1):
    return _core.lanner_closure(_s(epsilon), seed, max_steps, threads)


def pair_constants(epsilon, d):
    c1, c2 = _core.pair_constants(_s(epsilon), d)
    return _q(c1), _q(c2)


def dcc_contains(coefficients, x):
    return _core.dcc_contains(coefficients, _s(x))


def dcc_min_positive(coefficients):
    v = _core.dcc_min_positive(coefficients)
    return None if v is None else _q(v)


def dcc_below(coefficients, t):
    return [_q(x) for x in _core.dcc_below(coefficients, _s(t))]


def dcc_quotient(coefficients, max_m, max_terms, max_n):
    values, complete = _core.dcc_quotient(coefficients, max_m, max_terms, max_n)
    return [_q(x) for x in values], complete
