"""Python front end to the diversity library.

Specs, point sets, tables and reports use the same JSON shapes as the
command-line tool; here they are plain dicts and lists.
"""

import json as _json

from . import _core
from ._core import DiversityError, DomainError, ParseError, PreconditionError

__all__ = [
    "DiversityError",
    "DomainError",
    "ParseError",
    "PreconditionError",
    "check",
    "evaluate",
    "kernel_to_measure",
    "measure_to_kernel",
    "negative_type",
    "restrict",
    "suite_names",
    "table_axioms",
]


def _dump(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def _points_doc(points, dim=None):
    if isinstance(points, dict):
        return points
    pts = [[float(c) for c in p] for p in points]
    if dim is None:
        if not pts:
            raise DomainError("dim is required for an empty point list")
        dim = len(pts[0])
    return {"dim": dim, "points": pts}


def evaluate(spec, points, dim=None):
    """delta(A) for a spec dict and a list of points (or a point-set dict)."""
    return _core.eval(_dump(spec), _dump(_points_doc(points, dim)))


def check(spec, suite="all", seed=0, trials=200, tol=1e-8):
    """Run a property suite; returns the list of report dicts."""
    return _json.loads(_core.check(_dump(spec), suite, seed, trials, tol))


def negative_type(table, tol=None):
    return _json.loads(_core.negative_type(_dump(table), tol))


def restrict(spec, points, labels=None):
    """Tabulate a spec on every subset of the given points."""
    pts = [[float(c) for c in p] for p in points]
    if labels is None:
        labels = [f"p{i}" for i in range(len(pts))]
    return _json.loads(_core.restrict(_dump(spec), list(labels), pts))


def table_axioms(table):
    """Axiom violations of a table; empty when it is a diversity."""
    return _json.loads(_core.table_axioms(_dump(table)))


def measure_to_kernel(measure):
    return _json.loads(_core.measure_to_kernel(_dump(measure)))


def kernel_to_measure(kernel):
    return _json.loads(_core.kernel_to_measure(_dump(kernel)))


def suite_names():
    return list(_core.suite_names())
