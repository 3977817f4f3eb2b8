import math

import pytest

import diversity as dv

L1 = {"type": "l1"}
CIRC = {"type": "circumradius"}
R = 1 / math.sqrt(2)


def test_values():
    assert dv.evaluate(L1, [[0, 0], [1, 2]]) == pytest.approx(3.0)
    assert dv.evaluate(CIRC, [[0, 0], [1, 0], [0, 1]]) == pytest.approx(R, abs=1e-9)
    zono = {"type": "zonotope", "directions": [[1, 0], [0, 1], [R, -R]]}
    assert dv.evaluate(zono, [[0, 0], [1, 0], [0, 1]]) == pytest.approx(2.0, abs=1e-6)
    # A + (-A) for the triangle A: a hexagon.
    hexagon = [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]]
    assert dv.evaluate(zono, hexagon) == pytest.approx(2 + math.sqrt(2), abs=1e-6)
    assert dv.evaluate(L1, [], dim=2) == 0.0


def test_errors_map_to_exceptions():
    with pytest.raises(dv.ParseError):
        dv.evaluate({"type": "steiner"}, [[0, 0]])
    with pytest.raises(dv.DomainError):
        dv.evaluate({"type": "zonotope", "directions": [[2, 0]]}, [[0, 0]])
    with pytest.raises(dv.PreconditionError):
        dv.evaluate({"type": "zonotope", "directions": [[1, 0]]}, [[0, 0], [0, 1]])
    assert issubclass(dv.DomainError, ValueError)


def test_check_reports():
    reports = dv.check(CIRC, suite="linear", trials=20)
    assert len(reports) == 1
    r = reports[0]
    assert r["property"] == "linear" and r["pass"] is False and r["seed"] == 0
    assert r["witness"]["lhs"] == pytest.approx(R)
    assert all(r["pass"] for r in dv.check(L1, trials=30))
    assert "lipschitz" in dv.suite_names()


def test_tables():
    t = dv.restrict({"type": "diameter", "norm": "linf"}, [[0, 2], [1, 0], [2, 2], [1, 4]], labels="abcd")
    assert dv.table_axioms(t) == []
    nt = dv.negative_type(t)
    assert nt["decision"] is False and nt["form"] > 0
    assert dv.negative_type(dv.restrict(L1, [[0, 0], [1, 3], [2, -1]]))["decision"] is True


def test_measure_kernel_round_trip():
    measure = {"atoms": [{"u": [1, 0], "m": 1}, {"u": [-1, 0], "m": 1}]}
    kernel = dv.measure_to_kernel(measure)
    back = dv.kernel_to_measure(kernel)
    assert sum(a["m"] for a in back["atoms"]) > 0
