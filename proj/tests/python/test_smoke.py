import json
from fractions import Fraction

import pytest

diagramkit = pytest.importorskip("diagramkit")

A2 = "v a w=2\nv b w=2\ne a b\n"
LANNER = "v a w=1\nv b w=1\nv c w=2\ne a b\ne b c\n"
CYCLE = "v a w=2\nv b w=2\nv c w=2\ne a b\ne b c\ne c a\n"


def test_signature():
    assert diagramkit.signature([[-2, 1], [1, -2]]) == {"positive": 0, "zero": 0, "negative": 2}
    assert diagramkit.signature([[Fraction(1, 2), 0], [0, 0]])["zero"] == 1


def test_classify():
    assert diagramkit.classify(A2)["class"] == "elliptic"
    r = diagramkit.classify(LANNER)
    assert r["class"] == "hyperbolic" and r["lanner"]


def test_discrepancies():
    r = diagramkit.discrepancies("v a w=4\n")
    assert r["log_discrepancy"] == [Fraction(1, 2)]
    assert r["codiscrepancy"] == [Fraction(1, 2)]
    assert diagramkit.discrepancies(CYCLE)["singular"]["rank"] == 2
    s = diagramkit.classify_singularity("v a w=4\n", Fraction(1, 2))
    assert s["strongest"] == "eps_log_canonical"
    assert s["min_log_discrepancy"] == Fraction(1, 2)


def test_log_terminal_budget():
    chain = "".join(f"v v{i} w=2\n" for i in range(6)) + "".join(f"e v{i} v{i + 1}\n" for i in range(5))
    assert diagramkit.log_terminal(chain)["log_terminal"]
    with pytest.raises(diagramkit.BudgetExceeded):
        diagramkit.log_terminal(chain, 5)


def test_star():
    assert diagramkit.check_star("v a w=2\n", Fraction(1, 2))["witness"] == [0]
    assert diagramkit.check_star("v a w=5\n", Fraction(1, 2))["witness"] is None
    with pytest.raises(diagramkit.PreconditionError):
        diagramkit.check_star(A2, 0)


def test_blowup_round_trip():
    up = diagramkit.blowup(A2, "a", new_id="E")
    assert diagramkit.blowdown(up, "E") == diagramkit.normalize_graph(A2)
    edge = diagramkit.blowup(A2, "a", "b")
    assert "E" in edge
    with pytest.raises(diagramkit.ParseError):
        diagramkit.classify("v a w=2\ne a b\n")


def test_enumeration():
    r = diagramkit.minimal_elliptic(1, 8)
    assert len(r["graphs"]) == 16
    assert r["max_excess"] == 0
    c = diagramkit.lanner_closure(Fraction(1, 2), threads=2)
    assert c["exhausted"] and len(c["graphs"]) == 103


def test_bounds_and_dcc():
    assert diagramkit.pair_constants(Fraction(1, 2), 2) == (1, 6)
    assert diagramkit.dcc_min_positive("standard") == Fraction(1, 12)
    assert diagramkit.dcc_contains("standard", Fraction(5, 12))
    assert diagramkit.dcc_below("standard", Fraction(1, 4)) == [Fraction(1, 12), Fraction(1, 6), Fraction(1, 4)]
    with pytest.raises(diagramkit.InfiniteTail):
        diagramkit.dcc_below("standard", 1)
    values, complete = diagramkit.dcc_quotient("1/2", 1, 1, 1)
    assert values == [0, Fraction(1, 2)] and complete


def test_cli_entry():
    code, out, _ = diagramkit.run_cli(["dcc", "--set", "standard", "--op", "min-positive"])
    assert code == 0
    assert json.loads(out)["result"]["min_positive"] == "1/12"
    assert diagramkit.run_cli(["frobnicate"])[0] == 2
