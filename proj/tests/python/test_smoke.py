from fractions import Fraction

import pytest

import rttkit


def test_qdet_one_site_gl2():
    chain = rttkit.Chain(2, 1, [0])
    q = chain.qdet(3)
    assert q == {(0, 0): Fraction(4, 3), (1, 1): Fraction(4, 3)}


def test_entries_are_exact_fractions():
    chain = rttkit.Chain(2, "1/2", ["1/3"])
    t12 = chain.entry(1, 2, Fraction(5, 2))
    # c/(u - z) E_21 at the single site
    assert t12 == {(1, 0): Fraction(1, 2) / (Fraction(5, 2) - Fraction(1, 3))}
    assert chain.vacuum_eigenvalue(1, 2) == 1 + Fraction(1, 2) / (2 - Fraction(1, 3))


def test_rtt_and_theorem1():
    chain = rttkit.Chain(3, 1, ["1/3", "7/5"], twist=[2, 3, 5], kinds=["fundamental", "conjugate"])
    assert chain.rtt_residual("11/7", "-5/3")["passed"]
    r = chain.theorem1([["5/2"], ["-3/7"]])
    assert r["passed"] and r["lhs"] == r["rhs"] and r["lhs"]
    assert chain.theorem1([["5/2"], ["-3/7"]], dual=True)["passed"]


def test_mu_map():
    assert rttkit.mu_map(3, [["1/2"], [4, 9]]) == [[3, 8], [Fraction(-3, 2)]]


def test_w_table_gl2():
    x, t = Fraction(5, 3), Fraction(-2, 7)
    doc = rttkit.w_table(2, [[x]], [[t]], seed=3)
    g = lambda a, b: 1 / (a - b)
    assert sorted(doc["coefficients"].values()) == sorted([g(x, t), g(t, x)])


def test_run_is_deterministic():
    cfg = rttkit.RunConfig()
    cfg.suites = ["theorem1"]
    cfg.n = [2]
    cfg.l = [1, 2]
    a = rttkit.run(cfg, include_timing=False)
    b = rttkit.run(cfg, include_timing=False)
    assert a == b and a[0]
    assert a[1]["version"] == 1


def test_mutation_fails():
    passed, report = rttkit.run(suites=["rtt"], n=[2], l=[1], mutate="rrt2")
    assert not passed
    assert any(c["anchor"] == "rrt2" and not c["passed"] for c in report["suites"][0]["cases"])


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        rttkit.Chain(2, 1, [0], kinds=["spinor"])
    with pytest.raises(RuntimeError):
        rttkit.Chain(2, 1, [0]).entry(1, 2, 0)
