import math

import pytest

from oracles import partitions_brute_force
from toroidal.caselaw import (
    EliminationStep,
    Rule,
    SingularCase,
    Verdict,
    deficit_checks,
    eliminate_general_type,
    eliminate_nonzero_kodaira,
    enumerate_cusp_partitions,
    kodaira_one_solutions,
    run_classification,
    selfint_deficit,
    singular_curve_cases,
    theta_bound_satisfied,
    theta_obstruction_filter,
)
from toroidal.chern import ABELIAN, blowup_k2, noether_filter
from toroidal.rings import OrderKind, QuadInt
from toroidal.surfaces import INFINITY, Slope

E = OrderKind.EISENSTEIN


def test_cusp_partitions():
    parts = enumerate_cusp_partitions()
    assert parts == [(-4,), (-1, -3), (-2, -2), (-1, -1, -2), (-1, -1, -1, -1)]
    assert enumerate_cusp_partitions(2) == [(-2,), (-1, -1)]


@pytest.mark.parametrize("total", range(1, 11))
def test_cusp_partitions_match_brute_force(total):
    got = enumerate_cusp_partitions(total)
    assert len(got) == len(set(got))
    assert set(got) == partitions_brute_force(total)


def test_singular_cases():
    cases = singular_curve_cases()
    assert [(c.n, c.c_sq, c.r, c.d_sq) for c in cases] == [
        (1, 2, 2, -2), (3, 6, 3, -3), (6, 12, 4, -4)]
    assert SingularCase.from_n(2) is None
    for c in cases:
        assert c.c_sq == c.r * (c.r - 1)
        assert c.d_sq == -c.r


def test_singular_case_invariants():
    with pytest.raises(ValueError):
        SingularCase(n=2, c_sq=4, r=2, d_sq=0)


def test_deficit_exact_checks_and_float_cross_check():
    assert all(deficit_checks(100).values())
    floats = [2 * n - ((1 + math.sqrt(1 + 8 * n)) / 2) ** 2 for n in range(1, 101)]
    assert all(b < a for a, b in zip(floats, floats[1:]))
    assert all(v < -4 for v in floats[6:])
    for n in range(1, 101):
        p, q, m = selfint_deficit(n)
        assert math.isclose(float(p) + float(q) * math.sqrt(m), floats[n - 1])


def test_theta_filter():
    by_n = {c.n: c for c in singular_curve_cases()}
    assert theta_obstruction_filter(by_n[1]).verdict is Verdict.ELIMINATED
    assert theta_obstruction_filter(by_n[6]).verdict is Verdict.ELIMINATED
    assert all(theta_obstruction_filter(c).verdict is Verdict.ELIMINATED for c in by_n.values())
    # a curve with C^2 = r(r-1) + 2 would pass
    for r in range(2, 8):
        assert theta_bound_satisfied(r * (r - 1) + 2, r)
        assert not theta_bound_satisfied(r * (r - 1), r)


def test_general_type_steps():
    steps = {s.case_id: s for s in eliminate_general_type()}
    assert steps["kappa2.c1sq=1"].verdict is Verdict.ELIMINATED
    assert steps["kappa2.c1sq=2"].verdict is Verdict.ELIMINATED
    assert "[1, 2]" in steps["kappa2.c1sq-range"].detail


def test_kodaira_one_arithmetic():
    assert kodaira_one_solutions(1) == [(0, 1)]
    brute = [(d, k) for d in range(5) for k in range(30) if 12 * d + k == 1]
    assert kodaira_one_solutions(1) == brute
    assert kodaira_one_solutions(13) == [(0, 13), (1, 1)]


def test_nonzero_kodaira_steps():
    steps = {s.case_id: s for s in eliminate_nonzero_kodaira()}
    assert "[(0, 1)]" in steps["kappa1.euler"].detail
    assert steps["kappa-inf.p2"].verdict is Verdict.ELIMINATED
    assert steps["kappa-inf.hirzebruch"].verdict is Verdict.ELIMINATED
    for s in steps.values():
        if s.rule is Rule.CITED_GEOMETRIC:
            assert s.citation


def test_cited_step_needs_citation():
    with pytest.raises(ValueError):
        EliminationStep("x", Rule.CITED_GEOMETRIC, " ", Verdict.ELIMINATED)


def test_full_run():
    report = run_classification()
    s = report.survivor
    assert s is not None
    assert s.order is E
    assert s.slopes == (INFINITY, Slope(QuadInt(0, 0, E)), Slope(QuadInt(1, 0, E)),
                        Slope(QuadInt(0, 1, E)))
    assert s.boundary_selfints == (-1, -1, -1, -1)
    assert (s.c1bar_sq, s.c2bar, s.bmy_equality) == (3, 1, True)
    assert report.step("kappa0.bielliptic").verdict is Verdict.OUT_OF_SCOPE
    assert report.step("kappa0.k3").verdict is Verdict.ELIMINATED
    assert report.step("kappa0.enriques").verdict is Verdict.ELIMINATED
    surviving = [st.case_id for st in report.steps
                 if st.case_id.startswith("cusps.{") and st.verdict is Verdict.SURVIVES]
    assert surviving == ["cusps.{-1,-1,-1,-1}"]


def test_run_is_deterministic():
    assert run_classification() == run_classification()


def test_negative_control_without_eisenstein():
    full = run_classification()
    ctrl = run_classification([OrderKind.RATIONAL, OrderKind.GAUSSIAN])
    assert ctrl.survivor is None
    assert ctrl.step("config.uniqueness").verdict is Verdict.ELIMINATED
    search_free = [st for st in full.steps
                   if not st.case_id.startswith(("config.search", "config.uniqueness", "survivor."))]
    assert list(ctrl.steps[:len(search_free)]) == search_free


def test_survivor_is_noether_consistent():
    s = run_classification().survivor
    k2x = blowup_k2(ABELIAN.k2, 1)
    assert (k2x, s.c2bar) == (-1, 1)
    assert noether_filter(k2x, s.c2bar)
