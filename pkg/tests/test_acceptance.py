"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run ``pytest -s tests/test_acceptance.py`` to see the lines, or execute this
file directly.
"""

import json
import random
import sys
from fractions import Fraction as F
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    good_configurations_brute_force,
    partitions_brute_force,
    random_element,
    random_walk,
    raw_norm,
    torsion_brute_force,
)
from toroidal.caselaw import (  # noqa: E402
    Verdict,
    deficit_checks,
    enumerate_cusp_partitions,
    kodaira_one_solutions,
    run_classification,
    singular_curve_cases,
    theta_obstruction_filter,
)
from toroidal.chern import noether_filter  # noqa: E402
from toroidal.cli import run_cli  # noqa: E402
from toroidal.lattices import IntMat2, mult_matrix, quotient_reps, reduce_mod_one, smith_normal_form  # noqa: E402
from toroidal.rings import OrderKind, QuadInt  # noqa: E402
from toroidal.surfaces import (  # noqa: E402
    INFINITY,
    Configuration,
    MobiusError,
    Slope,
    canonicalize,
    intersection_number,
    mobius_apply,
    search_good_configurations,
)

R, G, E = OrderKind.RATIONAL, OrderKind.GAUSSIAN, OrderKind.EISENSTEIN
N_RANDOM = 1000
SEED = 20240601


def _report(n, ok, what):
    print(f"AC{n} {'PASS' if ok else 'FAIL'}: {what}")
    return ok


def _json_cli(argv, capsys):
    assert run_cli(argv) == 0
    return json.loads(capsys.readouterr().out)


# -- AC1 ----------------------------------------------------------------------

def check_ac1(capsys):
    data = _json_cli(["classify", "--json"], capsys)
    s = data["survivor"]
    return (
        s is not None
        and s["order"] == "eisenstein"
        and s["slopes"] == ["inf", "0", "1", "t"]
        and s["boundary_selfints"] == [-1, -1, -1, -1]
        and (s["c1bar_sq"], s["c2bar"]) == (3, 1)
        and s["bmy_equality"] is True
        and [st["case_id"] for st in data["steps"]
             if st["case_id"].startswith("cusps.{") and st["verdict"] == "survives"]
        == ["cusps.{-1,-1,-1,-1}"]
    )


def test_ac1_unique_survivor(capsys):
    ok = check_ac1(capsys)
    assert _report(1, ok, "classify emits exactly the Eisenstein survivor with (3, 1)")


# -- AC2 ----------------------------------------------------------------------

def check_ac2():
    expected = {(-4,), (-1, -3), (-2, -2), (-1, -1, -2), (-1, -1, -1, -1)}
    got = enumerate_cusp_partitions(4)
    ok = len(got) == 5 and set(got) == expected
    for total in range(1, 11):
        parts = enumerate_cusp_partitions(total)
        ok &= len(parts) == len(set(parts)) and set(parts) == partitions_brute_force(total)
    return ok


def test_ac2_cusp_partitions():
    assert _report(2, check_ac2(), "five boundary multisets; oracle agrees for totals 1..10")


# -- AC3 ----------------------------------------------------------------------

def check_ac3():
    cases = singular_curve_cases(100)
    ok = {(c.n, c.c_sq, c.r) for c in cases} == {(1, 2, 2), (3, 6, 3), (6, 12, 4)}
    for c in cases:
        ok &= 2 * c.n < c.r * (c.r - 1) + 1
        ok &= theta_obstruction_filter(c).verdict is Verdict.ELIMINATED
    ok &= all(deficit_checks(100).values())
    return ok


def test_ac3_singular_curves():
    assert _report(3, check_ac3(), "three singular cases, all eliminated; deficit bounds to n=100")


# -- AC4 ----------------------------------------------------------------------

def check_ac4():
    eis = search_good_configurations(E)
    ok = [c.slopes for c in eis] == [(INFINITY, Slope(QuadInt(0, 0, E)), Slope(QuadInt(1, 0, E)),
                                      Slope(QuadInt(0, 1, E)))]
    ok &= search_good_configurations(G) == [] and search_good_configurations(R) == []
    for order in (R, G, E):
        ok &= good_configurations_brute_force(order, 9) == set(search_good_configurations(order))
    return ok


def test_ac4_configuration_search():
    assert _report(4, check_ac4(), "search gives 1/0/0 classes and matches brute force")


# -- AC5 ----------------------------------------------------------------------

def check_ac5():
    h, third = F(1, 2), F(1, 3)
    two = set(quotient_reps(QuadInt(2, 0, E)).reps)
    ok = len(two) == 4 and two == {(0, 0), (h, 0), (0, h), (h, h)}
    unit = quotient_reps(QuadInt(-1, 1, E))
    ok &= len(unit) == 1
    three = quotient_reps(QuadInt(2, -1, E))
    ok &= len(three) == 3 and set(three.reps) == {(0, 0), (third, third), (2 * third, 2 * third)}
    ok &= (F(2, 3), F(2, 3)) in three
    gauss = quotient_reps(QuadInt(1, -1, G))
    ok &= len(gauss) == 2 and set(gauss.reps) == {(0, 0), (h, h)}
    return ok


def test_ac5_torsion_examples():
    assert _report(5, check_ac5(), "torsion counts 4/1/3/2 with the expected points")


# -- AC6 ----------------------------------------------------------------------

def check_ac6():
    ok = not noether_filter(1, 1) and not noether_filter(2, 1)
    ok &= noether_filter(9, 3) and noether_filter(0, 12)
    brute = [(d, k) for d in range(3) for k in range(3) if 12 * d + k == 1]
    ok &= kodaira_one_solutions(1) == brute == [(0, 1)]
    return ok


def test_ac6_noether():
    assert _report(6, check_ac6(), "Noether filter examples and (d, k) = (0, 1)")


# -- AC7 ----------------------------------------------------------------------

def _matmul(a, b):
    return (a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3])


def _entries(m: IntMat2):
    return (m.m11, m.m12, m.m21, m.m22)


def _snf_ok(m: IntMat2) -> bool:
    res = smith_normal_form(m)
    u, d, v, mm = _entries(res.U), _entries(res.D), _entries(res.V), _entries(m)
    d1, d2 = d[0], d[3]
    det = mm[0] * mm[3] - mm[1] * mm[2]
    return (
        _matmul(_matmul(u, mm), v) == d
        and abs(u[0] * u[3] - u[1] * u[2]) == 1
        and abs(v[0] * v[3] - v[1] * v[2]) == 1
        and d[1] == d[2] == 0
        and d1 >= 0 and d2 >= 0
        and (d2 == 0 if d1 == 0 else d2 % d1 == 0)
        and d1 * d2 == abs(det)
    )


@lru_cache(maxsize=None)
def _oracle_torsion(gamma):
    return frozenset(torsion_brute_force(gamma))


def _small_gammas(order):
    bs = range(-4, 5) if order is not R else [0]
    return [QuadInt(a, b, order) for a in range(-4, 5) for b in bs
            if (a, b) != (0, 0) and raw_norm(order, a, b) <= 12]


def check_ac7():
    rng = random.Random(SEED)
    orders = (R, G, E)
    results = {}

    ok = True
    for _ in range(N_RANDOM):
        order = rng.choice(orders)
        x, y = random_element(order, rng, 40), random_element(order, rng, 40)
        ok &= (x * y).norm() == x.norm() * y.norm()
    results["norm multiplicativity"] = ok

    ok = True
    for _ in range(N_RANDOM):
        ok &= _snf_ok(IntMat2(*(rng.randint(-1000, 1000) for _ in range(4))))
    for _ in range(N_RANDOM // 4):  # degenerate shapes
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        k = rng.randint(-5, 5)
        ok &= _snf_ok(IntMat2(a, b, k * a, k * b))
    results["SNF validity"] = ok

    ok = True
    for _ in range(N_RANDOM):
        g = random_element(rng.choice(orders), rng, 40)
        ok &= mult_matrix(g).det() == g.norm()
    results["det(mult_matrix) = norm"] = ok

    ok, valid = True, 0
    while valid < N_RANDOM:
        order = rng.choice((G, E))
        m, _ = random_walk(Configuration.of(order, [INFINITY]), rng, length=4)
        pair = [INFINITY if rng.random() < 0.1 else Slope(random_element(order, rng, 5))
                for _ in range(2)]
        if pair[0] == pair[1]:
            continue
        try:
            images = [mobius_apply(m, s) for s in pair]
        except MobiusError:
            continue
        valid += 1
        ok &= intersection_number(*images) == intersection_number(*pair)
    results["Mobius invariance of intersection numbers"] = ok

    ok = True
    base = canonicalize(Configuration.of(E, [INFINITY, Slope(QuadInt(0, 0, E)),
                                             Slope(QuadInt(1, 0, E)), Slope(QuadInt(0, 1, E))]))
    for _ in range(N_RANDOM):
        _, image = random_walk(base, rng, length=4)
        c = canonicalize(image)
        ok &= c == base and canonicalize(c) == c and c.slopes == base.slopes
    results["canonicalize idempotent and orbit-constant"] = ok

    ok = True
    pools = {o: _small_gammas(o) for o in orders}
    for _ in range(N_RANDOM):
        g = rng.choice(pools[rng.choice(orders)])
        reps = set(quotient_reps(g).reps)
        ok &= reps == _oracle_torsion(g) and len(reps) == g.norm()
        p, q = rng.choice(sorted(reps)), rng.choice(sorted(reps))
        ok &= reduce_mod_one((p[0] + q[0], p[1] + q[1])) in reps
        ok &= reduce_mod_one((-p[0], -p[1])) in reps
    results["torsion closure and oracle agreement (norm <= 12)"] = ok
    return results


def test_ac7_property_suites():
    results = check_ac7()
    for name, ok in results.items():
        print(f"    {'ok  ' if ok else 'FAIL'} {name}")
    assert _report(7, all(results.values()), f"{len(results)} property suites, {N_RANDOM}+ cases each")


# -- AC8 ----------------------------------------------------------------------

def check_ac8(capsys):
    data = _json_cli(["classify", "--orders", "rational,gaussian", "--json"], capsys)
    full = run_classification()
    control_ids = [st["case_id"] for st in data["steps"]]
    non_search = [st.case_id for st in full.steps
                  if not st.case_id.startswith(("config.search", "config.uniqueness", "survivor."))]
    return (
        data["survivor"] is None
        and control_ids[:len(non_search)] == non_search
        and "config.search.eisenstein" not in control_ids
        and {"config.search.rational", "config.search.gaussian"} <= set(control_ids)
    )


def test_ac8_negative_control(capsys):
    assert _report(8, check_ac8(capsys), "without the Eisenstein order there is no survivor")


if __name__ == "__main__":
    sys.exit(pytest.main(["-s", "-q", __file__]))
