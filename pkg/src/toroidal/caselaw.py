"""The case tree for toroidal compactifications with c2bar = 1.

Every case is recorded as an :class:`EliminationStep`.  Steps marked
ARITHMETIC are recomputed each time the tree is built; steps marked
CITED_GEOMETRIC stand for geometric arguments that are not mechanized here
and carry a citation describing the argument used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence

from . import chern
from .chern import LogPair, SurfaceClass, SurfaceKind
from .rings import OrderKind
from .surfaces import Configuration, Slope, search_good_configurations

CuspPartition = tuple[int, ...]

C2BAR = 1
BMY_C1BAR_SQ = 3 * C2BAR


class Rule(Enum):
    ARITHMETIC = "arithmetic"
    CITED_GEOMETRIC = "cited_geometric"


class Verdict(Enum):
    ELIMINATED = "eliminated"
    SURVIVES = "survives"
    OUT_OF_SCOPE = "out_of_scope"


@dataclass(frozen=True)
class EliminationStep:
    case_id: str
    rule: Rule
    citation: str
    verdict: Verdict
    detail: str = ""

    def __post_init__(self):
        if self.rule is Rule.CITED_GEOMETRIC and not self.citation.strip():
            raise ValueError(f"cited step {self.case_id} needs a citation")


@dataclass(frozen=True)
class SingularCase:
    """A blow-down curve with one singular point of multiplicity ``r``.

    ``C^2 = 2n`` on the abelian surface, ``D^2 = 2n - r^2`` after blowing up
    the singular point, and the proper transform is elliptic exactly when
    ``r^2 - r - 2n == 0``.
    """

    n: int
    c_sq: int
    r: int
    d_sq: int

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("n and r must be positive")
        if self.c_sq != 2 * self.n or self.d_sq != self.c_sq - self.r ** 2:
            raise ValueError("inconsistent singular case")
        if self.r ** 2 - self.r - 2 * self.n != 0:
            raise ValueError("proper transform would not be elliptic")

    @classmethod
    def from_n(cls, n: int) -> Optional["SingularCase"]:
        s = isqrt(1 + 8 * n)
        if s * s != 1 + 8 * n:
            return None
        r = (1 + s) // 2
        return cls(n=n, c_sq=2 * n, r=r, d_sq=2 * n - r * r)


@dataclass(frozen=True)
class Survivor:
    order: OrderKind
    slopes: tuple[Slope, ...]
    boundary_selfints: tuple[int, ...]
    c1bar_sq: int
    c2bar: int
    bmy_equality: bool


@dataclass(frozen=True)
class ClassificationReport:
    steps: tuple[EliminationStep, ...]
    survivor: Optional[Survivor]
    orders: tuple[OrderKind, ...] = field(default=tuple(OrderKind))

    def step(self, case_id: str) -> EliminationStep:
        for s in self.steps:
            if s.case_id == case_id:
                return s
        raise KeyError(case_id)


# -- partitions of the boundary -------------------------------------------------

def _partition_key(p: CuspPartition) -> tuple:
    return (len(p), [-d for d in p])


def enumerate_cusp_partitions(total: int = 4) -> list[CuspPartition]:
    """Boundary self-intersection lists with ``-sum(D_i^2) == total``.

    Each list is ordered from -1 downwards; lists come shortest first.
    """
    if total < 1:
        raise ValueError("total must be positive")

    def parts(remaining: int, smallest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(smallest, remaining + 1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    out = [tuple(-m for m in p) for p in parts(total, 1)]
    return sorted(out, key=_partition_key)


# -- singular blow-down curves --------------------------------------------------

MIN_BOUNDARY_SELFINT = -4


def singular_curve_cases(n_max: int = 100) -> list[SingularCase]:
    """Singular blow-down curves whose proper transform fits the boundary.

    Scans ``1 <= n <= n_max`` for integral ``r`` and keeps ``D^2 >= -4``.
    """
    out = []
    for n in range(1, n_max + 1):
        case = SingularCase.from_n(n)
        if case is not None and case.d_sq >= MIN_BOUNDARY_SELFINT:
            out.append(case)
    return out


def _surd_sign(p: Fraction, q: Fraction, m: int) -> int:
    """Sign of ``p + q*sqrt(m)`` for ``m >= 0``, computed exactly."""
    def sgn(x):
        return (x > 0) - (x < 0)
    if q == 0 or m == 0:
        return sgn(p)
    if p == 0 or sgn(p) == sgn(q):
        return sgn(q) if p == 0 else sgn(p)
    # opposite signs: compare p^2 with q^2*m
    return sgn(p) * sgn(p * p - q * q * m)


def selfint_deficit(n: int) -> tuple[Fraction, Fraction, int]:
    """``2n - ((1 + sqrt(1+8n))/2)^2`` as ``p + q*sqrt(m)``, expanded exactly."""
    m = 1 + 8 * n
    # ((1 + s)/2)^2 = (1 + 2s + s^2)/4 with s^2 = m
    p = Fraction(2 * n) - Fraction(1 + m, 4)
    q = Fraction(-2, 4)
    return p, q, m


def deficit_checks(n_max: int = 100) -> dict[str, bool]:
    """Exact checks that the deficit decreases and drops below -4 from n = 7."""
    forms = {n: selfint_deficit(n) for n in range(1, n_max + 1)}
    closed_form = all(p == Fraction(-1, 2) and q == Fraction(-1, 2)
                      for p, q, _ in forms.values())
    # with p, q fixed at -1/2, deficit(n+1) < deficit(n) iff sqrt(m) grows
    decreasing = closed_form and all(forms[n + 1][2] > forms[n][2]
                                     for n in range(1, n_max))
    below = all(_surd_sign(p + 4, q, m) < 0
                for n, (p, q, m) in forms.items() if n >= 7)
    above = all(_surd_sign(p + 4, q, m) >= 0
                for n, (p, q, m) in forms.items() if n <= 6)
    return {
        "closed_form": closed_form,
        "strictly_decreasing": decreasing,
        "below_minus_4_from_7": below,
        "at_least_minus_4_up_to_6": above,
    }


THETA_CITATION = (
    "theta-function obstruction on an abelian surface: a reduced ample curve "
    "with a single singular point of multiplicity r satisfies C^2 >= r(r-1)+1 "
    "(the Gauss map of its theta function is non-constant)"
)


def theta_bound_satisfied(c_sq: int, r: int) -> bool:
    return c_sq >= r * (r - 1) + 1


def theta_obstruction_filter(case: SingularCase) -> EliminationStep:
    bound = case.r * (case.r - 1) + 1
    ok = theta_bound_satisfied(case.c_sq, case.r)
    return EliminationStep(
        case_id=f"curves.singular.n={case.n}",
        rule=Rule.ARITHMETIC,
        citation=THETA_CITATION,
        verdict=Verdict.SURVIVES if ok else Verdict.ELIMINATED,
        detail=(f"C^2={case.c_sq}, r={case.r}, D^2={case.d_sq}: "
                f"{case.c_sq} {'>=' if ok else '<'} r(r-1)+1 = {bound}"),
    )


# -- Kodaira dimension != 0 -----------------------------------------------------

def eliminate_general_type() -> list[EliminationStep]:
    steps = []
    # c2(X) = c2(Y) + k with c2(Y) >= 1 for a minimal surface of general type.
    splits = [(c2y, C2BAR - c2y) for c2y in range(1, C2BAR + 1)
              if chern.blowup_c2(c2y, C2BAR - c2y) == C2BAR]
    minimal = splits == [(C2BAR, 0)]
    steps.append(EliminationStep(
        "kappa2.minimal", Rule.ARITHMETIC,
        "minimal surfaces of general type have c2 >= 1; each blow-up adds 1 to c2",
        Verdict.SURVIVES if minimal else Verdict.ELIMINATED,
        f"(c2(Y), k) solutions of c2(Y)+k={C2BAR}: {splits}; X is minimal",
    ))
    # c1bar^2 = c1^2 - D^2 = 3*c2bar with D^2 < 0 and c1^2 > 0.
    c1_values = [c1 for c1 in range(1, BMY_C1BAR_SQ)]
    steps.append(EliminationStep(
        "kappa2.c1sq-range", Rule.ARITHMETIC,
        "c1^2 > 0 on a minimal surface of general type; D^2 < 0 for the boundary",
        Verdict.SURVIVES,
        f"0 < c1^2 < {BMY_C1BAR_SQ}: c1^2 in {c1_values}",
    ))
    for c1 in c1_values:
        ok = chern.noether_filter(c1, C2BAR)
        steps.append(EliminationStep(
            f"kappa2.c1sq={c1}", Rule.ARITHMETIC,
            "Noether's formula: c1^2 + c2 = 0 mod 12",
            Verdict.SURVIVES if ok else Verdict.ELIMINATED,
            f"c1^2 + c2 = {c1 + C2BAR} = {(c1 + C2BAR) % 12} mod 12",
        ))
    return steps


def kodaira_one_solutions(c2: int = C2BAR) -> list[tuple[int, int]]:
    """All ``(d, k)`` with ``d, k >= 0`` and ``12d + k == c2``."""
    return [(d, c2 - 12 * d) for d in range(c2 // 12 + 1)
            if chern.blowup_c2(SurfaceClass(SurfaceKind.KODAIRA_ONE, d).c2, c2 - 12 * d) == c2]


def eliminate_nonzero_kodaira() -> list[EliminationStep]:
    steps = []
    sols = kodaira_one_solutions()
    steps.append(EliminationStep(
        "kappa1.euler", Rule.ARITHMETIC,
        "minimal model has c1^2 = 0, so c2 = 12d by Noether; blow-ups add k",
        Verdict.SURVIVES if sols == [(0, 1)] else Verdict.ELIMINATED,
        f"(d, k) with 12d+k={C2BAR}: {sols}; X is a one-point blow-up of an "
        "elliptic surface with c2 = 0 (only multiple fibres, smooth reduction)",
    ))
    steps.append(EliminationStep(
        "kappa1.base-genus", Rule.CITED_GEOMETRIC,
        "some boundary curve dominates the base of the elliptic fibration "
        "(otherwise X minus D contains a smooth elliptic curve); Hurwitz formula",
        Verdict.ELIMINATED,
        "base curves of genus >= 2",
    ))
    steps.append(EliminationStep(
        "kappa1.base-elliptic", Rule.CITED_GEOMETRIC,
        "base change along the elliptic normalization of an n-section gives a "
        "fibration with a section, hence no multiple fibres, so kappa(Y) = 0",
        Verdict.ELIMINATED,
        "elliptic base",
    ))
    steps.append(EliminationStep(
        "kappa1.base-rational", Rule.CITED_GEOMETRIC,
        "a finite cover with a section and trivial L is a product C' x F, "
        "incompatible with kappa = 1 (Barth-Hulek-Peters-Van de Ven)",
        Verdict.ELIMINATED,
        "rational base",
    ))

    for case_id, base in (("kappa-inf.p2", chern.PROJECTIVE_PLANE),
                          ("kappa-inf.hirzebruch", chern.HIRZEBRUCH)):
        low = chern.blowup_c2(base.c2, 0)
        steps.append(EliminationStep(
            case_id, Rule.ARITHMETIC,
            "Euler number of the minimal model; blow-ups only increase c2",
            Verdict.ELIMINATED if low > C2BAR else Verdict.SURVIVES,
            f"c2(X) >= c2({base}) = {low} > {C2BAR}",
        ))
    steps.append(EliminationStep(
        "kappa-inf.ruled-genus>=2", Rule.CITED_GEOMETRIC,
        "a negative elliptic boundary curve is an n-section of the ruling; "
        "Hurwitz formula bounds the base genus by 1",
        Verdict.ELIMINATED,
        "ruled surfaces over curves of genus >= 2",
    ))
    ruled = SurfaceClass(SurfaceKind.RULED, 1)
    k = C2BAR - ruled.c2
    picard = 2 + k
    steps.append(EliminationStep(
        "kappa-inf.ruled-elliptic.blowups", Rule.ARITHMETIC,
        "c2 of a ruled surface over an elliptic curve; Picard rank 2 plus one per blow-up",
        Verdict.SURVIVES if k >= 0 else Verdict.ELIMINATED,
        f"c2(Y) = {ruled.c2}, so k = {k}; Picard rank of X = {picard}",
    ))
    steps.append(EliminationStep(
        "kappa-inf.ruled-elliptic.cusp-count", Rule.CITED_GEOMETRIC,
        "external bound on the number of cusps of a toroidal compactification "
        "in terms of the Picard rank of X; rank 3 allows at most two",
        Verdict.SURVIVES,
        "at most two cusps",
    ))
    steps.append(EliminationStep(
        "kappa-inf.ruled-elliptic.one-cusp", Rule.CITED_GEOMETRIC,
        "the blow-down curve is singular at one point p; the proper transform "
        "of the fibre through p is a rational curve with at most one puncture in X minus D",
        Verdict.ELIMINATED,
        "one cusp",
    ))
    steps.append(EliminationStep(
        "kappa-inf.ruled-elliptic.two-cusps", Rule.CITED_GEOMETRIC,
        "two components meeting at p with distinct tangents; the same fibre "
        "argument as for one cusp",
        Verdict.ELIMINATED,
        "two cusps",
    ))
    return steps


# -- Kodaira dimension 0 --------------------------------------------------------

KAPPA_ZERO_BASES = (chern.K3, chern.ENRIQUES, chern.ABELIAN, chern.BIELLIPTIC)


def _kappa_zero_steps() -> list[EliminationStep]:
    steps = []
    for base in KAPPA_ZERO_BASES:
        k = C2BAR - base.c2
        if base.kind is SurfaceKind.BIELLIPTIC:
            steps.append(EliminationStep(
                "kappa0.bielliptic", Rule.CITED_GEOMETRIC,
                "bi-elliptic minimal models are excluded by hypothesis; "
                "their classification is not attempted",
                Verdict.OUT_OF_SCOPE,
                f"c2 = {base.c2}, k = {k}",
            ))
            continue
        steps.append(EliminationStep(
            f"kappa0.{base}", Rule.ARITHMETIC,
            "Euler numbers of minimal surfaces with kappa = 0",
            Verdict.SURVIVES if k >= 0 else Verdict.ELIMINATED,
            f"k = c2bar - c2({base}) = {C2BAR} - {base.c2} = {k}",
        ))
    k2x = chern.blowup_k2(chern.ABELIAN.k2, C2BAR - chern.ABELIAN.c2)
    need = BMY_C1BAR_SQ - k2x
    steps.append(EliminationStep(
        "kappa0.boundary-total", Rule.ARITHMETIC,
        "adjunction for elliptic boundary curves: c1bar^2 = K_X^2 - sum D_i^2",
        Verdict.SURVIVES,
        f"K_X^2 = {k2x}; c1bar^2 = {BMY_C1BAR_SQ} forces -sum D_i^2 = {need}",
    ))
    return steps


def _format_partition(p: Sequence[int]) -> str:
    return "{" + ",".join(str(d) for d in p) + "}"


def _partition_steps(partitions: list[CuspPartition],
                     singular: list[SingularCase],
                     theta_steps: list[EliminationStep]) -> list[EliminationStep]:
    steps = []
    surviving_d_sq = {-1}  # smooth elliptic blow-down curve: 0 - 1^2
    for case, st in zip(singular, theta_steps):
        if st.verdict is Verdict.SURVIVES:
            surviving_d_sq.add(case.d_sq)
    for p in partitions:
        blocked = sorted({d for d in p if d not in surviving_d_sq})
        steps.append(EliminationStep(
            f"cusps.{_format_partition(p)}", Rule.ARITHMETIC,
            "each boundary curve is the proper transform of a smooth (D^2 = -1) "
            "or singular blow-down curve",
            Verdict.ELIMINATED if blocked else Verdict.SURVIVES,
            (f"no admissible blow-down curve with D^2 in {blocked}" if blocked
             else "four smooth elliptic curves through the blown-up point"),
        ))
    return steps


def _curve_steps(singular: list[SingularCase]) -> list[EliminationStep]:
    checks = deficit_checks()
    cross_link = all(c.d_sq == -c.r for c in singular)
    listing = ", ".join(f"(n={c.n}, C^2={c.c_sq}, r={c.r}, D^2={c.d_sq})" for c in singular)
    return [
        EliminationStep(
            "curves.rational", Rule.CITED_GEOMETRIC,
            "p_a = 1 + C^2/2 with K_Y = 0; C^2 = -2 gives a smooth rational curve, "
            "impossible on a surface uniformized by C^2",
            Verdict.ELIMINATED, "C^2 = -2",
        ),
        EliminationStep(
            "curves.singular-genus-one", Rule.CITED_GEOMETRIC,
            "a singular curve with p_a = 1 is rational (nodal or cuspidal), "
            "impossible on an abelian surface",
            Verdict.ELIMINATED, "C^2 = 0, singular",
        ),
        EliminationStep(
            "curves.smooth", Rule.ARITHMETIC,
            "smooth elliptic curve: p_a = 1 gives C^2 = 0; blowing up a point of "
            "multiplicity 1 lowers C^2 by 1",
            Verdict.SURVIVES, f"D^2 = 0 - 1^2 = {0 - 1}",
        ),
        EliminationStep(
            "curves.singular-enumeration", Rule.ARITHMETIC,
            "elliptic proper transform: r^2 - r - 2n = 0, D^2 = 2n - r^2 >= -4",
            Verdict.SURVIVES if all(checks.values()) and cross_link else Verdict.ELIMINATED,
            f"{listing}; deficit checks {checks}; D^2 = -r for every case: {cross_link}",
        ),
    ]


def _configuration_prelude() -> list[EliminationStep]:
    # pi^*C_i = D_i + E: C_i.C_j = D_i.D_j + D_i.E + D_j.E + E^2
    cij = 0 + 1 + 1 + (-1)
    return [
        EliminationStep(
            "config.pairwise", Rule.ARITHMETIC,
            "pull-back of blow-down curves through the blown-up point",
            Verdict.SURVIVES if cij == 1 else Verdict.ELIMINATED,
            f"C_i.C_j = 0 + 1 + 1 - 1 = {cij}; the four curves meet only at the blown-up point",
        ),
        EliminationStep(
            "config.reduction", Rule.CITED_GEOMETRIC,
            "translate the common point to the origin; two elliptic curves meeting "
            "once split the abelian surface as their product, a third forces equal "
            "factors C x C, and every curve through the origin is w = alpha z with "
            "alpha an endomorphism",
            Verdict.SURVIVES,
            "Y = C x C with curves z = 0, w = 0, w = z, w = u z; C generic, Z[i] or Z[t]",
        ),
    ]


def _search_steps(orders: Iterable[OrderKind]):
    steps, classes = [], []
    for order in orders:
        found = search_good_configurations(order)
        classes.extend(found)
        steps.append(EliminationStep(
            f"config.search.{order.label}", Rule.ARITHMETIC,
            "curves meet in norm(alpha - beta) points; search over u with u and "
            "u - 1 units, canonicalized under unit-determinant Moebius maps",
            Verdict.SURVIVES if found else Verdict.ELIMINATED,
            f"{len(found)} class(es)" + (": " + ", ".join(str(c) for c in found) if found else ""),
        ))
    return steps, classes


def run_classification(orders: Optional[Iterable[OrderKind]] = None) -> ClassificationReport:
    """Build the full case tree and its survivor.

    ``orders`` restricts the endomorphism orders searched in the final stage;
    by default all three are used.
    """
    orders = tuple(OrderKind) if orders is None else tuple(orders)
    steps: list[EliminationStep] = []
    steps += eliminate_general_type()
    steps += eliminate_nonzero_kodaira()
    steps += _kappa_zero_steps()

    partitions = enumerate_cusp_partitions(BMY_C1BAR_SQ - chern.blowup_k2(0, 1))
    bmy_ok = []
    for p in partitions:
        c1, c2 = chern.log_chern_numbers(LogPair(chern.ABELIAN, 1, p))
        bmy_ok.append(chern.bmy_equality(c1, c2) and c2 == C2BAR)
    steps.append(EliminationStep(
        "cusps.enumeration", Rule.ARITHMETIC,
        "partitions of -sum D_i^2 = 4 into boundary self-intersections <= -1",
        Verdict.SURVIVES if all(bmy_ok) else Verdict.ELIMINATED,
        f"{len(partitions)} lists: " + " ".join(_format_partition(p) for p in partitions)
        + f"; each has (c1bar^2, c2bar) = ({BMY_C1BAR_SQ}, {C2BAR}): {all(bmy_ok)}",
    ))

    singular = singular_curve_cases()
    steps += _curve_steps(singular)
    theta_steps = [theta_obstruction_filter(c) for c in singular]
    steps += theta_steps
    cusp_steps = _partition_steps(partitions, singular, theta_steps)
    steps += cusp_steps

    steps += _configuration_prelude()
    search, classes = _search_steps(orders)
    steps += search

    survivor = None
    surviving_partitions = [p for p, st in zip(partitions, cusp_steps)
                            if st.verdict is Verdict.SURVIVES]
    unique = len(classes) == 1 and len(surviving_partitions) == 1
    steps.append(EliminationStep(
        "config.uniqueness", Rule.ARITHMETIC,
        "count of good configuration classes over the searched orders",
        Verdict.SURVIVES if unique else Verdict.ELIMINATED,
        f"{len(classes)} class(es) in total",
    ))
    if unique:
        cfg: Configuration = classes[0]
        boundary = surviving_partitions[0]
        c1, c2 = chern.log_chern_numbers(LogPair(chern.ABELIAN, 1, boundary))
        bmy = chern.bmy_equality(c1, c2)
        k2x = chern.blowup_k2(chern.ABELIAN.k2, 1)
        steps.append(EliminationStep(
            "survivor.log-chern", Rule.ARITHMETIC,
            "log Chern numbers of the blow-up of C x C at the common point",
            Verdict.SURVIVES if bmy and c2 == C2BAR else Verdict.ELIMINATED,
            f"(c1bar^2, c2bar) = ({c1}, {c2}); 3*c2bar = c1bar^2: {bmy}; "
            f"c1^2(X) + c2(X) = {k2x} + {c2} = {k2x + c2}, "
            f"divisible by 12: {chern.noether_filter(k2x, c2)}",
        ))
        steps.append(EliminationStep(
            "survivor.ball-quotient", Rule.CITED_GEOMETRIC,
            "a pair saturating the logarithmic Bogomolov-Miyaoka-Yau inequality "
            "compactifies a ball quotient (Tian-Yau); also a Picard modular surface (Holzapfel)",
            Verdict.SURVIVES,
            "existence",
        ))
        survivor = Survivor(
            order=cfg.order,
            slopes=cfg.slopes,
            boundary_selfints=boundary,
            c1bar_sq=c1,
            c2bar=c2,
            bmy_equality=bmy,
        )
    return ClassificationReport(steps=tuple(steps), survivor=survivor, orders=orders)
