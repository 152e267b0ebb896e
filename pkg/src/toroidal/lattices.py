"""Integer 2x2 matrices, Smith normal form and torsion subgroups of C/Lambda.

Points of the torus are kept as rational coordinates in the lattice basis
``(1, g)``; the point ``1/2 + i/2`` of ``C/Z[i]`` is ``(1/2, 1/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import QuadInt

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class IntMat2:
    m11: int
    m12: int
    m21: int
    m22: int

    @classmethod
    def identity(cls) -> "IntMat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "IntMat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.m11, self.m12), (self.m21, self.m22))

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def is_diagonal(self) -> bool:
        return self.m12 == 0 and self.m21 == 0

    def __matmul__(self, other: "IntMat2") -> "IntMat2":
        return IntMat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def apply(self, v):
        """Matrix times a column vector with int or Fraction entries."""
        x, y = v
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with U, V unimodular and D = diag(d1, d2), d1 | d2."""

    U: IntMat2
    D: IntMat2
    V: IntMat2

    @property
    def invariant_factors(self) -> tuple[int, int]:
        return self.D.m11, self.D.m22


def mult_matrix(gamma: QuadInt) -> IntMat2:
    """Matrix of ``z -> gamma*z`` on the lattice basis ``(1, g)``.

    Columns are the coordinates of ``gamma*1`` and ``gamma*g``.
    """
    t, n = gamma.order.trace_of_gen, gamma.order.norm_of_gen
    a, b = gamma.a, gamma.b
    if not gamma.order.is_imaginary:
        # Generic lattice Z + Z*w: an integer acts as a scalar.
        return IntMat2(a, 0, 0, a)
    return IntMat2(a, -b * n, b, a + b * t)


def smith_normal_form(m: IntMat2) -> SnfResult:
    """Smith normal form of a 2x2 integer matrix.

    Works on the augmented rows ``[M | I]`` (row operations, tracked in U) and
    the columns ``[M ; I]`` (column operations, tracked in V).  Signs are
    absorbed into U so that both invariant factors are non-negative.
    """
    a = [[m.m11, m.m12], [m.m21, m.m22]]
    u = [[1, 0], [0, 1]]
    v = [[1, 0], [0, 1]]

    def swap_rows():
        a[0], a[1] = a[1], a[0]
        u[0], u[1] = u[1], u[0]

    def swap_cols():
        for mat in (a, v):
            for row in mat:
                row[0], row[1] = row[1], row[0]

    def add_row(dst, src, k):
        for mat in (a, u):
            mat[dst] = [x + k * y for x, y in zip(mat[dst], mat[src])]

    def add_col(dst, src, k):
        for mat in (a, v):
            for row in mat:
                row[dst] += k * row[src]

    while True:
        entries = [(abs(a[i][j]), i, j) for i in range(2) for j in range(2) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        if i:
            swap_rows()
        if j:
            swap_cols()
        p = a[0][0]
        if a[1][0]:
            add_row(1, 0, -(a[1][0] // p))
        if a[0][1]:
            add_col(1, 0, -(a[0][1] // p))
        if a[1][0] or a[0][1]:
            continue
        if a[1][1] % p:
            # Pull a[1][1] into the first row to expose a smaller gcd.
            add_row(0, 1, 1)
            continue
        break

    for i in range(2):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    # Zero matrix or rank one with the nonzero pivot already first.
    if a[0][0] == 0 and a[1][1] != 0:
        swap_rows()
        swap_cols()

    return SnfResult(
        U=IntMat2.from_rows(u),
        D=IntMat2.from_rows(a),
        V=IntMat2.from_rows(v),
    )


def check_snf(m: IntMat2, res: SnfResult) -> None:
    """Raise AssertionError unless ``res`` is a valid Smith form of ``m``."""
    d1, d2 = res.invariant_factors
    assert res.U @ m @ res.V == res.D, "U M V != D"
    assert res.U.is_unimodular() and res.V.is_unimodular(), "transform not unimodular"
    assert res.D.is_diagonal(), "D not diagonal"
    assert d1 >= 0 and d2 >= 0, "negative invariant factor"
    assert (d1 == 0 and d2 == 0) or (d1 != 0 and d2 % d1 == 0), "d1 does not divide d2"
    assert d1 * d2 == abs(m.det()), "d1*d2 != |det M|"


def reduce_mod_one(p: Point) -> Point:
    return (p[0] - (p[0].numerator // p[0].denominator),
            p[1] - (p[1].numerator // p[1].denominator))


def format_point(p: Point) -> str:
    return f"({p[0]}, {p[1]})"


@dataclass(frozen=True)
class TorsionGroup:
    """The kernel of multiplication by ``gamma`` on ``C/Lambda``."""

    gamma: QuadInt
    reps: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def __contains__(self, p) -> bool:
        q = reduce_mod_one((Fraction(p[0]), Fraction(p[1])))
        return q in self.reps

    def to_json(self) -> list[list[str]]:
        return [[str(x), str(y)] for x, y in self.reps]


def quotient_reps(gamma: QuadInt) -> TorsionGroup:
    """Coset representatives of ``{z : gamma*z in Lambda}`` modulo Lambda.

    With ``U @ M @ V == diag(d1, d2)`` the kernel is ``V`` applied to the grid
    ``(x/d1, y/d2)``.  Representatives lie in ``[0, 1)^2`` and are sorted.
    """
    if not gamma:
        raise ValueError("multiplication by zero has an infinite kernel")
    res = smith_normal_form(mult_matrix(gamma))
    d1, d2 = res.invariant_factors
    reps = set()
    for x in range(d1):
        for y in range(d2):
            p = res.V.apply((Fraction(x, d1), Fraction(y, d2)))
            reps.add(reduce_mod_one(p))
    return TorsionGroup(gamma=gamma, reps=tuple(sorted(reps)))
