"""Elliptic curves through the origin of ``Y = C x C`` and their configurations.

A curve through the origin is either ``w = alpha*z`` for an endomorphism
``alpha`` of ``C`` or the axis ``z = 0``; it is recorded as a slope in
``O u {inf}``.  Automorphisms of ``Y`` fixing the origin act on slopes by
Moebius maps with unit determinant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .lattices import Point, mult_matrix, quotient_reps, reduce_mod_one
from .rings import (
    OrderKind,
    OrderMismatchError,
    QuadInt,
    parse_quadint,
    try_div_exact,
    units,
)


class MobiusError(ValueError):
    """A Moebius image falls outside ``O u {inf}``."""


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class Slope:
    """``alpha`` is None for the curve ``z = 0``."""

    alpha: Optional[QuadInt] = None

    @classmethod
    def finite(cls, alpha: QuadInt) -> "Slope":
        return cls(alpha)

    @property
    def is_infinite(self) -> bool:
        return self.alpha is None

    @property
    def order(self) -> Optional[OrderKind]:
        return None if self.alpha is None else self.alpha.order

    def sort_key(self) -> tuple:
        if self.alpha is None:
            return (0,)
        return (1,) + self.alpha.sort_key()

    def __str__(self) -> str:
        return "inf" if self.alpha is None else str(self.alpha)


INFINITY = Slope(None)

_INFINITY_NAMES = {"inf", "oo", "∞", "infinity"}


def parse_slope(text: str, order: OrderKind) -> Slope:
    if text.strip().lower() in _INFINITY_NAMES:
        return INFINITY
    return Slope(parse_quadint(text, order))


def _common_order(slopes: Iterable[Slope]) -> Optional[OrderKind]:
    orders = {s.order for s in slopes if not s.is_infinite}
    if len(orders) > 1:
        raise OrderMismatchError("slopes from different orders")
    return orders.pop() if orders else None


@dataclass(frozen=True, eq=False)
class Configuration:
    """A set of distinct curves through the origin.

    ``slopes`` keeps the order it was built with (canonical forms list
    ``inf, 0, 1, u``); equality and hashing ignore that order.
    """

    order: OrderKind
    slopes: tuple[Slope, ...]

    def __post_init__(self):
        if len(set(self.slopes)) != len(self.slopes):
            raise ConfigurationError("duplicate slope in configuration")
        found = _common_order(self.slopes)
        if found is not None and found is not self.order:
            raise OrderMismatchError(
                f"{found.label} slope in a {self.order.label} configuration")

    @classmethod
    def of(cls, order: OrderKind, slopes: Iterable[Slope]) -> "Configuration":
        """Build with slopes sorted by the global order."""
        return cls(order, tuple(sorted(slopes, key=Slope.sort_key)))

    def key(self) -> frozenset:
        return frozenset(self.slopes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.order is other.order and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.order, self.key()))

    def __len__(self) -> int:
        return len(self.slopes)

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.slopes) + "}"


def intersection_number(s1: Slope, s2: Slope) -> int:
    """Intersection number of two curves through the origin.

    Two finite slopes meet in ``[(alpha-beta)Lambda : Lambda] = norm(alpha-beta)``
    points; a finite slope meets the axis ``z = 0`` only at the origin; a curve
    against itself gives its self-intersection, 0.
    """
    _common_order((s1, s2))
    if s1 == s2:
        return 0
    if s1.is_infinite or s2.is_infinite:
        return 1
    return (s1.alpha - s2.alpha).norm()


def intersection_points(s1: Slope, s2: Slope) -> tuple[tuple[Point, Point], ...]:
    """Points ``(w, z)`` of ``C_s1 n C_s2`` in lattice-basis coordinates."""
    _common_order((s1, s2))
    if s1 == s2:
        raise ValueError("a curve meets itself along the whole curve")
    if s1.is_infinite or s2.is_infinite:
        origin = (Fraction(0), Fraction(0))
        return ((origin, origin),)
    zs = quotient_reps(s1.alpha - s2.alpha).reps
    m = mult_matrix(s1.alpha)
    return tuple((reduce_mod_one(m.apply(z)), z) for z in zs)


def is_good_configuration(cfg: Configuration) -> bool:
    """Four curves meeting pairwise exactly once.

    Every curve passes through the origin, so pairwise intersection number 1
    already forces the four to share only the origin.
    """
    if len(cfg) != 4:
        raise ConfigurationError(f"a good configuration has 4 curves, got {len(cfg)}")
    return all(intersection_number(s, t) == 1
               for s, t in itertools.combinations(cfg.slopes, 2))


@dataclass(frozen=True)
class MobiusMap:
    """``x -> (m11*x + m12) / (m21*x + m22)`` with unit determinant."""

    m11: QuadInt
    m12: QuadInt
    m21: QuadInt
    m22: QuadInt

    def __post_init__(self):
        orders = {e.order for e in (self.m11, self.m12, self.m21, self.m22)}
        if len(orders) != 1:
            raise OrderMismatchError("Moebius entries from different orders")
        if not self.det().is_unit():
            raise ValueError(f"determinant {self.det()} is not a unit")

    @property
    def order(self) -> OrderKind:
        return self.m11.order

    def det(self) -> QuadInt:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def __call__(self, s: Slope) -> Slope:
        return mobius_apply(self, s)

    @classmethod
    def identity(cls, order: OrderKind) -> "MobiusMap":
        one, zero = QuadInt.one(order), QuadInt.zero(order)
        return cls(one, zero, zero, one)

    @classmethod
    def shear(cls, beta: QuadInt) -> "MobiusMap":
        """``x -> x + beta``, i.e. ``(w, z) -> (w + beta*z, z)``."""
        o = beta.order
        return cls(QuadInt.one(o), beta, QuadInt.zero(o), QuadInt.one(o))

    @classmethod
    def scale(cls, u: QuadInt) -> "MobiusMap":
        """``x -> u*x`` for a unit ``u``."""
        o = u.order
        return cls(u, QuadInt.zero(o), QuadInt.zero(o), QuadInt.one(o))

    @classmethod
    def swap(cls, order: OrderKind) -> "MobiusMap":
        """The factor swap ``(w, z) -> (z, w)``, acting as ``x -> 1/x``."""
        one, zero = QuadInt.one(order), QuadInt.zero(order)
        return cls(zero, one, one, zero)

    @classmethod
    def inversion_at(cls, alpha0: QuadInt) -> "MobiusMap":
        """``x -> 1/(x - alpha0)``; sends ``alpha0`` to infinity."""
        o = alpha0.order
        return cls(QuadInt.zero(o), QuadInt.one(o), QuadInt.one(o), -alpha0)


def mobius_apply(m: MobiusMap, s: Slope) -> Slope:
    if s.is_infinite:
        num, den = m.m11, m.m21
    else:
        if s.alpha.order is not m.order:
            raise OrderMismatchError("slope and map from different orders")
        num = m.m11 * s.alpha + m.m12
        den = m.m21 * s.alpha + m.m22
    if not den:
        return INFINITY
    q = try_div_exact(num, den)
    if q is None:
        raise MobiusError(f"image ({num})/({den}) of {s} is not in the order")
    return Slope(q)


def apply_to_configuration(m: MobiusMap, cfg: Configuration) -> Configuration:
    return Configuration(cfg.order, tuple(mobius_apply(m, s) for s in cfg.slopes))


def frame_map(a: Slope, b: Slope, c: Slope, order: OrderKind) -> MobiusMap:
    """Unit-determinant map sending ``a, b, c`` to ``inf, 0, 1``.

    Needs unit differences between the three slopes.
    """
    m = MobiusMap.identity(order)
    if not a.is_infinite:
        m = MobiusMap.inversion_at(a.alpha)
    b1 = mobius_apply(m, b)
    m = MobiusMap.shear(-b1.alpha) @ m
    c1 = mobius_apply(m, c)
    if not c1.alpha.is_unit():
        raise ConfigurationError(f"cannot scale {c1} to 1 by a unit")
    # x -> x / c1, determinant c1.
    zero, one = QuadInt.zero(order), QuadInt.one(order)
    return MobiusMap(one, zero, zero, c1.alpha) @ m


def cross_ratio(a: Slope, b: Slope, c: Slope, d: Slope) -> Slope:
    """Image of ``d`` under the map sending ``a, b, c`` to ``inf, 0, 1``.

    Equals ``mobius_apply(frame_map(a, b, c, order), d)`` but skips building
    the matrices: ``(d - b)(c - a) / ((d - a)(c - b))``, with factors
    involving ``inf`` dropped.
    """
    if d == a:
        return INFINITY
    num, den = [], []
    for (x, y), side in (((d, b), num), ((c, a), num), ((d, a), den), ((c, b), den)):
        if not (x.is_infinite or y.is_infinite):
            side.append(x.alpha - y.alpha)
    order = next(s.order for s in (a, b, c, d) if not s.is_infinite)
    top, bottom = QuadInt.one(order), QuadInt.one(order)
    for f in num:
        top = top * f
    for f in den:
        bottom = bottom * f
    q = try_div_exact(top, bottom)
    if q is None:
        raise MobiusError(f"cross-ratio ({top})/({bottom}) is not in the order")
    return Slope(q)


def canonicalize(cfg: Configuration) -> Configuration:
    """The orbit representative ``{inf, 0, 1, u}`` with the smallest ``u``.

    ``u`` is the image of the fourth slope once an ordered triple is sent to
    ``inf, 0, 1``; minimizing over all orderings makes the result constant
    on orbits.  Double transpositions fix the cross-ratio, so the orderings
    that end in one chosen slope already give every value.  The factor swap
    is the map ``x -> 1/x`` and so needs no separate pass.
    """
    if not is_good_configuration(cfg):
        raise ConfigurationError(f"{cfg} is not a good configuration")
    order = cfg.order
    *rest, d = cfg.slopes
    u = min(cross_ratio(a, b, c, d).alpha for a, b, c in itertools.permutations(rest))
    return Configuration(order, (INFINITY, Slope(QuadInt.zero(order)),
                                 Slope(QuadInt.one(order)), Slope(u)))


def search_good_configurations(order: OrderKind) -> list[Configuration]:
    """All good configurations up to isomorphism, in canonical form.

    After moving three curves to ``inf, 0, 1`` the fourth slope ``u`` must meet
    each of them once: ``u`` and ``u - 1`` are units.  So the unit group is
    the whole search space.
    """
    one = QuadInt.one(order)
    found = set()
    for u in units(order):
        if u == one or not (u - one).is_unit():
            continue
        cfg = Configuration(order, (INFINITY, Slope(QuadInt.zero(order)),
                                    Slope(one), Slope(u)))
        if is_good_configuration(cfg):
            found.add(canonicalize(cfg))
    return sorted(found, key=lambda c: c.slopes[-1].sort_key())
