"""Exact arithmetic in the endomorphism rings of an elliptic curve.

Three orders occur: the integers (generic curve), the Gaussian integers
``Z[i]`` and ``Z[t]`` with ``t = exp(i*pi/3)``.  An element is stored as a
pair ``(a, b)`` meaning ``a + b*g`` where the generator satisfies

    g**2 = T*g - N

so one multiplication rule serves both imaginary orders.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Optional, Union


class OrderMismatchError(ValueError):
    """Raised when elements of different orders are combined."""


class QuadIntParseError(ValueError):
    pass


class OrderKind(Enum):
    """An order together with the trace and norm of its generator."""

    RATIONAL = ("rational", 0, 0, "")
    GAUSSIAN = ("gaussian", 0, 1, "i")
    EISENSTEIN = ("eisenstein", 1, 1, "t")

    def __init__(self, label: str, trace: int, norm: int, symbol: str):
        self.label = label
        self.trace_of_gen = trace
        self.norm_of_gen = norm
        self.symbol = symbol

    @property
    def is_imaginary(self) -> bool:
        return self is not OrderKind.RATIONAL

    @property
    def discriminant(self) -> int:
        return self.trace_of_gen ** 2 - 4 * self.norm_of_gen

    @classmethod
    def from_name(cls, name: str) -> "OrderKind":
        key = name.strip().lower()
        aliases = {
            "r": cls.RATIONAL, "z": cls.RATIONAL, "rational": cls.RATIONAL,
            "g": cls.GAUSSIAN, "gaussian": cls.GAUSSIAN,
            "e": cls.EISENSTEIN, "eisenstein": cls.EISENSTEIN,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown order {name!r}") from None


IntLike = Union[int, "QuadInt"]


@total_ordering
@dataclass(frozen=True, repr=False)
class QuadInt:
    """The element ``a + b*g`` of an order.

    Instances are immutable and hashable.  The total order compares
    ``(norm, a, b)`` lexicographically; it exists only to make every
    enumeration in the package deterministic.
    """

    a: int
    b: int
    order: OrderKind

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("QuadInt coordinates must be integers")
        if self.order is OrderKind.RATIONAL and self.b != 0:
            raise ValueError("a rational integer has no generator part")

    @classmethod
    def zero(cls, order: OrderKind) -> "QuadInt":
        return cls(0, 0, order)

    @classmethod
    def one(cls, order: OrderKind) -> "QuadInt":
        return cls(1, 0, order)

    @classmethod
    def gen(cls, order: OrderKind) -> "QuadInt":
        if order is OrderKind.RATIONAL:
            raise ValueError("the rational order has no generator")
        return cls(0, 1, order)

    def _coerce(self, other: IntLike) -> "QuadInt":
        if isinstance(other, QuadInt):
            if other.order is not self.order:
                raise OrderMismatchError(
                    f"cannot combine {self.order.label} and {other.order.label} elements")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QuadInt(other, 0, self.order)
        raise TypeError(f"cannot combine QuadInt with {type(other).__name__}")

    def __add__(self, other: IntLike) -> "QuadInt":
        o = self._coerce(other)
        return QuadInt(self.a + o.a, self.b + o.b, self.order)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> "QuadInt":
        o = self._coerce(other)
        return QuadInt(self.a - o.a, self.b - o.b, self.order)

    def __rsub__(self, other: IntLike) -> "QuadInt":
        return self._coerce(other) - self

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b, self.order)

    def __mul__(self, other: IntLike) -> "QuadInt":
        o = self._coerce(other)
        t, n = self.order.trace_of_gen, self.order.norm_of_gen
        a = self.a * o.a - self.b * o.b * n
        b = self.a * o.b + o.a * self.b + self.b * o.b * t
        return QuadInt(a, b, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QuadInt":
        if k < 0:
            raise ValueError("negative powers are not ring elements")
        result = QuadInt.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conj(self) -> "QuadInt":
        return QuadInt(self.a + self.b * self.order.trace_of_gen, -self.b, self.order)

    def norm(self) -> int:
        # For RATIONAL this is a**2: the index of a*Lambda in a rank-2 lattice.
        t, n = self.order.trace_of_gen, self.order.norm_of_gen
        return self.a * self.a + self.a * self.b * t + self.b * self.b * n

    def trace(self) -> int:
        return 2 * self.a + self.b * self.order.trace_of_gen

    def is_unit(self) -> bool:
        return self.norm() == 1

    def sort_key(self) -> tuple[int, int, int]:
        return (self.norm(), self.a, self.b)

    def __lt__(self, other: "QuadInt") -> bool:
        if not isinstance(other, QuadInt):
            return NotImplemented
        if other.order is not self.order:
            raise OrderMismatchError("cannot compare elements of different orders")
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_quadint(self)

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b}, OrderKind.{self.order.name})"


def conj_norm_trace(x: QuadInt) -> tuple[QuadInt, int, int]:
    return x.conj(), x.norm(), x.trace()


def try_div_exact(x: QuadInt, y: QuadInt) -> Optional[QuadInt]:
    """Return ``q`` with ``q*y == x`` if ``y`` divides ``x``, else None."""
    if x.order is not y.order:
        raise OrderMismatchError("cannot divide elements of different orders")
    if not y:
        raise ZeroDivisionError("division by zero in an order")
    num = x * y.conj()
    n = y.norm()
    if num.a % n or num.b % n:
        return None
    return QuadInt(num.a // n, num.b // n, x.order)


_PRIMITIVE_UNIT = {
    OrderKind.RATIONAL: (-1, 0),
    OrderKind.GAUSSIAN: (0, 1),
    OrderKind.EISENSTEIN: (0, 1),
}


def units(order: OrderKind) -> list[QuadInt]:
    """All units, listed as successive powers of a generator of the unit group."""
    u = QuadInt(*_PRIMITIVE_UNIT[order], order)
    one = QuadInt.one(order)
    out = [one]
    x = u
    while x != one:
        out.append(x)
        x = x * u
    return out


def elements_up_to_norm(order: OrderKind, bound: int) -> list[QuadInt]:
    """Every element of norm at most ``bound``, sorted by the global order."""
    # For an imaginary order, norm >= (4N - T^2)/(4N) * a^2 and
    # norm >= (4N - T^2)/4 * b^2, so sqrt(4*bound)+1 bounds both coordinates.
    r = 1
    while r * r <= 4 * bound:
        r += 1
    bs = range(-r, r + 1) if order.is_imaginary else range(0, 1)
    out = [QuadInt(a, b, order) for a in range(-r, r + 1) for b in bs]
    return sorted(x for x in out if x.norm() <= bound)


def format_quadint(x: QuadInt) -> str:
    """Render as ``a``, ``b*g`` style text: ``2-t``, ``-1+3i``, ``t``, ``0``."""
    g = x.order.symbol
    if x.b == 0:
        return str(x.a)
    coef = {1: "", -1: "-"}.get(x.b, str(x.b))
    gen_part = f"{coef}{g}"
    if x.a == 0:
        return gen_part
    if x.b > 0:
        gen_part = "+" + gen_part
    return f"{x.a}{gen_part}"


_TERM = re.compile(r"([+-]?)(\d*)(\*?)([A-Za-zτ]?)")


def parse_quadint(text: str, order: OrderKind) -> QuadInt:
    """Parse ``a``, ``a+bt``, ``a-b*i``, ``t``, ``-2i`` ... into an element.

    Whitespace is rejected, as is a generator symbol foreign to ``order``.
    """
    if not text or any(ch.isspace() for ch in text):
        raise QuadIntParseError(f"malformed element {text!r}")
    a = b = 0
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise QuadIntParseError(f"malformed element {text!r}")
        sign, digits, star, sym = m.groups()
        if not first and not sign:
            raise QuadIntParseError(f"malformed element {text!r}")
        if not digits and not sym:
            raise QuadIntParseError(f"malformed element {text!r}")
        if star and not (digits and sym):
            raise QuadIntParseError(f"malformed element {text!r}")
        coef = int(digits) if digits else 1
        if sign == "-":
            coef = -coef
        if sym:
            sym = "t" if sym == "τ" else sym
            if not order.is_imaginary or sym != order.symbol:
                raise QuadIntParseError(
                    f"generator {sym!r} does not belong to the {order.label} order")
            b += coef
        else:
            a += coef
        pos = m.end()
        first = False
    return QuadInt(a, b, order)
