"""Chern numbers of blown-up surfaces and logarithmic pairs.

A pair is described by the class of its minimal model, the number of
point blow-ups and the self-intersections of the boundary curves.  Boundary
curves are smooth elliptic, so adjunction gives ``K.D_i = -D_i^2`` and

    c1bar^2 = (K + D)^2 = K^2 - sum(D_i^2),    c2bar = c2(X)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class SurfaceKind(Enum):
    ABELIAN = "abelian"
    BIELLIPTIC = "bielliptic"
    K3 = "k3"
    ENRIQUES = "enriques"
    PROJECTIVE_PLANE = "p2"
    HIRZEBRUCH = "hirzebruch"
    RULED = "ruled"
    KODAIRA_ONE = "kodaira1"


# kodaira dimension; None stands for minus infinity
_KODAIRA = {
    SurfaceKind.ABELIAN: 0,
    SurfaceKind.BIELLIPTIC: 0,
    SurfaceKind.K3: 0,
    SurfaceKind.ENRIQUES: 0,
    SurfaceKind.PROJECTIVE_PLANE: None,
    SurfaceKind.HIRZEBRUCH: None,
    SurfaceKind.RULED: None,
    SurfaceKind.KODAIRA_ONE: 1,
}


@dataclass(frozen=True)
class SurfaceClass:
    """A minimal surface class with its Euler number and ``K^2``.

    ``param`` is the base genus for RULED and the degree ``d`` (with
    ``c2 = 12d``) for KODAIRA_ONE; it is ignored otherwise.
    """

    kind: SurfaceKind
    param: int = 0

    def __post_init__(self):
        if self.param < 0:
            raise ValueError("surface parameter must be non-negative")
        if self.kind not in (SurfaceKind.RULED, SurfaceKind.KODAIRA_ONE) and self.param:
            raise ValueError(f"{self.kind.value} takes no parameter")

    @property
    def c2(self) -> int:
        k = self.kind
        if k is SurfaceKind.K3:
            return 24
        if k is SurfaceKind.ENRIQUES:
            return 12
        if k is SurfaceKind.PROJECTIVE_PLANE:
            return 3
        if k is SurfaceKind.HIRZEBRUCH:
            return 4
        if k is SurfaceKind.RULED:
            return 4 - 4 * self.param
        if k is SurfaceKind.KODAIRA_ONE:
            return 12 * self.param
        return 0

    @property
    def k2(self) -> int:
        k = self.kind
        if k is SurfaceKind.PROJECTIVE_PLANE:
            return 9
        if k is SurfaceKind.HIRZEBRUCH:
            return 8
        if k is SurfaceKind.RULED:
            return 8 * (1 - self.param)
        return 0

    @property
    def kodaira_dimension(self) -> Optional[int]:
        return _KODAIRA[self.kind]

    def __str__(self) -> str:
        if self.kind in (SurfaceKind.RULED, SurfaceKind.KODAIRA_ONE):
            return f"{self.kind.value}:{self.param}"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> "SurfaceClass":
        """``abelian``, ``k3``, ``ruled:1``, ``kodaira1:0`` and so on."""
        name, _, param = text.strip().lower().partition(":")
        try:
            kind = SurfaceKind(name)
        except ValueError:
            raise ValueError(f"unknown surface class {text!r}") from None
        return cls(kind, int(param) if param else 0)


ABELIAN = SurfaceClass(SurfaceKind.ABELIAN)
BIELLIPTIC = SurfaceClass(SurfaceKind.BIELLIPTIC)
K3 = SurfaceClass(SurfaceKind.K3)
ENRIQUES = SurfaceClass(SurfaceKind.ENRIQUES)
PROJECTIVE_PLANE = SurfaceClass(SurfaceKind.PROJECTIVE_PLANE)
HIRZEBRUCH = SurfaceClass(SurfaceKind.HIRZEBRUCH)


@dataclass(frozen=True)
class LogPair:
    base: SurfaceClass
    blowups: int = 0
    boundary_selfints: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "boundary_selfints", tuple(self.boundary_selfints))
        if self.blowups < 0:
            raise ValueError("number of blow-ups must be non-negative")
        if any(d > -1 for d in self.boundary_selfints):
            raise ValueError("boundary curves must have self-intersection <= -1")


def blowup_c2(c2: int, k: int) -> int:
    """Euler number after ``k`` point blow-ups."""
    if k < 0:
        raise ValueError("number of blow-ups must be non-negative")
    return c2 + k


def blowup_k2(k2: int, k: int) -> int:
    if k < 0:
        raise ValueError("number of blow-ups must be non-negative")
    return k2 - k


def log_chern_numbers(pair: LogPair) -> tuple[int, int]:
    """Return ``(c1bar^2, c2bar)`` for a pair with elliptic boundary."""
    c2bar = blowup_c2(pair.base.c2, pair.blowups)
    k2 = blowup_k2(pair.base.k2, pair.blowups)
    return k2 - sum(pair.boundary_selfints), c2bar


def noether_filter(c1_sq: int, c2: int) -> bool:
    """Noether's formula makes ``c1^2 + c2`` divisible by 12."""
    return (c1_sq + c2) % 12 == 0


def bmy_equality(c1bar_sq: int, c2bar: int) -> bool:
    return 3 * c2bar == c1bar_sq
