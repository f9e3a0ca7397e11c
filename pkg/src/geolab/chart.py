"""Boundary combinatorics of the two Schottky configurations.

Each surface fixes a counterclockwise circular arrangement of the four arcs
D(a), D(A), D(b), D(B) on the boundary circle. The anchor point sits just
before D(a), so walking counterclockwise from it gives the alphabet
``alphabet_order(kind, a)``. Infinite reduced words are ordered by their first
difference: position 0 in that anchored alphabet, position k > 0 in the
alphabet starting at the inverse of letter k-1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import SharedEndpointError
from .words import Letter, _as_text, inverse_text, is_reduced


class SurfaceKind(str, enum.Enum):
    pants = "pants"
    torus = "torus"

    @classmethod
    def parse(cls, value) -> "SurfaceKind":
        if isinstance(value, SurfaceKind):
            return value
        v = str(value).strip().lower()
        if v in ("punctured_torus", "punctured-torus"):
            v = "torus"
        try:
            return cls(v)
        except ValueError:
            raise ValueError(f"unknown surface {value!r}; expected 'pants' or 'torus'") from None

    @property
    def arrangement(self) -> str:
        return ARRANGEMENTS[self]

    def __str__(self) -> str:
        return self.value


# counterclockwise order of the arcs D(e), starting at D(a)
ARRANGEMENTS = {
    SurfaceKind.pants: "aBbA",
    SurfaceKind.torus: "aBAb",
}


@dataclass(frozen=True)
class AlphabetOrder:
    first: Letter
    sequence: tuple[Letter, ...]

    def rank(self, e: Letter) -> int:
        return self.sequence.index(e)

    @property
    def text(self) -> str:
        return "".join(e.char for e in self.sequence)


def alphabet_order(kind, e) -> AlphabetOrder:
    kind = SurfaceKind.parse(kind)
    e = Letter.from_char(e) if isinstance(e, str) else Letter(e)
    arr = kind.arrangement
    k = arr.index(e.char)
    rot = arr[k:] + arr[:k]
    return AlphabetOrder(e, tuple(Letter.from_char(c) for c in rot))


@lru_cache(maxsize=None)
def rank_tables(kind) -> tuple[np.ndarray, np.ndarray]:
    """Integer tables for the kernels.

    ``first[x]`` is the rank of letter code x in the anchored alphabet;
    ``after[p, x]`` is the rank of x in the alphabet starting at inverse(p).
    """
    kind = SurfaceKind.parse(kind)
    first = np.array([alphabet_order(kind, Letter.a).rank(Letter(x)) for x in range(4)], dtype=np.int64)
    after = np.zeros((4, 4), dtype=np.int64)
    for p in range(4):
        order = alphabet_order(kind, Letter(p ^ 1))
        for x in range(4):
            after[p, x] = order.rank(Letter(x))
    first.setflags(write=False)
    after.setflags(write=False)
    return first, after


class PeriodicWord:
    """The infinite word period.period.period..."""

    __slots__ = ("period",)

    def __init__(self, period):
        s = _as_text(period)
        if not s:
            raise ValueError("empty period")
        if not is_reduced(s) or s[-1] == inverse_text(s[0]):
            raise ValueError(f"{s!r} does not generate a reduced infinite word")
        object.__setattr__(self, "period", s)

    def __setattr__(self, name, value):
        raise AttributeError("PeriodicWord is immutable")

    def __getitem__(self, k: int) -> str:
        return self.period[k % len(self.period)]

    def __len__(self) -> int:
        return len(self.period)

    def __repr__(self) -> str:
        return f"PeriodicWord({self.period!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PeriodicWord) and _first_difference(self, other)[0] == 0

    def __hash__(self) -> int:
        # equal infinite words have the same primitive root
        s = self.period
        p = len(s)
        for q in range(1, p + 1):
            if p % q == 0 and s[:q] * (p // q) == s:
                return hash(s[:q])
        return hash(s)  # pragma: no cover

    def prefix(self, n: int) -> str:
        s = self.period
        return (s * (n // len(s) + 1))[:n]

    def inverse_ray(self) -> "PeriodicWord":
        return PeriodicWord(inverse_text(self.period))


def _first_difference(u: PeriodicWord, v: PeriodicWord) -> tuple[int, int]:
    # two periodic words of periods p, q agreeing on p + q letters coincide
    n = len(u) + len(v)
    for k in range(n):
        if u[k] != v[k]:
            return 1, k
    return 0, n


def compare(kind, u: PeriodicWord, v: PeriodicWord) -> int:
    """-1, 0 or 1 as u precedes, equals or follows v counterclockwise from the anchor."""
    kind = SurfaceKind.parse(kind)
    differ, k = _first_difference(u, v)
    if not differ:
        return 0
    if k == 0:
        order = alphabet_order(kind, Letter.a)
    else:
        order = alphabet_order(kind, Letter.from_char(u[k - 1]).inverse)
    ru = order.rank(Letter.from_char(u[k]))
    rv = order.rank(Letter.from_char(v[k]))
    return -1 if ru < rv else 1


def common_prefix(u: PeriodicWord, v: PeriodicWord) -> int:
    return _first_difference(u, v)[1]


def linked(kind, g1: tuple[PeriodicWord, PeriodicWord], g2: tuple[PeriodicWord, PeriodicWord]) -> bool:
    """Whether the geodesics with endpoints g1 = (minus, plus) and g2 cross.

    True iff exactly one endpoint of g2 lies strictly between the endpoints of g1.
    """
    kind = SurfaceKind.parse(kind)
    ends = [g1[0], g1[1], g2[0], g2[1]]
    for x in range(4):
        for y in range(x + 1, 4):
            if compare(kind, ends[x], ends[y]) == 0:
                raise SharedEndpointError(f"endpoints {ends[x]!r} and {ends[y]!r} coincide")
    lo, hi = (g1[0], g1[1]) if compare(kind, g1[0], g1[1]) < 0 else (g1[1], g1[0])

    def inside(z):
        return compare(kind, lo, z) < 0 < compare(kind, hi, z)

    return inside(g2[0]) != inside(g2[1])
