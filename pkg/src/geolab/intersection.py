"""Lifts through the fundamental domain, crossing pairs and self-intersection.

For a primitive cyclic word w = e_1 ... e_L, lift i is the axis of the
rotation w_i = e_i ... e_L e_1 ... e_{i-1}; it equals p_i^-1 . axis(w) with
p_i = e_1 ... e_{i-1}. A crossing pair (i, j) is moved by p_i to
(axis(w), u . axis(w)) with u = p_i p_j^-1, so its class under deck
transformations is the double coset <w> u <w>, taken up to inversion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .chart import PeriodicWord, SurfaceKind, linked, rank_tables
from .errors import DegeneratePairError, NonPrimitiveError, SharedEndpointError
from .words import CyclicWord, Word, inverse_text, is_primitive, power_of, reduce_text, sort_key


@dataclass(frozen=True)
class Lift:
    index: int
    shift: Word
    plus: PeriodicWord
    minus: PeriodicWord

    @property
    def endpoints(self) -> tuple[PeriodicWord, PeriodicWord]:
        return (self.minus, self.plus)


@dataclass(frozen=True)
class LinkedPair:
    i: int
    j: int
    first: Lift
    second: Lift


@dataclass(frozen=True, order=True)
class PairClass:
    word: str

    def __str__(self) -> str:
        return self.word


def _require_primitive(w: CyclicWord) -> None:
    if not is_primitive(w):
        raise NonPrimitiveError(f"{w.text!r} is a proper power")


def lifts_cyc(w: CyclicWord) -> list[Lift]:
    _require_primitive(w)
    s = w.text
    out = []
    for i in range(len(s)):
        rot = s[i:] + s[:i]
        out.append(Lift(i + 1, Word(rot), PeriodicWord(rot), PeriodicWord(inverse_text(rot))))
    return out


def linked_pairs(kind, w: CyclicWord) -> list[LinkedPair]:
    """All crossing pairs (i < j) among the lifts of w, 1-based."""
    kind = SurfaceKind.parse(kind)
    lifts = lifts_cyc(w)
    out = []
    for x in range(len(lifts)):
        for y in range(x + 1, len(lifts)):
            if linked(kind, lifts[x].endpoints, lifts[y].endpoints):
                out.append(LinkedPair(x + 1, y + 1, lifts[x], lifts[y]))
    return out


def _power_text(w: str, m: int) -> str:
    return w * m if m >= 0 else inverse_text(w) * (-m)


def pair_word(w: CyclicWord, pair: tuple[int, int]) -> Word:
    """u = p_i . p_j^-1 before canonicalization."""
    i, j = pair
    L = len(w)
    if not (1 <= i <= L and 1 <= j <= L):
        raise IndexError(f"pair {pair} outside 1..{L}")
    s = w.text
    return Word(reduce_text(s[: i - 1] + inverse_text(s[: j - 1])))


def double_coset_minimum(w: str, u: str) -> str:
    """Least element of <w> u <w> together with its inverse coset.

    Minimum over the shortest elements, ties broken by the a < A < b < B order.
    In the Cayley tree the shortest elements join the period vertices of axis(w)
    and u . axis(w) nearest their bridge (or overlap, shorter than |w|), which
    lies on the path from 1 to u; so exponents up to |u|/|w| + 3 suffice.
    """
    L = len(w)
    T = len(u) // L + 3
    lefts = [_power_text(w, s) for s in range(-T, T + 1)]
    best_len = None
    best: set[str] = set()
    for left in lefts:
        lu = reduce_text(left + u)
        for right in lefts:
            x = reduce_text(lu + right)
            n = len(x)
            if best_len is None or n < best_len:
                best_len = n
                best = {x}
            elif n == best_len:
                best.add(x)
    candidates = best | {inverse_text(x) for x in best}
    return min(candidates, key=sort_key)


def pair_class(w: CyclicWord, pair: tuple[int, int]) -> PairClass:
    i, j = pair
    if not i < j:
        raise ValueError("pair must satisfy i < j")
    _require_primitive(w)
    u = pair_word(w, pair).text
    rep = double_coset_minimum(w.text, u)
    if power_of(rep, w.text) is not None:
        raise DegeneratePairError(f"pair {pair} of {w.text!r} lies in <w>")
    return PairClass(rep)


def self_intersection(kind, w: CyclicWord) -> int:
    """Exact self-intersection number of the class of w on the surface."""
    kind = SurfaceKind.parse(kind)
    _require_primitive(w)
    first, after = rank_tables(kind)
    n = kernels.self_intersection_codes(w.codes(), first, after)
    if n < 0:
        raise SharedEndpointError(f"degenerate lift configuration for {w.text!r}")
    return int(n)


def self_intersection_by_classes(kind, w: CyclicWord) -> int:
    """Same count, as the number of distinct PairClass values (slow reference path)."""
    return len({pair_class(w, (p.i, p.j)) for p in linked_pairs(kind, w)})


def upper_bound(kind, L: int) -> int:
    kind = SurfaceKind.parse(kind)
    if L < 1:
        raise ValueError("length must be >= 1")
    if kind is SurfaceKind.pants:
        return L * L // 4 if L % 2 == 0 else (L * L - 1) // 4
    if L % 2 == 0:
        return (L - 2) ** 2 // 4
    return (L - 1) * (L - 3) // 4


def pair_bound(L: int) -> int:
    return L * (L - 1) // 2


def segment_extents(kind, w: CyclicWord, pair: tuple[int, int]) -> tuple[int, int, bool]:
    """(backward, forward, same_orientation) extents of the tree segment shared by a pair.

    Extents are measured from the identity vertex along lift i.
    """
    kind = SurfaceKind.parse(kind)
    first, after = rank_tables(kind)
    sign, cp, rank, ok = kernels.endpoint_tables(w.codes(), first, after)
    i, j = pair[0] - 1, pair[1] - 1
    same = bool(cp[2 * i, 2 * j] > 0 or cp[2 * i + 1, 2 * j + 1] > 0)
    return int(kernels.backward_extent(cp, i, j)), int(kernels.forward_extent(cp, i, j)), same


def pair_orbit(kind, w: CyclicWord, pair: tuple[int, int]) -> list[tuple[int, int]]:
    """The crossing pairs among the lifts that are deck-equivalent to ``pair``.

    Obtained by sliding the identity vertex along the shared tree segment; each
    step moves lift i to lift i +- 1 and lift j to j +- 1 (same orientation) or
    j -+ 1 (opposite orientation). Returned as sorted 1-based pairs.
    """
    L = len(w)
    back, fwd, same = segment_extents(kind, w, pair)
    i, j = pair[0] - 1, pair[1] - 1
    dj = 1 if same else -1
    i0 = (i - back) % L
    j0 = (j - back * dj) % L
    out = []
    for step in range(back + fwd + 1):
        x = (i0 + step) % L + 1
        y = (j0 + step * dj) % L + 1
        out.append((min(x, y), max(x, y)))
    return sorted(out)


def linked_pairs_fast(kind, w: CyclicWord) -> list[tuple[int, int]]:
    kind = SurfaceKind.parse(kind)
    _require_primitive(w)
    first, after = rank_tables(kind)
    m, ok = kernels.linked_matrix(w.codes(), first, after)
    if not ok:
        raise SharedEndpointError(f"degenerate lift configuration for {w.text!r}")
    idx = np.argwhere(np.triu(m))
    return [(int(a) + 1, int(b) + 1) for a, b in idx]
