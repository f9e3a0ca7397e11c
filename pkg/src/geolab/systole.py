"""Length censuses, combinatorial k-systoles and finite-range checks.

A census of length L lists every primitive class of combinatorial length L
once, as its canonical word, together with its self-intersection number. The
k-systole search walks the censuses in increasing length and stops at the first
length whose maximum reaches k, so no class shorter than s_k is ever skipped.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import intersection, kernels
from ._jit import set_workers
from .chart import SurfaceKind, rank_tables
from .errors import CapExceededError, SharedEndpointError
from .words import CyclicWord, decode, inverse_text

FAMILIES = {
    "pants_odd": SurfaceKind.pants,
    "torus_odd": SurfaceKind.torus,
    "torus_even": SurfaceKind.torus,
}


@dataclass(frozen=True)
class ClassRecord:
    word: str
    kind: SurfaceKind
    L: int
    i: int

    @property
    def bound(self) -> int:
        return intersection.upper_bound(self.kind, self.L)

    @property
    def saturates(self) -> bool:
        return self.i == self.bound


@dataclass(frozen=True)
class SystoleRecord:
    kind: SurfaceKind
    k: int
    s_k: int
    I_k: int
    witnesses: tuple[str, ...]
    basis: str = "lemma"

    @property
    def excess(self) -> int:
        return self.I_k - self.k


@dataclass
class Census:
    """Canonical words of one length with their self-intersection numbers."""

    kind: SurfaceKind
    L: int
    codes: np.ndarray
    counts: np.ndarray

    def __len__(self) -> int:
        return len(self.counts)

    def words(self) -> list[str]:
        return [decode(row) for row in self.codes]

    @property
    def max_i(self) -> int:
        return int(self.counts.max()) if len(self.counts) else -1

    def records(self) -> Iterator[ClassRecord]:
        for row, i in zip(self.codes, self.counts):
            yield ClassRecord(decode(row), self.kind, self.L, int(i))


_cache: dict[tuple[SurfaceKind, int], Census] = {}
_lock = threading.Lock()


def census(kind, L: int, workers: int | None = None) -> Census:
    kind = SurfaceKind.parse(kind)
    if L < 1:
        raise ValueError("length must be >= 1")
    key = (kind, L)
    with _lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    set_workers(workers)
    codes = kernels.canonical_words(L)
    first, after = rank_tables(kind)
    counts = kernels.batch_self_intersection(codes, first, after)
    if len(counts) and counts.min() < 0:
        bad = decode(codes[int(np.argmin(counts))])
        raise SharedEndpointError(f"degenerate lift configuration for {bad!r}")
    out = Census(kind, L, codes, counts)
    with _lock:
        _cache.setdefault(key, out)
    return _cache[key]


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def enumerate_classes(kind, L_max: int, workers: int | None = None, L_min: int = 1) -> Iterator[ClassRecord]:
    """Every primitive class with L_min <= L <= L_max, by length then word."""
    if L_max < 1:
        raise ValueError("L_max must be >= 1")
    for L in range(L_min, L_max + 1):
        yield from census(kind, L, workers).records()


def witness(kind, family: str, n: int) -> CyclicWord:
    kind = SurfaceKind.parse(kind)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    if FAMILIES[family] is not kind:
        raise ValueError(f"family {family} does not live on the {kind.value}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "pants_odd":
        return CyclicWord("a" + "aB" * n)
    if family == "torus_odd":
        return CyclicWord("a" * (n + 1) + "b" * (n + 2))
    return CyclicWord("a" * (n + 1) + "b" * (n + 1))


def bracket(k: int) -> int:
    """The n >= 1 with n^2 - n < k <= n^2 + n."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = max(1, math.isqrt(k))
    while n * n + n < k:
        n += 1
    while n > 1 and (n - 1) ** 2 + (n - 1) >= k:
        n -= 1
    return n


def length_cap(k: int) -> int:
    # 2 ceil(sqrt k) + 3
    return 2 * (math.isqrt(k - 1) + 1) + 3


def _basis(kind: SurfaceKind, k: int) -> str:
    n = bracket(k)
    if kind is SurfaceKind.pants and k <= n * n:
        return "EMPIRICAL"
    return "lemma"


def _record_at(c: Census, k: int) -> SystoleRecord:
    mask = c.counts >= k
    best = int(c.counts[mask].max())
    words = tuple(decode(row) for row in c.codes[c.counts == best])
    return SystoleRecord(c.kind, k, c.L, best, words, _basis(c.kind, k))


def systole(kind, k: int, workers: int | None = None) -> SystoleRecord:
    kind = SurfaceKind.parse(kind)
    if k < 1:
        raise ValueError("k must be >= 1")
    for L in range(1, length_cap(k) + 1):
        # a word of length L has at most L(L-1)/2 crossing pairs
        if intersection.pair_bound(L) < k:
            continue
        c = census(kind, L, workers)
        if c.max_i >= k:
            return _record_at(c, k)
    raise CapExceededError(f"no class with i >= {k} up to length {length_cap(k)}")  # pragma: no cover


def sequence(kind, k_max: int, workers: int | None = None) -> list[SystoleRecord]:
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return [systole(kind, k, workers) for k in range(1, k_max + 1)]


# ---------------------------------------------------------------- verification


@dataclass
class Claim:
    name: str
    scale: str
    passed: bool
    counterexample: str | None = None
    detail: str = ""


@dataclass
class Report:
    kind: SurfaceKind
    L_max: int
    k_max: int
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, name, scale, failures, detail="") -> None:
        failures = list(failures)
        self.claims.append(Claim(name, scale, not failures, failures[0] if failures else None, detail))

    def lines(self) -> list[str]:
        out = [f"verify {self.kind.value} L_max={self.L_max} k_max={self.k_max}"]
        for c in self.claims:
            tag = "PASS" if c.passed else "FAIL"
            extra = f" counterexample={c.counterexample}" if c.counterexample else ""
            out.append(f"  {tag} {c.name} [{c.scale}]{extra}")
        out.append(f"summary: {sum(c.passed for c in self.claims)}/{len(self.claims)} passed -> {'PASS' if self.passed else 'FAIL'}")
        return out

    def as_dict(self) -> dict:
        return {
            "surface": self.kind.value,
            "L_max": self.L_max,
            "k_max": self.k_max,
            "passed": self.passed,
            "claims": [
                {"name": c.name, "scale": c.scale, "passed": c.passed, "counterexample": c.counterexample}
                for c in self.claims
            ],
        }


def _selfint(kind, text: str) -> int:
    return intersection.self_intersection(kind, CyclicWord(text))


def _deck_images(w: CyclicWord, i: int, j: int, t_max: int = 2):
    """Pairs of lifts reached from (i, j) by h = p_k^-1 w^t p_x, x in {i, j}.

    h sends lift x to lift k; the other lift lands on lift m when
    p_m p_k^-1 w^t p_x p_y^-1 lies in <w>.
    """
    from .words import power_of, reduce_text

    s = w.text
    L = len(s)
    pre = [s[:r] for r in range(L)]
    for x, y in ((i, j), (j, i)):
        for t in range(-t_max, t_max + 1):
            wt = s * t if t >= 0 else inverse_text(s) * (-t)
            tail = reduce_text(wt + pre[x - 1] + inverse_text(pre[y - 1]))
            for k in range(1, L + 1):
                core = reduce_text(inverse_text(pre[k - 1]) + tail)
                for m in range(1, L + 1):
                    if m == k:
                        continue
                    if power_of(reduce_text(pre[m - 1] + core), s) is not None:
                        yield (min(k, m), max(k, m))


def _check_deck_invariance(kind, L_max: int):
    for L in range(2, L_max + 1):
        for text in census(kind, L).words():
            w = CyclicWord(text)
            pairs = intersection.linked_pairs_fast(kind, w)
            linked = set(pairs)
            classes = {p: intersection.pair_class(w, p) for p in pairs}
            for p in pairs:
                images = set(_deck_images(w, *p))
                for q in images:
                    # deck transformations preserve crossing, so images of linked pairs are linked
                    if q not in linked or classes[q] != classes[p]:
                        yield f"{text}:{p}->{q}"
                same = {q for q in pairs if classes[q] == classes[p]}
                if not same <= images:
                    yield f"{text}:{p} unreached {sorted(same - images)}"


def verify(kind, L_max: int = 10, k_max: int = 20, workers: int | None = None, deck_L_max: int = 6, oracle_L_max: int = 0) -> Report:
    """Run the finite-range checks for one surface and collect a report."""
    kind = SurfaceKind.parse(kind)
    if L_max < 2 or k_max < 1:
        raise ValueError("verify needs L_max >= 2 and k_max >= 1")
    rep = Report(kind, L_max, k_max)
    ub = intersection.upper_bound

    recs = list(enumerate_classes(kind, L_max, workers))
    rep.add(
        "bound: i <= upper_bound <= L(L-1)/2",
        f"L<={L_max}, {len(recs)} classes",
        (r.word for r in recs if not r.i <= ub(kind, r.L) <= intersection.pair_bound(r.L)),
    )

    def maxima():
        for L in range(1, L_max + 1):
            yield L, census(kind, L).max_i

    if kind is SurfaceKind.torus:
        fails = []
        for L in range(4, L_max + 1):
            n = (L - 3) // 2
            w = "a" * (L // 2) + "b" * (L // 2) if L % 2 == 0 else "a" * (n + 1) + "b" * (n + 2)
            if _selfint(kind, w) != ub(kind, L):
                fails.append(w)
        rep.add("sharpness: torus extremal words attain the bound", f"4<=L<={L_max}", fails)
    else:
        fails = []
        for L in range(3, L_max + 1, 2):
            w = witness(kind, "pants_odd", (L - 1) // 2).text
            if _selfint(kind, w) != ub(kind, L):
                fails.append(w)
        rep.add("sharpness: a(aB)^n attains the odd pants bound", f"odd 3<=L<={L_max}", fails)
    rep.add(
        "census maxima never exceed the bound",
        f"L<={L_max}",
        (f"L={L}:max={m}" for L, m in maxima() if m > ub(kind, L)),
    )

    fails = []
    n_max = max(1, (L_max - 1) // 2)
    for fam in [f for f, k in FAMILIES.items() if k is kind]:
        for n in range(1, n_max + 1):
            w = witness(kind, fam, n)
            want = n * n if fam == "torus_even" else n * n + n
            if len(w) <= L_max and _selfint(kind, w.text) != want:
                fails.append(w.text)
    rep.add("witness families: n^2+n (odd), n^2 (torus even)", f"L<={L_max}", fails)

    inv_L = min(L_max, 8)
    fails = []
    for r in enumerate_classes(kind, inv_L):
        s = r.word
        variants = [s[t:] + s[:t] for t in range(len(s))] + [inverse_text(s)]
        if any(_selfint(kind, v) != r.i for v in variants):
            fails.append(s)
    rep.add("invariance under rotation and inversion", f"L<={inv_L}", fails)

    fails = []
    for r in enumerate_classes(kind, min(L_max, 7)):
        w = CyclicWord(r.word)
        if intersection.self_intersection_by_classes(kind, w) != r.i:
            fails.append(r.word)
    rep.add("kernel count equals number of PairClass values", f"L<={min(L_max, 7)}", fails)

    deck_L = min(L_max, deck_L_max)
    rep.add("PairClass invariant under deck maps p_k^-1 w^t p_i, |t|<=2", f"L<={deck_L}", _check_deck_invariance(kind, deck_L))

    if oracle_L_max:
        from . import oracle

        cfg = oracle.standard_config(kind)
        oL = min(L_max, oracle_L_max)
        rep.add(
            "oracle equivalence",
            f"L<={oL}",
            (r.word for r in enumerate_classes(kind, oL) if oracle.numeric_self_intersection(cfg, CyclicWord(r.word)) != r.i),
        )

    _verify_systoles(rep, kind, k_max, workers)
    return rep


def _verify_systoles(rep: Report, kind: SurfaceKind, k_max: int, workers) -> None:
    ub = intersection.upper_bound
    seq = sequence(kind, k_max, workers)
    by_k = {r.k: r for r in seq}

    fails = []
    for n in range(1, 5):
        for k in range(n * n + 1, n * n + n + 1):
            if k > k_max:
                continue
            r = by_k[k]
            want = (2 * n + 1 if kind is SurfaceKind.pants else 2 * n + 3, n * n + n)
            if (r.s_k, r.I_k) != want:
                fails.append(f"k={k}:{(r.s_k, r.I_k)}")
        if kind is SurfaceKind.torus:
            for k in range(n * n - n + 1, n * n + 1):
                if k <= k_max and (by_k[k].s_k, by_k[k].I_k) != (2 * n + 2, n * n):
                    fails.append(f"k={k}:{(by_k[k].s_k, by_k[k].I_k)}")
    rep.add("systole table from the length lemmas", f"k<={k_max}", fails)

    exact_points = [n * n + n for n in range(1, 10) if n * n + n <= k_max]
    fails = [f"k={k}" for k in exact_points if by_k[k].I_k != k]
    # inside each window n^2 < k <= n^2+n the only exact point is the right end
    for r in seq:
        n = bracket(r.k)
        if n * n < r.k < n * n + n and r.I_k == r.k:
            fails.append(f"k={r.k}:extra exact point")
    rep.add("exactness I_k = k at k = n^2+n", f"k<={k_max}", fails)

    growth = [(n, by_k[n * n + 1].excess) for n in range(2, 10) if n * n + 1 <= k_max]
    fails = [f"k={n * n + 1}:{e}" for n, e in growth if e != n - 1]
    fails += [f"n={b[0]}" for a, b in zip(growth, growth[1:]) if b[1] <= a[1]]
    rep.add("growth: I_k - k = n-1 at k = n^2+1, strictly increasing", f"k<={k_max}", fails)

    fails = []
    for r in seq:
        n = bracket(r.k)
        if not r.k <= r.I_k <= n * n + n:
            fails.append(f"k={r.k}")
        elif r.I_k * (n * n - n + 1) > (n * n + n) * r.k:
            fails.append(f"k={r.k}:ratio")
    rep.add("ratio: k <= I_k <= n^2+n and I_k/k <= (n^2+n)/(n^2-n+1)", f"k<={k_max}", fails)

    fails = []
    for a, b in zip(seq, seq[1:]):
        if b.s_k < a.s_k:
            fails.append(f"k={b.k}:s decreases")
    for r in seq:
        if r.I_k > ub(kind, r.s_k):
            fails.append(f"k={r.k}:I above bound")
        for w in r.witnesses:
            if _selfint(kind, w) != r.I_k or len(w) != r.s_k:
                fails.append(w)
        for L in range(1, r.s_k):
            if census(kind, L).max_i >= r.k:
                fails.append(f"k={r.k}:shorter class at L={L}")
    rep.add("monotone and exhaustive systoles", f"k<={k_max}", fails)
