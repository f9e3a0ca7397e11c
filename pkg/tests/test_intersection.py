import itertools

import pytest
from hypothesis import given

from conftest import cyclic_texts
from geolab import kernels
from geolab.errors import NonPrimitiveError
from geolab.intersection import (
    PairClass,
    double_coset_minimum,
    lifts_cyc,
    linked_pairs,
    linked_pairs_fast,
    pair_bound,
    pair_class,
    pair_orbit,
    pair_word,
    self_intersection,
    self_intersection_by_classes,
    upper_bound,
)
from geolab.words import CyclicWord, decode, inverse_text, invert, is_primitive, power_of, reduce_text

# values stated for the extremal families
KNOWN = [
    ("pants", "aaB", 2),
    ("pants", "aaBaB", 6),
    ("pants", "aaBaBaB", 12),
    ("pants", "aB", 1),
    ("pants", "ab", 0),
    ("pants", "a", 0),
    ("torus", "ab", 0),
    ("torus", "aabb", 1),
    ("torus", "aabbb", 2),
    ("torus", "aaabbb", 4),
    ("torus", "aaabbbb", 6),
]


@pytest.mark.parametrize("kind, word, i", KNOWN)
def test_known_values(kind, word, i):
    w = CyclicWord(word)
    assert self_intersection(kind, w) == i
    assert self_intersection_by_classes(kind, w) == i


def test_lifts():
    lifts = lifts_cyc(CyclicWord("aaB"))
    assert [l.plus.period for l in lifts] == ["aaB", "aBa", "Baa"]
    assert [l.minus.period for l in lifts] == ["bAA", "AbA", "AAb"]
    assert len(lifts_cyc(CyclicWord("a"))) == 1
    with pytest.raises(NonPrimitiveError):
        lifts_cyc(CyclicWord("abab"))
    with pytest.raises(NonPrimitiveError):
        self_intersection("torus", CyclicWord("abab"))


def test_linked_pairs_examples():
    assert linked_pairs("torus", CyclicWord("ab")) == []
    assert linked_pairs("pants", CyclicWord("a")) == []
    assert len(linked_pairs("torus", CyclicWord("aabb"))) >= 1
    assert [(p.i, p.j) for p in linked_pairs("pants", CyclicWord("aaB"))] == [(1, 2), (1, 3), (2, 3)]


def test_pair_word_and_class():
    w = CyclicWord("aaB")
    assert pair_word(w, (1, 2)).text == "A"
    assert pair_class(w, (1, 2)) == pair_class(w, (1, 2))
    classes = {pair_class(CyclicWord("aabb"), (p.i, p.j)) for p in linked_pairs("torus", CyclicWord("aabb"))}
    assert len(classes) == 1
    with pytest.raises(ValueError):
        pair_class(w, (2, 1))
    assert isinstance(pair_class(w, (1, 3)), PairClass)


def test_double_coset_minimum_is_coset_invariant():
    w = "aaB"
    for u in ["A", "b", "aB", "Ab"]:
        base = double_coset_minimum(w, u)
        for s, t in itertools.product(range(-2, 3), repeat=2):
            left = w * s if s >= 0 else inverse_text(w) * -s
            right = w * t if t >= 0 else inverse_text(w) * -t
            assert double_coset_minimum(w, reduce_text(left + u + right)) == base
        assert double_coset_minimum(w, inverse_text(u)) == base


@pytest.mark.parametrize(
    "kind, L, bound",
    [("pants", 5, 6), ("torus", 6, 4), ("torus", 3, 0), ("pants", 4, 4), ("torus", 1, 0), ("pants", 1, 0)],
)
def test_upper_bound(kind, L, bound):
    assert upper_bound(kind, L) == bound
    assert upper_bound(kind, L) <= pair_bound(L)


def test_upper_bound_rejects_zero():
    with pytest.raises(ValueError):
        upper_bound("pants", 0)


@pytest.mark.parametrize("kind", ["pants", "torus"])
@pytest.mark.parametrize("L", range(1, 8))
def test_three_routes_agree(kind, L):
    """Kernel count, PairClass count and slid orbits describe the same partition."""
    for row in kernels.canonical_words(L):
        w = CyclicWord(decode(row))
        slow = linked_pairs(kind, w)
        fast = linked_pairs_fast(kind, w)
        assert [(p.i, p.j) for p in slow] == fast
        classes = {}
        for p in fast:
            classes.setdefault(pair_class(w, p), set()).add(p)
        assert self_intersection(kind, w) == len(classes)
        for members in classes.values():
            for p in members:
                assert set(pair_orbit(kind, w, p)) == members


@given(cyclic_texts(max_size=9))
def test_invariant_under_rotation_and_inversion(s):
    w = CyclicWord(s)
    if not is_primitive(w):
        return
    for kind in ("pants", "torus"):
        i = self_intersection(kind, w)
        assert self_intersection(kind, invert(w)) == i
        for r in range(len(s)):
            assert self_intersection(kind, CyclicWord(s[r:] + s[:r])) == i
        assert i <= upper_bound(kind, len(w)) <= pair_bound(len(w))


def _image(w: str, pre, h: str, m: int):
    """Index of the lift h . lift_m, or None if it is not in the list."""
    L = len(w)
    for k in range(1, L + 1):
        # h p_m^-1 axis(w) = p_k^-1 axis(w)  iff  p_k h p_m^-1 in <w>
        if power_of(reduce_text(pre[k - 1] + h + inverse_text(pre[m - 1])), w) is not None:
            return k
    return None


@pytest.mark.parametrize("kind", ["pants", "torus"])
def test_pair_class_invariant_under_deck_maps(kind):
    """h = p_k^-1 w^t p_i moves lift i onto lift k; images of linked pairs keep their class."""
    checked = 0
    for L in range(2, 9):
        for row in kernels.canonical_words(L):
            w = CyclicWord(decode(row))
            s = w.text
            pre = [s[:r] for r in range(L)]
            pairs = linked_pairs_fast(kind, w)
            classes = {p: pair_class(w, p) for p in pairs}
            for (i, j) in pairs:
                for k in range(1, L + 1):
                    for t in range(-2, 3):
                        wt = s * t if t >= 0 else inverse_text(s) * -t
                        h = reduce_text(inverse_text(pre[k - 1]) + wt + pre[i - 1])
                        m = _image(s, pre, h, j)
                        if m is None:
                            continue
                        q = (min(k, m), max(k, m))
                        assert q in classes, (s, (i, j), q)
                        assert classes[q] == classes[(i, j)]
                        # and back again
                        hinv = inverse_text(h)
                        assert _image(s, pre, hinv, k) == i and _image(s, pre, hinv, m) == j
                        checked += 1
    assert checked > 1000
