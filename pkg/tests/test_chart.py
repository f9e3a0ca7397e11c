import functools
import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cyclic_texts
from geolab.chart import PeriodicWord, SurfaceKind, alphabet_order, common_prefix, compare, linked, rank_tables
from geolab.errors import SharedEndpointError
from geolab.words import CyclicWord, inverse_text, is_primitive, reduce_text


@pytest.mark.parametrize(
    "kind, e, seq",
    [("torus", "a", "aBAb"), ("pants", "a", "aBbA"), ("torus", "A", "AbaB"), ("pants", "b", "bAaB")],
)
def test_alphabet_order(kind, e, seq):
    assert alphabet_order(kind, e).text == seq


def test_surface_parse():
    assert SurfaceKind.parse("punctured_torus") is SurfaceKind.torus
    assert SurfaceKind.parse("PANTS") is SurfaceKind.pants
    with pytest.raises(ValueError):
        SurfaceKind.parse("klein")


def test_rank_tables_match_orders():
    first, after = rank_tables("torus")
    assert list(first) == [0, 2, 3, 1]  # a, A, b, B ranks in aBAb
    # after a, compare in the alphabet starting at A: A b a B
    assert list(after[0]) == [2, 0, 1, 3]


def test_compare_examples():
    P = PeriodicWord
    assert compare("torus", P("a"), P("b")) == -1
    assert compare("torus", P("ab"), P("ab")) == 0
    assert compare("torus", P("ab"), P("aB")) == -1
    assert common_prefix(P("ab"), P("aB")) == 1
    # equal infinite words with different periods
    assert P("ab") == P("abab")
    assert hash(P("ab")) == hash(P("abab"))


def test_periodic_word_validation():
    with pytest.raises(ValueError):
        PeriodicWord("aA")
    with pytest.raises(ValueError):
        PeriodicWord("abA")


@st.composite
def periodic(draw, max_size=6):
    return PeriodicWord(draw(cyclic_texts(max_size=max_size)))


@given(periodic(), periodic(), periodic(), st.sampled_from(["pants", "torus"]))
@settings(max_examples=300)
def test_compare_total_order(u, v, w, kind):
    uv, vu = compare(kind, u, v), compare(kind, v, u)
    assert uv == -vu
    assert (uv == 0) == (u == v)
    if compare(kind, u, v) < 0 and compare(kind, v, w) < 0:
        assert compare(kind, u, w) < 0


def test_compare_transitive_on_sample():
    rng = random.Random(7)
    words = set()
    while len(words) < 40:
        s = "".join(rng.choice("aAbB") for _ in range(rng.randint(1, 6)))
        if reduce_text(s) == s and s[-1] != inverse_text(s[0]):
            words.add(s)
    for kind in ("pants", "torus"):
        ws = sorted(words)
        ps = [PeriodicWord(s) for s in ws]
        ordered = sorted(ps, key=functools.cmp_to_key(lambda x, y: compare(kind, x, y)))
        for x, y, z in itertools.combinations(ordered, 3):
            assert compare(kind, x, y) <= 0 and compare(kind, y, z) <= 0 and compare(kind, x, z) <= 0


def _lift(rot):
    return (PeriodicWord(inverse_text(rot)), PeriodicWord(rot))


def test_linked_examples():
    # lifts of ab on the torus do not cross
    assert not linked("torus", _lift("ab"), _lift("ba"))
    # some pair of lifts of aaB on the pants crosses
    rots = ["aaB", "aBa", "Baa"]
    assert any(linked("pants", _lift(x), _lift(y)) for x, y in itertools.combinations(rots, 2))


def test_linked_self_and_shared():
    g = _lift("aab")
    with pytest.raises(SharedEndpointError):
        linked("torus", g, (g[1], g[0]))
    with pytest.raises(SharedEndpointError):
        linked("torus", g, (g[0], PeriodicWord("b")))


@given(cyclic_texts(min_size=2, max_size=7), st.sampled_from(["pants", "torus"]))
def test_linked_symmetric(s, kind):
    w = CyclicWord(s)
    if not is_primitive(w):
        return
    t = w.text
    rots = [t[i:] + t[:i] for i in range(len(t))]
    for x, y in itertools.combinations(rots, 2):
        g1, g2 = _lift(x), _lift(y)
        r = linked(kind, g1, g2)
        assert r == linked(kind, g2, g1)
        assert r == linked(kind, (g1[1], g1[0]), g2)
