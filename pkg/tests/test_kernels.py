import json
import os
import subprocess
import sys

import numpy as np
import pytest

from conftest import brute_classes
from geolab import kernels
from geolab.chart import PeriodicWord, compare, rank_tables
from geolab.words import decode, encode, reduce_text

CLASS_COUNTS = {1: 2, 2: 2, 3: 4, 4: 9, 5: 24, 6: 58, 7: 156, 8: 405}


@pytest.mark.parametrize("L", range(1, 9))
def test_canonical_words_match_brute_force(L):
    got = [decode(r) for r in kernels.canonical_words(L)]
    assert len(got) == CLASS_COUNTS[L]
    assert set(got) == brute_classes(L)
    keys = [w.translate(str.maketrans("aAbB", "0123")) for w in got]
    assert keys == sorted(keys)


@pytest.mark.parametrize("kind", ["pants", "torus"])
def test_compare_periodic_matches_chart(kind):
    first, after = rank_tables(kind)
    words = [decode(r) for L in range(1, 5) for r in kernels.canonical_words(L)]
    words += [w[1:] + w[:1] for w in words]
    for u in words:
        for v in words:
            s, _ = kernels.compare_periodic(encode(u), encode(v), first, after)
            assert s == compare(kind, PeriodicWord(u), PeriodicWord(v))


def test_lift_endpoints_layout():
    E = kernels.lift_endpoints(encode("aaB"))
    assert decode(E[0]) == "aaB"
    assert decode(E[1]) == "bAA"  # inverse of rotation 0
    assert decode(E[2]) == "aBa"
    assert decode(E[3]) == "AbA"


def test_nonprimitive_flagged():
    first, after = rank_tables("torus")
    assert kernels.self_intersection_codes(encode("abab"), first, after) == -1
    _, _, _, ok = kernels.endpoint_tables(encode("abab"), first, after)
    assert not ok


def test_free_reduce_codes():
    for s in ["aAb", "abBA", "aaB", "AaBbab"]:
        assert decode(kernels.free_reduce_codes(encode(s))) == reduce_text(s)


def test_batch_matches_single():
    first, after = rank_tables("pants")
    codes = kernels.canonical_words(6)
    batch = kernels.batch_self_intersection(codes, first, after)
    single = np.array([kernels.self_intersection_codes(r, first, after) for r in codes])
    assert np.array_equal(batch, single)


_CHILD = """
import json
from geolab import kernels
from geolab._jit import backend
from geolab.chart import rank_tables
out = {"backend": backend()}
for kind in ("pants", "torus"):
    first, after = rank_tables(kind)
    for L in range(1, 8):
        codes = kernels.canonical_words(L)
        out[f"{kind}{L}"] = [codes.tolist(), kernels.batch_self_intersection(codes, first, after).tolist()]
print(json.dumps(out))
"""


def _run(flag):
    env = dict(os.environ, GEOLAB_NUMBA=flag)
    res = subprocess.run([sys.executable, "-c", _CHILD], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def test_fallback_agrees_with_numba():
    fast, slow = _run("1"), _run("0")
    assert fast.pop("backend") == "numba"
    assert slow.pop("backend") == "python"
    assert fast == slow
