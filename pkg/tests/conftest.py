import itertools

import pytest
from hypothesis import strategies as st

from geolab.words import inverse_text, is_cyclically_reduced, reduce_text

ACCEPTANCE: list[str] = []


@pytest.fixture
def record():
    """Record one acceptance line; the lines are repeated in the terminal summary."""

    def _record(number: int, passed: bool, detail: str) -> None:
        line = f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'} - {detail}"
        print(line)
        ACCEPTANCE.append(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def brute_classes(L: int) -> set[str]:
    """Canonical representatives of primitive classes of length L, by brute force."""
    out = set()
    for t in itertools.product("aAbB", repeat=L):
        s = "".join(t)
        if not is_cyclically_reduced(s):
            continue
        if any(L % p == 0 and s[:p] * (L // p) == s for p in range(1, L)):
            continue
        inv = inverse_text(s)
        variants = [s[k:] + s[:k] for k in range(L)] + [inv[k:] + inv[:k] for k in range(L)]
        out.add(min(variants, key=lambda x: x.translate(str.maketrans("aAbB", "0123"))))
    return out


letters = st.sampled_from("aAbB")
raw_words = st.text(alphabet="aAbB", max_size=24)


@st.composite
def reduced_words(draw, min_size=0, max_size=16):
    return reduce_text(draw(st.text(alphabet="aAbB", min_size=min_size, max_size=max_size)))


@st.composite
def cyclic_texts(draw, min_size=1, max_size=10):
    n = draw(st.integers(min_size, max_size))
    s = draw(letters)
    while len(s) < n:
        banned = inverse_text(s[-1])
        s += draw(st.sampled_from([c for c in "aAbB" if c != banned]))
    while len(s) > 1 and s[-1] == inverse_text(s[0]):
        s = s[:-1]
    return s
