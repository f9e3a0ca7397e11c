"""Words in the free group F(a, b).

Letters are written ``a``, ``A`` (= a inverse), ``b``, ``B`` (= b inverse).
Internally the letters carry the codes 0, 1, 2, 3; inversion is ``code ^ 1``
and the code order a < A < b < B is the canonicalization order. That order has
no geometric meaning; the boundary orders live in :mod:`geolab.chart`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import IdentityWordError, WordParseError

CHARS = "aAbB"
_INV_TABLE = str.maketrans("aAbB", "AaBb")
_KEY_TABLE = str.maketrans("aAbB", "0123")


class Letter(enum.IntEnum):
    a = 0
    a_inv = 1
    b = 2
    b_inv = 3

    @property
    def inverse(self) -> "Letter":
        return Letter(self ^ 1)

    @property
    def char(self) -> str:
        return CHARS[self]

    @classmethod
    def from_char(cls, c: str) -> "Letter":
        try:
            return cls(CHARS.index(c))
        except ValueError:
            raise WordParseError(f"unknown letter {c!r}; expected one of a, A, b, B") from None


def _as_text(letters) -> str:
    if isinstance(letters, str):
        bad = set(letters) - set(CHARS)
        if bad:
            raise WordParseError(f"unknown letters {sorted(bad)} in {letters!r}")
        return letters
    if isinstance(letters, (Word, CyclicWord)):
        return letters.text
    out = []
    for x in letters:
        if isinstance(x, str):
            out.append(Letter.from_char(x).char)
        else:
            out.append(CHARS[int(x)])
    return "".join(out)


def inverse_text(s: str) -> str:
    return s[::-1].translate(_INV_TABLE)


def reduce_text(s: str) -> str:
    out: list[str] = []
    for c in s:
        if out and out[-1] == c.translate(_INV_TABLE):
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def sort_key(s: str) -> str:
    """Key realizing the a < A < b < B order on equal-length strings."""
    return s.translate(_KEY_TABLE)


def least_rotation(s: str) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    key = sort_key(s)
    n = len(key)
    doubled = key + key
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = doubled[j]
        i = f[j - k - 1]
        while i != -1 and sj != doubled[k + i + 1]:
            if sj < doubled[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != doubled[k + i + 1]:
            if sj < doubled[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def is_reduced(s: str) -> bool:
    return all(s[i + 1] != s[i].translate(_INV_TABLE) for i in range(len(s) - 1))


def is_cyclically_reduced(s: str) -> bool:
    return bool(s) and is_reduced(s) and s[-1] != s[0].translate(_INV_TABLE)


@dataclass(frozen=True, order=False)
class Word:
    """A freely reduced word (possibly empty)."""

    text: str = ""

    def __post_init__(self):
        _as_text(self.text)
        if not is_reduced(self.text):
            raise ValueError(f"{self.text!r} is not freely reduced")

    @classmethod
    def parse(cls, text: str) -> "Word":
        return free_reduce(text)

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text

    def __iter__(self):
        return (Letter.from_char(c) for c in self.text)

    def __mul__(self, other: "Word") -> "Word":
        return Word(reduce_text(self.text + _as_text(other)))

    def __pow__(self, m: int) -> "Word":
        if m < 0:
            return self.inverse() ** (-m)
        return Word(reduce_text(self.text * m))

    def inverse(self) -> "Word":
        return Word(inverse_text(self.text))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(self)

    def codes(self) -> np.ndarray:
        return encode(self.text)


class CyclicWord:
    """A nonempty cyclically reduced word, stored in its least rotation."""

    __slots__ = ("text",)

    def __init__(self, letters):
        s = _as_text(letters)
        if not s:
            raise IdentityWordError("the identity is not a closed-curve class")
        if not is_cyclically_reduced(s):
            raise ValueError(f"{s!r} is not cyclically reduced")
        k = least_rotation(s)
        object.__setattr__(self, "text", s[k:] + s[:k])

    def __setattr__(self, name, value):
        raise AttributeError("CyclicWord is immutable")

    @classmethod
    def parse(cls, text: str) -> "CyclicWord":
        """Parse a/A/b/B text, freely and cyclically reducing it."""
        return cyclic_reduce(free_reduce(text))

    def __len__(self) -> int:
        return len(self.text)

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicWord) and self.text == other.text

    def __hash__(self) -> int:
        return hash(("CyclicWord", self.text))

    def __repr__(self) -> str:
        return f"CyclicWord({self.text!r})"

    def __str__(self) -> str:
        return self.text

    def __pow__(self, m: int) -> "CyclicWord":
        if m < 1:
            raise ValueError("only positive powers of a cyclic word are cyclic words")
        return CyclicWord(self.text * m)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_char(c) for c in self.text)

    def codes(self) -> np.ndarray:
        return encode(self.text)

    def as_word(self) -> Word:
        return Word(self.text)


def encode(s: str) -> np.ndarray:
    return np.frombuffer(s.translate(_KEY_TABLE).encode("ascii"), dtype=np.uint8).astype(np.int8) - ord("0")


def decode(codes) -> str:
    return "".join(CHARS[int(c)] for c in codes)


def free_reduce(letters: Iterable | str) -> Word:
    return Word(reduce_text(_as_text(letters)))


def cyclic_reduce(w: Word | str) -> CyclicWord:
    s = reduce_text(_as_text(w))
    if not s:
        raise IdentityWordError("word reduces to the identity")
    i, j = 0, len(s) - 1
    while i < j and s[j] == s[i].translate(_INV_TABLE):
        i += 1
        j -= 1
    return CyclicWord(s[i : j + 1])


def conjugator(w: Word | str) -> tuple[Word, CyclicWord]:
    """Return (g, c) with w = g c g^-1 as group elements, c = cyclic_reduce(w) as written."""
    s = reduce_text(_as_text(w))
    if not s:
        raise IdentityWordError("word reduces to the identity")
    i, j = 0, len(s) - 1
    while i < j and s[j] == s[i].translate(_INV_TABLE):
        i += 1
        j -= 1
    core = s[i : j + 1]
    # the stored rotation core[k:] + core[:k] equals core[:k]^-1 . core . core[:k]
    k = least_rotation(core)
    return Word(reduce_text(s[:i] + core[:k])), CyclicWord(core)


def invert(w: CyclicWord) -> CyclicWord:
    return CyclicWord(inverse_text(w.text))


def smallest_period(s: str) -> int:
    n = len(s)
    for p in range(1, n + 1):
        if n % p == 0 and s[:p] * (n // p) == s:
            return p
    return n


def is_primitive(w: CyclicWord) -> bool:
    return smallest_period(w.text) == len(w.text)


def cyclic_shifts(w: CyclicWord) -> list[Word]:
    s = w.text
    return [Word(s[i:] + s[:i]) for i in range(len(s))]


def prefix(w: CyclicWord, i: int) -> Word:
    """p_i = e_1 ... e_{i-1}, for 1-based i."""
    if not 1 <= i <= len(w):
        raise IndexError(f"prefix index {i} outside 1..{len(w)}")
    return Word(w.text[: i - 1])


def canonical_text(s: str) -> str:
    inv = inverse_text(s)
    candidates = [s[k:] + s[:k] for k in range(len(s))]
    candidates += [inv[k:] + inv[:k] for k in range(len(inv))]
    return min(candidates, key=sort_key)


def canonical_class(w: CyclicWord) -> CyclicWord:
    return CyclicWord(canonical_text(w.text))


def parse_cyclic(text: str, *, strict: bool = False) -> CyclicWord:
    """Parse CLI/file text into a cyclic word.

    With ``strict`` the text must already be cyclically reduced.
    """
    text = text.strip()
    _as_text(text)
    if strict:
        return CyclicWord(text)
    return CyclicWord.parse(text)


def power_of(u: str, w: str) -> int | None:
    """Exponent m with u = w^m as reduced words, or None."""
    if not u:
        return 0
    n = len(w)
    if len(u) % n:
        return None
    m = len(u) // n
    if u == w * m:
        return m
    if u == inverse_text(w) * m:
        return -m
    return None
