"""
Permutations in one-line notation.

Positions and values are 1-indexed, so ``Permutation((2, 5, 1, 4, 3))[0] == 2``
is the letter at position 1.  Permutations of size at most 9 serialize as a
digit word, larger ones as a comma-separated list.

>>> p = parse_permutation("25143")
>>> p
Permutation(2,5,1,4,3)
>>> str(apply_symmetry(p, "rc"))
'32514'
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Raised for malformed permutation or pattern text."""


class Permutation(tuple):
    """An immutable bijection of ``{1, ..., n}`` stored as its one-line word."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        n = len(self)
        if sorted(self) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {tuple(self)}")
        return self

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> Permutation:
        # skips validation; callers guarantee a bijection of 1..n
        return super().__new__(cls, entries)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for pos, val in enumerate(self, start=1):
            inv[val - 1] = pos
        return Permutation._trusted(inv)

    def __str__(self) -> str:
        return serialize_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({','.join(map(str, self))})"


def serialize_permutation(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if not text:
        return Permutation()
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = list(text)
    values = []
    for tok in tokens:
        if not tok:
            raise ParseError(f"empty token in {text!r}")
        if not tok.isdigit():
            raise ParseError(f"bad token {tok!r} in {text!r}")
        values.append(int(tok))
    n = len(values)
    seen = set()
    for tok, v in zip(tokens, values):
        if v < 1 or v > n:
            raise ParseError(f"value {tok!r} out of range 1..{n}")
        if v in seen:
            raise ParseError(f"duplicate value {tok!r}")
        seen.add(v)
    return Permutation._trusted(values)


def reduce(word: Sequence[int]) -> Permutation:
    """Order-isomorphic relabeling of distinct integers onto ``1..len(word)``."""
    ranks = {v: r for r, v in enumerate(sorted(word), start=1)}
    if len(ranks) != len(word):
        raise ValueError(f"entries are not distinct: {tuple(word)}")
    return Permutation._trusted(ranks[v] for v in word)


def _inverse(p: Permutation) -> Permutation:
    return p.inverse()


def _reverse(p: Permutation) -> Permutation:
    return Permutation._trusted(reversed(p))


def _complement(p: Permutation) -> Permutation:
    m = len(p) + 1
    return Permutation._trusted(m - v for v in p)


_MAPS = {"i": _inverse, "r": _reverse, "c": _complement}


def apply_symmetry(p: Permutation, word: str) -> Permutation:
    """Apply inverse/reverse/complement letters of ``word``, left to right."""
    for ch in word:
        try:
            p = _MAPS[ch](p)
        except KeyError:
            raise ValueError(f"unknown symmetry {ch!r}; expected one of i, r, c") from None
    return p


def permutations_of(n: int, first: int | None = None) -> Iterator[Permutation]:
    """
    All permutations of size ``n`` in lexicographic order.

    With ``first`` given, only the (contiguous) block starting with that
    letter is produced, which is how callers shard the stream.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if first is None:
        for t in itertools.permutations(range(1, n + 1)):
            yield Permutation._trusted(t)
        return
    if not 1 <= first <= n:
        raise ValueError(f"first entry {first} out of range 1..{n}")
    rest = [v for v in range(1, n + 1) if v != first]
    for t in itertools.permutations(rest):
        yield Permutation._trusted((first, *t))
