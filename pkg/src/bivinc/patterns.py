"""
Bi-vincular patterns ``(sigma, X, Y)`` and their occurrences.

``X`` constrains positions and ``Y`` constrains values.  With boundary
indices ``i_0 = j_0 = 0`` and ``i_{k+1} = j_{k+1} = n + 1``, an element ``x``
of ``X`` forces ``i_{x+1} = i_x + 1`` and an element ``y`` of ``Y`` forces
``j_{y+1} = j_y + 1``, where ``j_1 < ... < j_k`` are the matched letters in
increasing order.  So ``0 in X`` pins the first letter to position 1,
``k in X`` pins the last letter to position ``n``, ``0 in Y`` requires the
letter 1 and ``k in Y`` requires the letter ``n``.

Text form is ``<sigma>|X=<ints>|Y=<ints>``, e.g. ``132|X=0,1|Y=2``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

from bivinc.perms import ParseError, Permutation, apply_symmetry, parse_permutation

MAX_ENUMERATED_LENGTH = 4

# The 8 elements of the symmetry group, as words over {i, r, c}.
GROUP_WORDS = ("", "r", "c", "rc", "i", "ir", "ic", "irc")


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def _elements(mask: int) -> tuple[int, ...]:
    return tuple(e for e in range(mask.bit_length()) if mask >> e & 1)


def _reflect(mask: int, k: int) -> int:
    # {k - s : s in S}
    return _mask(k - e for e in _elements(mask))


@dataclass(frozen=True)
class BiVincularPattern:
    sigma: Permutation
    xmask: int = 0
    ymask: int = 0

    def __post_init__(self):
        if not isinstance(self.sigma, Permutation):
            object.__setattr__(self, "sigma", Permutation(self.sigma))
        k = len(self.sigma)
        if k < 1:
            raise ValueError("pattern length must be at least 1")
        limit = 1 << (k + 1)
        if not (0 <= self.xmask < limit and 0 <= self.ymask < limit):
            raise ValueError(f"X and Y must be subsets of 0..{k}")

    @classmethod
    def of(cls, sigma, X: Iterable[int] = (), Y: Iterable[int] = ()) -> BiVincularPattern:
        if isinstance(sigma, str):
            sigma = parse_permutation(sigma)
        X, Y = list(X), list(Y)
        k = len(sigma)
        for e in (*X, *Y):
            if not 0 <= e <= k:
                raise ValueError(f"set element {e} outside 0..{k}")
        return cls(Permutation(sigma), _mask(X), _mask(Y))

    @property
    def k(self) -> int:
        return len(self.sigma)

    @property
    def X(self) -> frozenset[int]:
        return frozenset(_elements(self.xmask))

    @property
    def Y(self) -> frozenset[int]:
        return frozenset(_elements(self.ymask))

    def __str__(self) -> str:
        xs = ",".join(map(str, _elements(self.xmask)))
        ys = ",".join(map(str, _elements(self.ymask)))
        return f"{''.join(map(str, self.sigma))}|X={xs}|Y={ys}"

    def __repr__(self) -> str:
        return f"BiVincularPattern({str(self)!r})"


def parse_pattern(text: str) -> BiVincularPattern:
    parts = text.strip().split("|")
    if len(parts) != 3 or not parts[1].startswith("X=") or not parts[2].startswith("Y="):
        raise ParseError(f"expected '<sigma>|X=<ints>|Y=<ints>', got {text!r}")
    word = parts[0].strip()
    if not word or not word.isdigit():
        raise ParseError(f"malformed sigma {word!r}")
    sigma = parse_permutation(word)
    k = len(sigma)
    sets = []
    for label, body in (("X", parts[1][2:]), ("Y", parts[2][2:])):
        elems: list[int] = []
        if body.strip():
            for tok in body.split(","):
                tok = tok.strip()
                if not tok.isdigit():
                    raise ParseError(f"bad {label} element {tok!r} in {text!r}")
                e = int(tok)
                if e > k:
                    raise ParseError(f"{label} element {e} outside 0..{k}")
                if e in elems:
                    raise ParseError(f"duplicate {label} element {e}")
                elems.append(e)
        sets.append(elems)
    return BiVincularPattern.of(sigma, sets[0], sets[1])


def enumerate_patterns(k: int) -> list[BiVincularPattern]:
    """All ``4**(k+1) * k!`` patterns of length ``k``, sigma-major order."""
    if not 1 <= k <= MAX_ENUMERATED_LENGTH:
        raise ValueError(f"k must be in 1..{MAX_ENUMERATED_LENGTH}, got {k}")
    masks = range(1 << (k + 1))
    return [
        BiVincularPattern(Permutation._trusted(s), x, y)
        for s in itertools.permutations(range(1, k + 1))
        for x in masks
        for y in masks
    ]


def _search(pi, p: BiVincularPattern, first_only: bool) -> int:
    n, k = len(pi), p.k
    if n < k:
        return 0
    sigma, xmask, ymask = p.sigma, p.xmask, p.ymask
    # slot holding the letter of rank r (0-based)
    slot_of_rank = [0] * k
    for slot, s in enumerate(sigma):
        slot_of_rank[s - 1] = slot
    idx = [0] * k
    found = 0

    def y_ok() -> bool:
        letters = [pi[idx[slot_of_rank[r]]] for r in range(k)]
        if ymask & 1 and letters[0] != 1:
            return False
        if ymask >> k & 1 and letters[-1] != n:
            return False
        for y in range(1, k):
            if ymask >> y & 1 and letters[y] != letters[y - 1] + 1:
                return False
        return True

    def place(m: int) -> bool:
        nonlocal found
        if m == 0:
            candidates = range(1) if xmask & 1 else range(n - k + 1)
        elif xmask >> m & 1:
            candidates = range(idx[m - 1] + 1, idx[m - 1] + 2)
        else:
            candidates = range(idx[m - 1] + 1, n - k + m + 1)
        last = m == k - 1
        for pos in candidates:
            if last and xmask >> k & 1 and pos != n - 1:
                continue
            v = pi[pos]
            s = sigma[m]
            if any((pi[idx[t]] < v) != (sigma[t] < s) for t in range(m)):
                continue
            idx[m] = pos
            if last:
                if y_ok():
                    found += 1
                    if first_only:
                        return True
            elif place(m + 1):
                return True
        return False

    place(0)
    return found


def count_occurrences(pi, p: BiVincularPattern) -> int:
    """Number of occurrences of ``p`` in ``pi`` (backtracking search)."""
    return _search(pi, p, first_only=False)


def contains(pi, p: BiVincularPattern) -> bool:
    return _search(pi, p, first_only=True) > 0


def occurrences(pi, p: BiVincularPattern) -> list[tuple[int, ...]]:
    """1-based index tuples of every occurrence, by scanning all index sets."""
    return [
        tuple(c + 1 for c in combo)
        for combo in itertools.combinations(range(len(pi)), p.k)
        if _matches_at(pi, p, combo, [pi[c] for c in combo])
    ]


def _matches_at(pi, p: BiVincularPattern, combo, letters) -> bool:
    n, k = len(pi), p.k
    order = sorted(range(k), key=letters.__getitem__)
    if any(p.sigma[order[r]] != r + 1 for r in range(k)):
        return False
    ext_i = (-1, *combo, n)
    for x in _elements(p.xmask):
        if ext_i[x + 1] != ext_i[x] + 1:
            return False
    ext_j = (0, *sorted(letters), n + 1)
    for y in _elements(p.ymask):
        if ext_j[y + 1] != ext_j[y] + 1:
            return False
    return True


def pattern_symmetry(p: BiVincularPattern, word: str) -> BiVincularPattern:
    """Apply symmetry letters left to right: ``p^{ab} = (p^a)^b``."""
    sigma, x, y, k = p.sigma, p.xmask, p.ymask, p.k
    for ch in word:
        if ch == "i":
            x, y = y, x
        elif ch == "r":
            x = _reflect(x, k)
        elif ch == "c":
            y = _reflect(y, k)
        else:
            raise ValueError(f"unknown symmetry {ch!r}; expected one of i, r, c")
        sigma = apply_symmetry(sigma, ch)
    return BiVincularPattern(sigma, x, y)


def symmetry_class(p: BiVincularPattern) -> frozenset[BiVincularPattern]:
    return frozenset(pattern_symmetry(p, w) for w in GROUP_WORDS)


def canonical_representative(cls: Iterable[BiVincularPattern]) -> BiVincularPattern:
    """Member with the lexicographically least serialization."""
    return min(cls, key=str)
