"""
Ascent sequences and the constructive maps between permutation classes.

Ascent sequences of length n are equinumerous with the avoiders of
(231,{1},{1}), (132,{1},{1}) and, with no two adjacent entries equal, of
(321,{1},{1}) one size down.  The maps here realize those correspondences,
together with the smaller bijections behind several distribution and
recursion identities.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from bivinc.patterns import BiVincularPattern, contains, count_occurrences, occurrences, parse_pattern
from bivinc.perms import Permutation, reduce

MAX_ASCENT_LENGTH = 12

P231 = parse_pattern("231|X=1|Y=1")
P132 = parse_pattern("132|X=1|Y=1")
P321 = parse_pattern("321|X=1|Y=1")
SET_B_SOURCE = parse_pattern("132|X=0,1,2|Y=1")
C12_PATTERN = parse_pattern("123|X=1|Y=1,3")


# -- ascent sequences -----------------------------------------------------------


def generate_ascent_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All ascent sequences of length ``n`` in lexicographic order."""
    if not 1 <= n <= MAX_ASCENT_LENGTH:
        raise ValueError(f"n must be in 1..{MAX_ASCENT_LENGTH}, got {n}")

    def extend(x: list[int], asc: int) -> Iterator[tuple[int, ...]]:
        if len(x) == n:
            yield tuple(x)
            return
        for v in range(asc + 2):
            x.append(v)
            yield from extend(x, asc + (v > x[-2]))
            x.pop()

    yield from extend([0], 0)


def is_ascent_sequence(x: Sequence[int]) -> bool:
    if not x or x[0] != 0:
        return False
    asc = 0
    for prev, cur in zip(x, x[1:]):
        if not 0 <= cur <= asc + 1:
            return False
        asc += cur > prev
    return True


def _check_ascent(x: Sequence[int]) -> None:
    if not is_ascent_sequence(x):
        raise ValueError(f"not an ascent sequence: {tuple(x)}")


def ascent_positions(x: Sequence[int]) -> list[int]:
    """The 1-based positions i with x_i < x_{i+1}."""
    return [i for i in range(1, len(x)) if x[i - 1] < x[i]]


def modified_ascent_sequence(x: Sequence[int]) -> tuple[int, ...]:
    """
    The modified sequence x-hat: for each ascent position i, in increasing
    order, add one to every earlier entry x_j (j < i) with x_j >= x_{i+1}.

    >>> modified_ascent_sequence((0, 1, 0, 1, 3, 1, 1, 2))
    (0, 3, 0, 1, 4, 1, 1, 2)
    """
    _check_ascent(x)
    y = list(x)
    for i in ascent_positions(x):
        top = y[i]  # x_{i+1}; later entries are never bumped
        for j in range(i):
            if y[j] >= top:
                y[j] += 1
    return tuple(y)


def map_f(x: Sequence[int]) -> Permutation:
    """
    Ascent sequence to an avoider of (231,{1},{1}).

    Columns (x-hat_i, i) are sorted by top entry, ties broken by decreasing
    bottom entry; the bottom row is the permutation.
    """
    xh = modified_ascent_sequence(x)
    cols = sorted(((t, i) for i, t in enumerate(xh, start=1)), key=lambda c: (c[0], -c[1]))
    return Permutation._trusted(b for _, b in cols)


# -- active sites and insertion words ---------------------------------------------


def _insert(pi: Sequence[int], site: int, letter: int) -> tuple[int, ...]:
    return (*pi[:site], letter, *pi[site:])


def active_sites(pi: Sequence[int], p: BiVincularPattern) -> list[int]:
    """Insertion positions (0 = front) for n+1 that keep the permutation avoiding ``p``."""
    pi = tuple(pi)
    if contains(pi, p):
        raise ValueError(f"{Permutation(pi)} contains {p}")
    n = len(pi)
    return [s for s in range(n + 1) if not contains(_insert(pi, s, n + 1), p)]


def _site_order(sites: list[int], direction: str) -> list[int]:
    if direction == "ltr":
        return sites
    if direction == "rtl":
        return sites[::-1]
    raise ValueError(f"direction must be 'ltr' or 'rtl', got {direction!r}")


def insertion_word(pi: Sequence[int], p: BiVincularPattern, direction: str = "ltr") -> tuple[int, ...]:
    """
    Letter i is the index of the active site of pi^(i-1) into which i is
    inserted to give pi^(i), where pi^(i) is the reduction of pi restricted
    to letters at most i.  Sites are indexed from 0, left to right by
    default or right to left with ``direction="rtl"``.
    """
    pi = Permutation(pi)
    word = []
    prev: tuple[int, ...] = ()
    for i in range(1, pi.n + 1):
        cur = tuple(v for v in pi if v <= i)
        sites = _site_order(active_sites(prev, p), direction)
        pos = cur.index(i)
        if pos not in sites:
            raise ValueError(f"intermediate permutation {Permutation(cur)} contains {p}")
        word.append(sites.index(pos))
        prev = cur
    return tuple(word)


def decode_insertion_word(x: Sequence[int], p: BiVincularPattern, direction: str = "ltr") -> Permutation:
    """Rebuild the permutation whose insertion word against ``p`` is ``x``."""
    pi: tuple[int, ...] = ()
    for i, xi in enumerate(x, start=1):
        sites = _site_order(active_sites(pi, p), direction)
        if not 0 <= xi < len(sites):
            raise ValueError(f"letter {xi} at step {i} exceeds the {len(sites)} active sites")
        pi = _insert(pi, sites[xi], i)
    return Permutation._trusted(pi)


def map_g(pi: Sequence[int]) -> tuple[int, ...]:
    """Avoider of (132,{1},{1}) to its ascent sequence (sites counted from the right)."""
    return insertion_word(pi, P132, direction="rtl")


def map_g_inverse(x: Sequence[int]) -> Permutation:
    """Ascent sequence to the avoider of (132,{1},{1}) with that insertion word."""
    _check_ascent(x)
    return decode_insertion_word(x, P132, direction="rtl")


def map_h(x: Sequence[int]) -> Permutation:
    """
    Ascent sequence with no two adjacent entries equal to an avoider of
    (321,{1},{1}) of length n - 1.  Columns (x-hat_i, i - 1) for i >= 2 are
    sorted by top entry, ties broken by increasing bottom entry.
    """
    _check_ascent(x)
    if any(a == b for a, b in zip(x, x[1:])):
        raise ValueError(f"adjacent equal entries in {tuple(x)}")
    xh = modified_ascent_sequence(x)
    cols = sorted((xh[i], i) for i in range(1, len(xh)))
    return Permutation._trusted(b for _, b in cols)


# -- smaller bijections ---------------------------------------------------------


def reverse_after_one(pi: Sequence[int]) -> Permutation:
    """Reverse the suffix following the letter 1; an involution."""
    pi = Permutation(pi)
    if not pi:
        return pi
    t = pi.index(1)
    return Permutation._trusted((*pi[: t + 1], *reversed(pi[t + 1 :])))


def cyclic_shift_setB(pi: Sequence[int], source: BiVincularPattern = SET_B_SOURCE) -> Permutation:
    """
    Turn the unique occurrence of ``(sigma, X, {1})`` into one of
    ``(sigma, X, {3})`` by rotating the values above pi_1.

    With k the largest letter of the occurrence, values in (pi_1, k] move up
    by n - k and values above k wrap down to start just above pi_1.
    """
    pi = Permutation(pi)
    occ = occurrences(pi, source)
    if len(occ) != 1:
        raise ValueError(f"expected exactly one occurrence of {source}, found {len(occ)}")
    n, first = pi.n, pi[0]
    k = max(pi[i - 1] for i in occ[0])

    def shift(v: int) -> int:
        if first < v <= k:
            return v + n - k
        if v > k:
            return v + first - k
        return v

    return Permutation._trusted(shift(v) for v in pi)


def _qualifying_pairs(pi: Sequence[int], step: int) -> list[int]:
    # 0-based t with pi[t+1] == pi[t] + step and a smaller letter left of t
    out = []
    low = len(pi) + 1
    for t in range(len(pi) - 1):
        if pi[t + 1] == pi[t] + step and low < pi[t]:
            out.append(t)
        low = min(low, pi[t])
    return out


def in_wilf22_domain(pi: Sequence[int]) -> bool:
    return len(_qualifying_pairs(pi, 1)) == 1


def in_wilf22_codomain(pi: Sequence[int]) -> bool:
    return len(_qualifying_pairs(pi, -1)) == 1


def wilf22_map(pi: Sequence[int]) -> Permutation:
    """
    Map a permutation with a unique adjacent pair (v, v+1) preceded by a
    smaller letter to one with a unique such pair (v+1, v).

    With pi_k the first letter of the pair, pi_j is the leftmost letter
    smaller than pi_k; writing pi = a . pi_j . b the image is
    a^r . pi_j . b^r.  The map is injective into the stated codomain for
    n <= 5 only: see ``WILF22_COLLISION``.
    """
    pi = Permutation(pi)
    pairs = _qualifying_pairs(pi, 1)
    if len(pairs) != 1:
        raise ValueError(f"{pi} does not have exactly one qualifying (v, v+1) pair")
    k = pairs[0]
    j = next(j for j in range(k) if pi[j] < pi[k])
    return Permutation._trusted((*reversed(pi[:j]), pi[j], *reversed(pi[j + 1 :])))


def wilf22_inverse(pi: Sequence[int]) -> Permutation:
    """
    A preimage under ``wilf22_map``: the map reverses both sides of the
    pivot, so the pivot of a preimage sits left of the (v+1, v) pair and
    each candidate pivot position is tried in turn.
    """
    pi = Permutation(pi)
    pairs = _qualifying_pairs(pi, -1)
    if len(pairs) != 1:
        raise ValueError(f"{pi} does not have exactly one qualifying (v+1, v) pair")
    for j in range(pairs[0]):
        cand = Permutation._trusted((*reversed(pi[:j]), pi[j], *reversed(pi[j + 1 :])))
        if in_wilf22_domain(cand) and wilf22_map(cand) == pi:
            return cand
    raise ValueError(f"{pi} has no preimage under wilf22_map")


# (4,2,3,1,5,6) and (5,6,4,1,2,3) share the image (4,6,5,1,3,2)
WILF22_COLLISION = ((4, 2, 3, 1, 5, 6), (5, 6, 4, 1, 2, 3))


def column_swap_map(pi: Sequence[int]) -> Permutation:
    """Swap the letter n with its left neighbour."""
    pi = Permutation(pi)
    if not pi:
        raise ValueError("empty permutation")
    k = pi.index(pi.n)
    if k == 0:
        raise ValueError("the letter n is at position 1; there is no column to its left")
    w = list(pi)
    w[k - 1], w[k] = w[k], w[k - 1]
    return Permutation._trusted(w)


__all__ = [
    "P132",
    "P231",
    "P321",
    "SET_B_SOURCE",
    "active_sites",
    "column_swap_map",
    "count_occurrences",
    "cyclic_shift_setB",
    "decode_insertion_word",
    "generate_ascent_sequences",
    "insertion_word",
    "is_ascent_sequence",
    "map_f",
    "map_g",
    "map_g_inverse",
    "map_h",
    "modified_ascent_sequence",
    "reduce",
    "reverse_after_one",
    "wilf22_inverse",
    "wilf22_map",
]
