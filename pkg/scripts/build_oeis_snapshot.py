"""Regenerate src/bivinc/data/oeis_snapshot.json from exact evaluators.

Every sequence is computed locally (closed forms, recurrences or transfer
counts), then truncated to its first 12 terms starting at the OEIS offset.
Run from the repository root:  python3 scripts/build_oeis_snapshot.py
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import factorial
from pathlib import Path

from bivinc import closed_forms as cf
from bivinc.bijections import generate_ascent_sequences

TERMS = 12
OUT = Path(__file__).resolve().parents[1] / "src" / "bivinc" / "data" / "oeis_snapshot.json"


def fishburn(n: int) -> int:
    return 1 if n == 0 else sum(1 for _ in generate_ascent_sequences(n))


def no_flat_ascent(n: int) -> int:
    if n == 0:
        return 1
    return sum(
        1 for x in generate_ascent_sequences(n) if all(a != b for a, b in zip(x, x[1:]))
    )


def consecutive_132_avoiders(n: int) -> int:
    # transfer over (rank of second-to-last, rank of last) in the prefix
    if n < 3:
        return factorial(n)
    state = {(a, b): 1 for a in (1, 2) for b in (1, 2) if a != b}
    for m in range(2, n):
        nxt: dict[tuple[int, int], int] = {}
        for (a, b), cnt in state.items():
            for c in range(1, m + 2):
                a2 = a + (a >= c)
                b2 = b + (b >= c)
                if a2 < c < b2:  # pattern 132 in the last three letters
                    continue
                nxt[(b2, c)] = nxt.get((b2, c), 0) + cnt
        state = nxt
    return sum(state.values())


@lru_cache(maxsize=None)
def _chain(s: int) -> int:
    # signed count of window chains starting at 1 and ending at window s,
    # consecutive windows starting one or two letters apart
    if s == 1:
        return -1
    return -(_chain(s - 1) + (_chain(s - 2) if s > 2 else 0))


def _run_weight(length: int) -> int:
    # signed count of window sets covering a block of consecutive letters
    if length == 1:
        return 1
    return _chain(length - 2) if length >= 3 else 0


def no_triple_run(n: int) -> int:
    """Permutations of [n] with no factor k(k+1)(k+2), by cluster expansion."""

    @lru_cache(maxsize=None)
    def blocks(rest: int, units: int) -> int:
        if rest == 0:
            return factorial(units)
        return sum(_run_weight(L) * blocks(rest - L, units + 1) for L in range(1, rest + 1))

    return blocks(n, 0)


def take(fn, start: int) -> list[int]:
    return [fn(n) for n in range(start, start + TERMS)]


SEQUENCES = [
    ("A000012", "The simplest sequence of positive numbers: the all 1's sequence.",
     take(lambda n: 1, 0)),
    ("A000142", "Factorial numbers n!.", take(factorial, 0)),
    ("A000255", "a(n) = n*a(n-1) + (n-1)*a(n-2), a(0) = 1, a(1) = 1.",
     take(lambda n: cf.eval_closed_form("B03", n + 1), 0)),
    ("A001710", "Order of alternating group A_n, or number of even permutations of n letters.",
     take(lambda n: max(factorial(n) // 2, 1), 0)),
    ("A094258", "a(1) = 1; for n >= 2, a(n) = (n-1)*(n-1)!.",
     take(lambda n: 1 if n == 1 else (n - 1) * factorial(n - 1), 1)),
    ("A000108", "Catalan numbers: C(n) = binomial(2n,n)/(n+1).", take(cf.catalan, 0)),
    ("A000110", "Bell or exponential numbers: number of ways to partition a set of n labeled elements.",
     take(lambda n: 1 if n == 0 else cf.bell(n), 0)),
    ("A022493", "Fishburn numbers: number of ascent sequences of length n.", take(fishburn, 0)),
    ("A138265", "Number of upper triangular zero-one matrices with n ones and no zero rows or columns.",
     take(no_flat_ascent, 0)),
    ("A111004", "Number of permutations avoiding the consecutive pattern 132.",
     take(consecutive_132_avoiders, 0)),
    ("A003149", "a(n) = Sum_{k=0..n} k!(n-k)!.",
     take(lambda n: sum(factorial(k) * factorial(n - k) for k in range(n + 1)), 0)),
    ("A000522", "Total number of arrangements of a set with n elements: a(n) = Sum_{k=0..n} n!/k!.",
     take(lambda n: sum(factorial(n) // factorial(k) for k in range(n + 1)), 0)),
    ("A000774", "a(n) = n! * (1 + Sum_{i=1..n} 1/i).",
     take(lambda n: cf.eval_closed_form("C08", n + 1), 0)),
    ("A052169", "a(n) = (n-1)a(n-1) + (n-2)a(n-2) with a(1) = 1, a(2) = 2; also c(n+1)/n for c the non-derangement counts.",
     take(lambda n: cf.c12_recurrence(n + 1), 0)),
    ("A002628", "Number of permutations of length n without 3-sequences.", take(no_triple_run, 0)),
    ("A001286", "Lah numbers: a(n) = (n-1)!*n!/(2*(n-2)!).",
     take(lambda n: factorial(n - 1) * n * (n - 1) // 2, 2)),
    ("A033312", "a(n) = n! - (n-1)!.",
     take(lambda n: 0 if n == 0 else factorial(n) - factorial(n - 1), 0)),
    ("A001715", "a(n) = n!/6.", take(lambda n: factorial(n) // 6, 3)),
    ("A001563", "a(n) = n*n! = (n+1)! - n!.", take(lambda n: n * factorial(n), 0)),
    ("A018927", "Sum over all permutations of [n] of the maximum of pi(i) - i.",
     take(lambda n: factorial(n + 1) - cf.c09_sum(n + 1), 1)),
]


def main() -> None:
    data = [{"id": i, "name": name, "terms": terms} for i, name, terms in SEQUENCES]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(data)} sequences to {OUT}")


if __name__ == "__main__":
    main()
