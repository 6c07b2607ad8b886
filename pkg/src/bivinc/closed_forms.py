"""
Exact evaluators for the closed forms, sums and recurrences attached to the
published Wilf classes, and a harness that checks them against brute force.

All arithmetic is on Python integers; rational expressions are reordered so
that every intermediate value is an integer.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from bivinc import catalog, engine
from bivinc.perms import permutations_of

# Ids whose class has no closed form: counted only through a bijection
# (C03, C04), only by brute force (C05, C17) or not at all (C10, C22-C24).
NO_FORMULA = frozenset({"C03", "C04", "C05", "C10", "C17", "C22", "C23", "C24"})


def _fact(n: int) -> int:
    # factorials of negative arguments contribute nothing at small n
    return factorial(n) if n >= 0 else 0


# -- C01 / C02 reference sequences ------------------------------------------


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell numbers through the Bell triangle."""
    row = [1]
    for _ in range(n - 1 if n > 0 else 0):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


# -- C09 ----------------------------------------------------------------------


def c09_position_count(n: int, k: int) -> int:
    """a_{n,k}: avoiders of (123,{0,2},{}) of length n starting with k."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if k >= n - 1:
        return factorial(n - 1)
    return factorial(k - 1) * k ** (n - k)


def c09_sum(n: int) -> int:
    return sum(c09_position_count(n, k) for k in range(1, n + 1))


def c09_alternative(n: int) -> int:
    return factorial(n) - sum(
        k * factorial(k) * ((k + 1) ** (n - k - 1) - k ** (n - k - 1)) for k in range(1, n - 1)
    )


def max_excedence_sum(n: int) -> int:
    """Sum over S_n of max_i (pi_i - i), the identity contributing 0."""
    if not 0 <= n <= 8:
        raise ValueError("n must be in 0..8")
    return sum(
        max(0, *(v - i for i, v in enumerate(pi, start=1))) if n else 0
        for pi in permutations_of(n)
    )


# -- C12 ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def c12_recurrence(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return n
    return (n - 1) * c12_recurrence(n - 1) + (n - 2) * c12_recurrence(n - 2)


def c12_alternating(n: int) -> int:
    return factorial(n - 1) + sum(
        (-1) ** (n - k) * factorial(k + 1) * comb(n - 1, k) for k in range(n - 1)
    )


@lru_cache(maxsize=None)
def derangements(n: int) -> int:
    if n == 0:
        return 1
    if n == 1:
        return 0
    return (n - 1) * (derangements(n - 1) + derangements(n - 2))


def non_derangements(n: int) -> int:
    """Permutations of [n] with at least one fixed point."""
    return factorial(n) - derangements(n)


def c12_position_counts(n: int) -> dict[int, int]:
    """Brute-force a_{n,k}: avoiders of (123,{1},{1,3}) with the letter n at position k."""
    from bivinc.patterns import contains, parse_pattern

    p = parse_pattern(catalog.CATALOG["C12"].representative)
    out = {k: 0 for k in range(1, n + 1)}
    for pi in permutations_of(n):
        if not contains(pi, p):
            out[pi.index(n) + 1] += 1
    return out


# -- C16 ----------------------------------------------------------------------


def squares_product(n: int, m: int, k: int) -> int:
    """c_{n,m,k} by the product formula (ways to place k disjoint 3x3 squares)."""
    num = 1
    for i in range(2 * k, 3 * k):
        num *= (n - i) * (m - i)
    return num // factorial(k)


@lru_cache(maxsize=None)
def squares_recursive(n: int, m: int, k: int) -> int:
    """
    c_{n,m,k} by summing over the rectangle left free by one square.

    The remaining k - 1 squares need at least 3(k - 1) rows and columns,
    so the partial sizes run from 3(k - 1) to n - 3 (resp. m - 3).
    """
    if k == 0:
        return 1
    if k == 1:
        return max(n - 2, 0) * max(m - 2, 0)
    lo = 3 * (k - 1)
    return k * sum(
        squares_recursive(i, j, k - 1)
        for i in range(lo, n - 2)
        for j in range(lo, m - 2)
    )


def c16_d(n: int, k: int) -> int:
    return _fact(n - 3 * k) * squares_product(n, n, k)


def c16_b(n: int) -> int:
    """Number of permutations containing (132,{1,2},{1,2})."""
    return sum((-1) ** (k + 1) * factorial(n - 2 * k) * comb(n - 2 * k, k)
               for k in range(1, n // 3 + 1))


# -- C10 ----------------------------------------------------------------------


def _c10_count(n: int, step: int) -> int:
    # permutations with exactly one adjacent pair (v, v + step) that has a
    # smaller letter somewhere to its left
    total = 0
    for pi in permutations_of(n):
        hits = 0
        low = n + 1
        for t in range(n - 1):
            if pi[t + 1] == pi[t] + step and low < pi[t]:
                hits += 1
                if hits > 1:
                    break
            low = min(low, pi[t])
        total += hits == 1
    return total


def c10_ingredients(n: int) -> tuple[int, int]:
    """(c_n(p1), c_n(p2)) for p1 = (123,{2},{2}) and p2 = (132,{2},{2})."""
    if not 1 <= n <= 8:
        raise ValueError("n must be in 1..8")
    return _c10_count(n, 1), _c10_count(n, -1)


def c10_recursion(c: Callable[[int], int], a1: int = 1, a2: int = 2, upto: int = 7) -> list[int]:
    """a_1..a_upto from a_{n+1} = c_n + n(a_n - a_{n-1}) + (n+1) a_{n-1}."""
    a = [a1, a2]
    for n in range(2, upto):
        a.append(c(n) + n * (a[-1] - a[-2]) + (n + 1) * a[-2])
    return a[:upto]


# -- registry -----------------------------------------------------------------


def _b03(n: int) -> int:
    m = n - 1
    return sum((-1) ** i * (m - i + 1) * factorial(m) // factorial(i) for i in range(m + 1))


_FORMULAS: dict[str, Callable[[int], int]] = {
    "B01": lambda n: 1,
    "B02": lambda n: factorial(n - 1),
    "B03": _b03,
    "B04": lambda n: factorial(n) // 2,
    "B05": lambda n: factorial(n) - factorial(n - 1),
    "B06": lambda n: factorial(n) - _fact(n - 2),
    "B07": lambda n: factorial(n) - (n == 2),
    "C01": catalan,
    "C02": bell,
    "C06": lambda n: sum(factorial(k - 1) * factorial(n - k) for k in range(1, n + 1)),
    "C07": lambda n: sum(factorial(n - 1) // factorial(k) for k in range(n)),
    "C08": lambda n: factorial(n - 1) + sum(factorial(n - 1) // k for k in range(1, n)),
    "C09": c09_sum,
    "C11": lambda n: factorial(n) - factorial(n - 1) * (n - 2) // 2,
    "C12": c12_recurrence,
    "C13": lambda n: factorial(n) - factorial(n - 1) + 1,
    "C14": lambda n: 5 * factorial(n) // 6,
    "C15": lambda n: factorial(n) - _fact(n - 2) * (n - 2),
    "C16": lambda n: factorial(n) - c16_b(n),
    "C18": lambda n: factorial(n) - factorial(n - 1) // 2,
    "C19": lambda n: factorial(n) - _fact(n - 2),
    "C20": lambda n: factorial(n) - _fact(n - 3),
    "C21": lambda n: factorial(n) - (n == 3),
}

assert set(_FORMULAS) | NO_FORMULA == set(catalog.CATALOG)


def formula_ids() -> list[str]:
    return sorted(_FORMULAS)


def eval_closed_form(id: str, n: int, formulas: dict[str, Callable[[int], int]] | None = None):
    """Exact a_n for catalog class ``id``, or None when the class has no formula."""
    if id not in catalog.CATALOG:
        raise KeyError(f"unknown formula id {id!r}")
    if n < 1:
        raise ValueError("n must be positive")
    table = _FORMULAS if formulas is None else formulas
    fn = table.get(id)
    if fn is None:
        return None
    # below the pattern length nothing can occur
    if n < catalog.CATALOG[id].k:
        return factorial(n)
    return fn(n)


@dataclass(frozen=True)
class Mismatch:
    id: str
    pattern: str
    n: int
    expected: int
    observed: int


@dataclass
class VerificationReport:
    horizon: int
    checked: dict[str, int] = field(default_factory=dict)  # id -> patterns checked
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_registry(
    N: int,
    ids: Iterable[str] | None = None,
    formulas: dict[str, Callable[[int], int]] | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """
    Compare every formula with brute force on the representative and every
    listed member of its class, for n = 1..N.  ``formulas`` overrides the
    evaluators (used to check that a corrupted formula is caught).
    """
    if not 1 <= N <= 8:
        raise ValueError("horizon must be in 1..8")
    table = dict(_FORMULAS if formulas is None else formulas)
    wanted = formula_ids() if ids is None else list(ids)
    for i in wanted:
        if i not in catalog.CATALOG:
            raise KeyError(f"unknown formula id {i!r}")
    targets = []
    for i in wanted:
        if table.get(i) is None:
            continue
        for p in catalog.CATALOG[i].member_patterns():
            targets.append((i, p))

    report = VerificationReport(horizon=N)
    for i, _ in targets:
        report.checked[i] = report.checked.get(i, 0) + 1
    for n in range(1, N + 1):
        observed = engine.count_avoiders([[p] for _, p in targets], n, jobs)
        for (i, p), obs in zip(targets, observed):
            exp = eval_closed_form(i, n, table)
            if exp != obs:
                report.mismatches.append(Mismatch(i, str(p), n, exp, obs))
    return report
