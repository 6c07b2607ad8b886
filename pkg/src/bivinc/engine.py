"""
Vectorized occurrence counting over blocks of permutations.

S_n is cut into shards by a fixed-length prefix (the first entry for n <= 9).
Each shard is materialized as an ``(rows, n)`` int8 array in lexicographic
order and every pattern is evaluated over all rows at once, one admissible
index set at a time.  Shard results are plain integer folds, so the merged
answer does not depend on how many worker processes ran the shards.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import numpy as np

from bivinc.patterns import BiVincularPattern

# largest number of free (non-prefix) entries materialized in one block
BLOCK_WIDTH = 8


@lru_cache(maxsize=None)
def _lex_indices(m: int) -> np.ndarray:
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(itertools.permutations(range(m))), dtype=np.int8)


def shard_prefixes(n: int) -> list[tuple[int, ...]]:
    """Prefixes defining the shards of S_n, in lexicographic order."""
    if n == 0:
        return [()]
    s = max(1, n - BLOCK_WIDTH) if n > 9 else 1
    return list(itertools.permutations(range(1, n + 1), s))


def perm_block(n: int, prefix: tuple[int, ...] = ()) -> np.ndarray:
    """All permutations of size n starting with ``prefix``, lexicographic."""
    rest = np.array([v for v in range(1, n + 1) if v not in prefix], dtype=np.int8)
    tail = rest[_lex_indices(len(rest))] if len(rest) else np.zeros((1, 0), dtype=np.int8)
    head = np.broadcast_to(np.array(prefix, dtype=np.int8), (len(tail), len(prefix)))
    return np.ascontiguousarray(np.hstack([head, tail]))


@lru_cache(maxsize=None)
def _index_sets(n: int, k: int, xmask: int) -> tuple[tuple[int, ...], ...]:
    # 0-based position tuples satisfying the X constraints
    out = []
    for c in itertools.combinations(range(n), k):
        ext = (-1, *c, n)
        if all(ext[x + 1] == ext[x] + 1 for x in range(k + 1) if xmask >> x & 1):
            out.append(c)
    return tuple(out)


def occurrence_counts(block: np.ndarray, p: BiVincularPattern) -> np.ndarray:
    """Occurrences of ``p`` in every row of ``block``."""
    rows, n = block.shape
    k = p.k
    counts = np.zeros(rows, dtype=np.int32)
    if n < k:
        return counts
    cols = block.T
    slot_of_rank = [0] * k
    for slot, s in enumerate(p.sigma):
        slot_of_rank[s - 1] = slot
    ymask = p.ymask
    for combo in _index_sets(n, k, p.xmask):
        letters = [cols[combo[slot_of_rank[r]]] for r in range(k)]
        ok = letters[0] == 1 if ymask & 1 else None
        for r in range(1, k):
            if ymask >> r & 1:
                step = letters[r] == letters[r - 1] + 1
            else:
                step = letters[r] > letters[r - 1]
            ok = step if ok is None else ok & step
        if ymask >> k & 1:
            top = letters[k - 1] == n
            ok = top if ok is None else ok & top
        if ok is None:  # k == 1 and Y empty: every index set matches
            counts += 1
        else:
            counts += ok
    return counts


def avoid_mask(block: np.ndarray, patterns) -> np.ndarray:
    mask = np.ones(len(block), dtype=bool)
    for p in patterns:
        mask &= occurrence_counts(block, p) == 0
    return mask


def _shard_avoiders(args) -> list[int]:
    pattern_sets, n, prefix = args
    block = perm_block(n, prefix)
    return [int(avoid_mask(block, ps).sum()) for ps in pattern_sets]


def _shard_histograms(args) -> list[dict[int, int]]:
    patterns, n, prefix = args
    block = perm_block(n, prefix)
    out = []
    for p in patterns:
        values, freq = np.unique(occurrence_counts(block, p), return_counts=True)
        out.append({int(v): int(f) for v, f in zip(values, freq)})
    return out


def _run(fn, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def default_jobs() -> int:
    return os.cpu_count() or 1


def count_avoiders(pattern_sets, n: int, jobs: int = 1) -> list[int]:
    """For each set of patterns, the number of permutations of size n avoiding all of them."""
    pattern_sets = [tuple(ps) for ps in pattern_sets]
    tasks = [(pattern_sets, n, pre) for pre in shard_prefixes(n)]
    totals = [0] * len(pattern_sets)
    for part in _run(_shard_avoiders, tasks, jobs):
        for i, c in enumerate(part):
            totals[i] += c
    return totals


def occurrence_histograms(patterns, n: int, jobs: int = 1) -> list[dict[int, int]]:
    """For each pattern, ``{occurrences: number of permutations of size n}``."""
    patterns = tuple(patterns)
    tasks = [(patterns, n, pre) for pre in shard_prefixes(n)]
    merged: list[dict[int, int]] = [{} for _ in patterns]
    for part in _run(_shard_histograms, tasks, jobs):
        for acc, hist in zip(merged, part):
            for j, c in hist.items():
                acc[j] = acc.get(j, 0) + c
    return [dict(sorted(h.items())) for h in merged]
