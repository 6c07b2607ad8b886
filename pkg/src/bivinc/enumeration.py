"""
Brute-force enumeration: avoidance sequences, occurrence distributions,
symmetry classes, Wilf classification and symmetry-class counts.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import factorial

from bivinc import catalog, engine
from bivinc.patterns import (
    GROUP_WORDS,
    BiVincularPattern,
    canonical_representative,
    enumerate_patterns,
    parse_pattern,
    pattern_symmetry,
    symmetry_class,
)

MAX_HORIZON = 11
MAX_DISTRIBUTION_HORIZON = 8

PROVED = "proved-in-paper"
PREFIX_ONLY = "prefix-equal-only"


@dataclass(frozen=True)
class AvoidanceSequence:
    patterns: tuple[BiVincularPattern, ...]
    terms: tuple[int, ...]  # a_1 .. a_N

    def __getitem__(self, n: int) -> int:
        return self.terms[n - 1]


@dataclass(frozen=True)
class DistributionTable:
    pattern: BiVincularPattern
    rows: tuple[dict[int, int], ...]  # rows[i - 1][j] = d_{i,j}

    def row(self, i: int) -> dict[int, int]:
        return self.rows[i - 1]


def avoidance_sequences(pattern_sets, N: int, jobs: int = 1) -> list[tuple[int, ...]]:
    """Terms a_1..a_N for many pattern sets at once (one pass over each S_n)."""
    if not 1 <= N <= MAX_HORIZON:
        raise ValueError(f"horizon must be in 1..{MAX_HORIZON}, got {N}")
    pattern_sets = [tuple(ps) for ps in pattern_sets]
    for ps in pattern_sets:
        if not ps:
            raise ValueError("empty pattern set")
    columns = [engine.count_avoiders(pattern_sets, n, jobs) for n in range(1, N + 1)]
    return [tuple(col[i] for col in columns) for i in range(len(pattern_sets))]


def avoidance_sequence(patterns, N: int, jobs: int = 1) -> AvoidanceSequence:
    if isinstance(patterns, BiVincularPattern):
        patterns = (patterns,)
    patterns = tuple(patterns)
    if not patterns:
        raise ValueError("empty pattern set")
    (terms,) = avoidance_sequences([patterns], N, jobs)
    return AvoidanceSequence(patterns, terms)


def distribution(p: BiVincularPattern, N: int, jobs: int = 1) -> DistributionTable:
    if not 1 <= N <= MAX_DISTRIBUTION_HORIZON:
        raise ValueError(f"horizon must be in 1..{MAX_DISTRIBUTION_HORIZON}, got {N}")
    rows = tuple(engine.occurrence_histograms([p], i, jobs)[0] for i in range(1, N + 1))
    return DistributionTable(p, rows)


def distributions_equal(p: BiVincularPattern, q: BiVincularPattern, N: int, jobs: int = 1) -> bool:
    for i in range(1, N + 1):
        hp, hq = engine.occurrence_histograms([p, q], i, jobs)
        if hp != hq:
            return False
    return True


def symmetry_partition(k: int) -> list[frozenset[BiVincularPattern]]:
    """Orbits of all length-k patterns, ordered by canonical representative."""
    seen: set[BiVincularPattern] = set()
    classes = []
    for p in enumerate_patterns(k):
        if p in seen:
            continue
        c = symmetry_class(p)
        seen |= c
        classes.append(c)
    classes.sort(key=lambda c: str(canonical_representative(c)))
    return classes


# -- Wilf classification ----------------------------------------------------


@dataclass
class WilfClass:
    representative: str
    members: list[str]  # canonical representatives of the symmetry classes
    terms: list[int]
    formula_id: str | None = None
    oeis_id: str | None = None
    provenance: str = PREFIX_ONLY
    note: str | None = None


@dataclass
class ClassificationReport:
    k: int
    horizon: int
    classes: list[WilfClass] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> ClassificationReport:
        return cls(
            k=d["k"],
            horizon=d["horizon"],
            classes=[WilfClass(**c) for c in d["classes"]],
            notes=list(d.get("notes", [])),
        )


def wilf_classify(k: int, N: int = 7, jobs: int = 1) -> ClassificationReport:
    """
    Group the symmetry classes of length-k patterns by their first N terms.

    Groups are labelled with the matching published row when the prefix
    identifies one.  Only groups matching a published row backed by a formula
    or a bijection are marked proved-in-paper; for every other group equal prefixes are only
    evidence and it is marked prefix-equal-only.
    """
    if k not in (2, 3):
        raise ValueError("classification is available for k = 2 and k = 3")
    orbits = symmetry_partition(k)
    reps = [canonical_representative(c) for c in orbits]
    seqs = avoidance_sequences([[r] for r in reps], N, jobs)

    groups: dict[tuple[int, ...], list[int]] = {}
    for i, terms in enumerate(seqs):
        groups.setdefault(terms, []).append(i)

    report = ClassificationReport(k=k, horizon=N)
    matched = set()
    for terms in sorted(groups):
        idx = groups[terms]
        members = sorted(str(reps[i]) for i in idx)
        all_patterns = set().union(*(orbits[i] for i in idx))
        wc = WilfClass(representative=members[0], members=members, terms=list(terms))
        entry = catalog.lookup_terms(k, terms)
        if entry is not None and entry.pattern in all_patterns:
            wc.formula_id = entry.id
            wc.oeis_id = entry.oeis
            wc.representative = entry.representative
            matched.add(entry.id)
        if wc.formula_id in catalog.PROVED_IDS:
            wc.provenance = PROVED
        if entry is None and N >= 7:
            wc.note = "not among the published classes"
        report.classes.append(wc)

    if N >= 7:
        published = len(catalog.entries_for_length(k))
        if len(report.classes) != published:
            report.notes.append(
                f"{len(report.classes)} classes found at horizon {N}; "
                f"the published table lists {published}"
            )
        for e in catalog.entries_for_length(k):
            if e.id not in matched:
                report.notes.append(f"published class {e.id} not reproduced")
    return report


# -- symmetry-class counts ----------------------------------------------------


def involution_count(n: int) -> int:
    return sum(
        factorial(n) // (factorial(j) * factorial(n - 2 * j) * 2**j) for j in range(n // 2 + 1)
    )


def burnside_s(n: int) -> int:
    """Closed-form number of symmetry classes of length-n patterns."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    m, r = divmod(n, 4)
    inv = involution_count(n)
    if r in (0, 1):
        quarter = 2 ** (2 * m) * factorial(2 * m - 1) // factorial(m - 1)
        if r == 0:
            return (2 ** (6 * m - 1) * factorial(2 * m) + 2 ** (8 * m - 1) * factorial(4 * m)
                    + 2 ** (4 * m - 1) * inv + quarter)
        return (2 ** (6 * m - 1) * factorial(2 * m) + 2 ** (8 * m + 1) * factorial(4 * m + 1)
                + 2 ** (4 * m) * inv + quarter)
    if r == 2:
        return (2 ** (6 * m + 2) * factorial(2 * m + 1) + 2 ** (8 * m + 3) * factorial(4 * m + 2)
                + 2 ** (4 * m + 1) * inv)
    return (2 ** (6 * m + 2) * factorial(2 * m + 1) + 2 ** (8 * m + 5) * factorial(4 * m + 3)
            + 2 ** (4 * m + 2) * inv)


def burnside_average(n: int) -> int:
    """Burnside's average over the 8 symmetries, from the fixed-point counts."""
    g_id, f_id = factorial(n), 4 ** (n + 1)
    h = n // 2
    g_180 = 2**h * factorial(h)
    f_180 = 4 ** (h + 1)
    if n % 4 in (0, 1) and n >= 4:
        m = n // 4
        g_90 = 2 * factorial(2 * m - 1) // factorial(m - 1)
    else:
        g_90 = 0
    f_90 = 2 ** (h + 1)
    g_d, f_d = involution_count(n), 2 ** (n + 1)
    total = f_id * g_id + f_180 * g_180 + 2 * f_90 * g_90 + 2 * f_d * g_d
    assert total % 8 == 0
    return total // 8


def burnside_direct(n: int) -> int:
    """Count orbits by enumerating every pattern of length n."""
    if not 2 <= n <= 4:
        raise ValueError("direct orbit counting is limited to 2 <= n <= 4")
    return len(symmetry_partition(n))


BURNSIDE_LABEL_NOTE = (
    "the published list gives 1478528 as s_7; the closed form gives s_6 = 1478528 "
    "and s_7 = 41304064"
)


def burnside_notes(n: int) -> list[str]:
    return [BURNSIDE_LABEL_NOTE] if n in (6, 7) else []


__all__ = [
    "AvoidanceSequence",
    "ClassificationReport",
    "DistributionTable",
    "GROUP_WORDS",
    "WilfClass",
    "avoidance_sequence",
    "avoidance_sequences",
    "burnside_average",
    "burnside_direct",
    "burnside_s",
    "distribution",
    "distributions_equal",
    "involution_count",
    "parse_pattern",
    "pattern_symmetry",
    "symmetry_partition",
    "wilf_classify",
]
