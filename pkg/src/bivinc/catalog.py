"""
Published Wilf classes of bi-vincular patterns of lengths 2 and 3.

Each catalog id names one row of the published tables: its representative,
its first seven avoidance numbers, the OEIS entry (when one is cited) and the
patterns explicitly listed as members of the class.  Ids ``B01``-``B07`` are
length 2, ``C01``-``C24`` length 3.  ``TABLE_ORDER`` gives the row order of
the published tables, which is lexicographic in the avoidance numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from bivinc.patterns import BiVincularPattern, parse_pattern


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    representative: str
    terms: tuple[int, ...]
    oeis: str | None
    formula: str | None
    members: tuple[str, ...]

    @property
    def pattern(self) -> BiVincularPattern:
        return parse_pattern(self.representative)

    @property
    def k(self) -> int:
        return self.pattern.k

    def member_patterns(self) -> list[BiVincularPattern]:
        seen = {}
        for text in (self.representative, *self.members):
            p = parse_pattern(text)
            seen.setdefault(p, None)
        return list(seen)


def _all_x(sigma: str, y: str) -> tuple[str, ...]:
    k = len(sigma)
    out = []
    for r in range(k + 2):
        for xs in itertools.combinations(range(k + 1), r):
            out.append(f"{sigma}|X={','.join(map(str, xs))}|Y={y}")
    return tuple(out)


APPENDIX = {
    "A": (
        "123|X=|Y=0,1", "123|X=|Y=0,3", "123|X=0|Y=1,2", "123|X=0|Y=1,3",
        "123|X=0|Y=2,3", "123|X=1|Y=0,2", "123|X=1|Y=0,3", "123|X=1|Y=2,3",
        "132|X=|Y=0,1", "132|X=|Y=0,3", "132|X=|Y=2,3", "132|X=0|Y=1,2",
        "132|X=0|Y=1,3", "132|X=0|Y=2,3", "132|X=1|Y=0,1", "132|X=1|Y=0,2",
        "132|X=1|Y=1,3", "132|X=1|Y=2,3", "132|X=0,1|Y=2", "132|X=2|Y=0,3",
        "132|X=2|Y=1,3", "132|X=0,2|Y=3", "132|X=1,2|Y=3", "132|X=3|Y=0,3",
        "132|X=3|Y=1,3",
    ),
    "B": (
        "123|X=0|Y=0,1", "123|X=0|Y=0,3", "123|X=1|Y=0,1", "123|X=0,1|Y=0,2",
        "123|X=0,1|Y=1,2", "123|X=0,1|Y=0,3", "123|X=0,1|Y=1,3", "123|X=0,1|Y=2,3",
        "123|X=0,2|Y=1,2", "123|X=0,2|Y=0,3", "123|X=0,2|Y=1,3", "123|X=1,2|Y=0,3",
        "132|X=0|Y=0,1", "132|X=0|Y=0,3", "132|X=1|Y=0,3", "132|X=0,1|Y=0,1",
        "132|X=0,1|Y=0,2", "132|X=0,1|Y=1,2", "132|X=0,1|Y=3", "132|X=0,1|Y=1,3",
        "132|X=0,1|Y=2,3", "132|X=2|Y=2,3", "132|X=0,2|Y=1,2", "132|X=0,2|Y=0,3",
        "132|X=0,2|Y=1,3", "132|X=0,2|Y=2,3", "132|X=1,2|Y=0,3", "132|X=1,2|Y=1,3",
        "132|X=1,2|Y=2,3", "132|X=3|Y=2,3", "132|X=0,3|Y=0,3", "132|X=0,3|Y=1,3",
        "132|X=0,3|Y=2,3", "132|X=1,3|Y=1,3", "132|X=1,3|Y=2,3",
    ),
    "C": (
        "123|X=0|Y=0,1,2", "123|X=0|Y=0,1,3", "123|X=0|Y=0,2,3", "123|X=0|Y=1,2,3",
        "123|X=1|Y=0,1,2", "123|X=1|Y=0,1,3", "123|X=1|Y=0,2,3", "123|X=1|Y=1,2,3",
        "132|X=0|Y=0,1,2", "132|X=0|Y=0,1,3", "132|X=0|Y=0,2,3", "132|X=0|Y=1,2,3",
        "132|X=1|Y=0,1,2", "132|X=1|Y=0,1,3", "132|X=1|Y=0,2,3", "132|X=1|Y=1,2,3",
        "132|X=2|Y=0,1,2", "132|X=2|Y=0,1,3", "132|X=2|Y=0,2,3", "132|X=2|Y=1,2,3",
        "132|X=0,1,2|Y=3", "132|X=3|Y=0,1,3", "132|X=3|Y=0,2,3", "132|X=3|Y=1,2,3",
    ),
    "D": (
        "123|X=0,1|Y=0,1", "123|X=0,1|Y=0,1,2", "123|X=0,1|Y=0,1,3", "123|X=0,1|Y=0,2,3",
        "123|X=0,1|Y=1,2,3", "123|X=0,2|Y=0,1,2", "123|X=0,2|Y=0,1,3", "123|X=0,2|Y=0,2,3",
        "123|X=0,2|Y=1,2,3", "123|X=1,2|Y=0,1,2", "123|X=1,2|Y=0,1,3", "123|X=0,1,2|Y=0,3",
        "123|X=0,3|Y=0,3", "123|X=0,3|Y=0,1,3", "132|X=0,1|Y=0,1,2", "132|X=0,1|Y=0,3",
        "132|X=0,1|Y=0,1,3", "132|X=0,1|Y=0,2,3", "132|X=0,1|Y=1,2,3", "132|X=0,2|Y=0,1,2",
        "132|X=0,2|Y=0,1,3", "132|X=0,2|Y=0,2,3", "132|X=0,2|Y=1,2,3", "132|X=1,2|Y=0,1,2",
        "132|X=1,2|Y=0,1,3", "132|X=1,2|Y=0,2,3", "132|X=1,2|Y=1,2,3", "132|X=0,1,2|Y=0,3",
        "132|X=0,1,2|Y=1,3", "132|X=0,1,2|Y=2,3", "132|X=0,3|Y=0,1,3", "132|X=0,3|Y=0,2,3",
        "132|X=0,3|Y=1,2,3", "132|X=1,3|Y=0,1,3", "132|X=1,3|Y=0,2,3", "132|X=1,3|Y=1,2,3",
        "132|X=0,1,3|Y=2,3", "132|X=2,3|Y=2,3", "132|X=2,3|Y=0,2,3", "132|X=2,3|Y=1,2,3",
    ),
    "E": (
        "123|X=0,1,2|Y=0,1,2", "123|X=0,1,2|Y=0,1,3", "123|X=0,1,2|Y=0,2,3",
        "123|X=0,1,2|Y=1,2,3", "123|X=0,1,3|Y=0,1,3", "123|X=0,1,3|Y=0,2,3",
        "132|X=0,1,2|Y=0,1,2", "132|X=0,1,2|Y=0,1,3", "132|X=0,1,2|Y=0,2,3",
        "132|X=0,1,2|Y=1,2,3", "132|X=0,1,3|Y=0,1,3", "132|X=0,1,3|Y=0,2,3",
        "132|X=0,1,3|Y=1,2,3", "132|X=0,2,3|Y=0,2,3", "132|X=0,2,3|Y=1,2,3",
        "132|X=1,2,3|Y=1,2,3",
    ),
}

# appendix class letter -> catalog id
APPENDIX_IDS = {"A": "C11", "B": "C15", "C": "C18", "D": "C19", "E": "C20"}


def _e(id, rep, terms, oeis=None, formula=None, members=()):
    return CatalogEntry(id, rep, tuple(terms), oeis, formula, tuple(members))


_ENTRIES = [
    _e("B01", "12|X=|Y=", [1, 1, 1, 1, 1, 1, 1], "A000012", "1",
       ["12|X=|Y=1"]),
    _e("B02", "12|X=|Y=0", [1, 1, 2, 6, 24, 120, 720], "A000142", "(n-1)!",
       ["12|X=0|Y=1", "12|X=0|Y=2"]),
    _e("B03", "12|X=1|Y=1", [1, 1, 3, 11, 53, 309, 2119], "A000255",
       "sum_i (-1)^i (n-i) (n-1)!/i!"),
    _e("B04", "12|X=|Y=0,1", [1, 1, 3, 12, 60, 360, 2520], "A001710", "n!/2",
       ["12|X=|Y=0,2"]),
    _e("B05", "12|X=0|Y=0", [1, 1, 4, 18, 96, 600, 4320], "A094258", "n!-(n-1)!",
       ["12|X=0|Y=0,1", "12|X=0|Y=0,2", "12|X=0|Y=1,2", "12|X=1|Y=0,1", "12|X=1|Y=0,2"]),
    _e("B06", "12|X=0,1|Y=0,1", [1, 1, 5, 22, 114, 696, 4920], None, "n!-(n-2)!",
       ["12|X=0,1|Y=0,2", "12|X=0,1|Y=1,2", "12|X=0,2|Y=0,2"]),
    _e("B07", "12|X=|Y=0,1,2", [1, 1, 6, 24, 120, 720, 5040], None, "n!-[n=2]",
       _all_x("12", "0,1,2") + _all_x("21", "0,1,2")),
    _e("C01", "123|X=|Y=", [1, 2, 5, 14, 42, 132, 429], "A000108", "Catalan(n)",
       ["132|X=|Y=", "132|X=|Y=1"]),
    _e("C02", "123|X=|Y=1", [1, 2, 5, 15, 52, 203, 877], "A000110", "Bell(n)",
       ["132|X=|Y=2"]),
    _e("C03", "132|X=1|Y=1", [1, 2, 5, 15, 53, 217, 1014], "A022493", None,
       ["231|X=1|Y=1"]),
    _e("C04", "321|X=1|Y=1", [1, 2, 5, 16, 61, 271, 1372], "A138265"),
    _e("C05", "132|X=1,2|Y=", [1, 2, 5, 16, 63, 296, 1623], "A111004"),
    _e("C06", "132|X=|Y=3", [1, 2, 5, 16, 64, 312, 1812], "A003149",
       "sum_k (k-1)!(n-k)!", ["132|X=|Y=1,3"]),
    _e("C07", "123|X=|Y=0", [1, 2, 5, 16, 65, 326, 1957], "A000522",
       "sum_k (n-1)!/k!", ["123|X=0|Y=2", "132|X=|Y=0", "132|X=0|Y=2"]),
    _e("C08", "123|X=0|Y=1", [1, 2, 5, 17, 74, 394, 2484], "A000774",
       "(n-1)!(1+H(n-1))",
       ["123|X=0|Y=3", "132|X=0|Y=1", "132|X=0|Y=3", "132|X=1|Y=3", "132|X=2|Y=3",
        "132|X=3|Y=3"]),
    _e("C09", "123|X=0,2|Y=", [1, 2, 5, 17, 75, 407, 2619], None,
       "sum_k a(n,k), a(n,k)=(k-1)! k^(n-k)", ["132|X=0,2|Y="]),
    _e("C10", "123|X=2|Y=2", [1, 2, 5, 18, 82, 459, 3041], None, None,
       ["132|X=2|Y=2"]),
    _e("C11", "123|X=|Y=0,1", [1, 2, 5, 18, 84, 480, 3240], None,
       "n!-(n-1)!(n-2)/2", APPENDIX["A"]),
    _e("C22", "132|X=2|Y=1,2", [1, 2, 5, 18, 85, 494, 3389]),
    _e("C23", "132|X=1|Y=1,2", [1, 2, 5, 18, 86, 502, 3444]),
    _e("C24", "123|X=1|Y=1,2", [1, 2, 5, 19, 90, 523, 3573]),
    _e("C12", "123|X=1|Y=1,3", [1, 2, 5, 19, 91, 531, 3641], "A052169",
       "a(n)=(n-1)a(n-1)+(n-2)a(n-2)", ["132|X=2|Y=0,2"]),
    _e("C13", "123|X=0|Y=0", [1, 2, 5, 19, 97, 601, 4321], None, "n!-(n-1)!+1",
       ["123|X=0|Y=0,2", "132|X=0|Y=0", "132|X=0|Y=0,2"]),
    _e("C14", "123|X=|Y=0,1,2", [1, 2, 5, 20, 100, 600, 4200], None, "5n!/6",
       ["123|X=|Y=0,1,3", "132|X=|Y=0,1,2", "132|X=|Y=0,1,3", "132|X=|Y=0,2,3",
        "132|X=|Y=1,2,3"]),
    _e("C15", "123|X=0|Y=0,1", [1, 2, 5, 20, 102, 624, 4440], None,
       "n!-(n-2)!(n-2)", APPENDIX["B"]),
    _e("C16", "132|X=1,2|Y=1,2", [1, 2, 5, 20, 102, 626, 4458], None,
       "n!-sum_k (-1)^(k+1) (n-2k)! C(n-2k,k)"),
    _e("C17", "123|X=1,2|Y=1,2", [1, 2, 5, 21, 106, 643, 4547], "A002628"),
    _e("C18", "123|X=0|Y=0,1,2", [1, 2, 5, 21, 108, 660, 4680], None,
       "n!-(n-1)!/2", APPENDIX["C"]),
    _e("C19", "123|X=0,1|Y=0,1", [1, 2, 5, 22, 114, 696, 4920], None, "n!-(n-2)!",
       APPENDIX["D"]),
    _e("C20", "123|X=0,1,2|Y=0,1,2", [1, 2, 5, 23, 118, 714, 5016], None,
       "n!-(n-3)!", APPENDIX["E"]),
    _e("C21", "123|X=|Y=0,1,2,3", [1, 2, 5, 24, 120, 720, 5040], None, "n!-[n=3]",
       _all_x("123", "0,1,2,3") + _all_x("132", "0,1,2,3")),
]

CATALOG: dict[str, CatalogEntry] = {e.id: e for e in sorted(_ENTRIES, key=lambda e: e.id)}
TABLE_ORDER: tuple[str, ...] = tuple(e.id for e in _ENTRIES)

# rows whose class is established by a formula, a bijection or (C10) a
# shared recursion
PROVED_IDS = frozenset({e.id for e in _ENTRIES if e.formula} | {"C03", "C04", "C10"})


def entries_for_length(k: int) -> list[CatalogEntry]:
    return [CATALOG[i] for i in TABLE_ORDER if CATALOG[i].k == k]


def lookup_terms(k: int, terms) -> CatalogEntry | None:
    """The catalog row of length ``k`` whose published terms start like ``terms``."""
    terms = tuple(terms)
    m = min(len(terms), 7)
    hits = [e for e in entries_for_length(k) if e.terms[:m] == terms[:m]]
    return hits[0] if len(hits) == 1 else None
