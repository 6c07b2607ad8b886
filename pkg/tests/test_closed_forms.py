from math import factorial

import pytest

from bivinc import catalog
from bivinc import closed_forms as cf
from bivinc.patterns import contains
from bivinc.perms import permutations_of


@pytest.mark.parametrize(
    "id, n, expected",
    [("C14", 4, 20), ("C12", 4, 19), ("C09", 4, 17), ("C16", 4, 20), ("B03", 4, 11)],
)
def test_eval_closed_form_examples(id, n, expected):
    assert cf.eval_closed_form(id, n) == expected


@pytest.mark.parametrize("id", sorted(cf.NO_FORMULA))
def test_ids_without_formula(id):
    assert cf.eval_closed_form(id, 5) is None


def test_eval_closed_form_errors():
    with pytest.raises(KeyError):
        cf.eval_closed_form("C99", 3)
    with pytest.raises(ValueError):
        cf.eval_closed_form("C14", 0)


@pytest.mark.parametrize("id", cf.formula_ids())
def test_formulas_reproduce_published_rows(id):
    entry = catalog.CATALOG[id]
    assert tuple(cf.eval_closed_form(id, n) for n in range(1, 8)) == entry.terms


def test_formula_ids_partition_catalog():
    assert set(cf.formula_ids()).isdisjoint(cf.NO_FORMULA)
    assert set(cf.formula_ids()) | cf.NO_FORMULA == set(catalog.CATALOG)


# -- verification harness --------------------------------------------------------


def test_verify_registry_short_horizon():
    rep = cf.verify_registry(1)
    assert rep.ok
    assert set(rep.checked) == set(cf.formula_ids())


def test_verify_registry_checks_all_members():
    rep = cf.verify_registry(5, ids=["C11", "C19"])
    assert rep.ok
    assert rep.checked == {"C11": len(catalog.APPENDIX["A"]), "C19": len(catalog.APPENDIX["D"])}


def test_verify_registry_catches_corrupted_formula():
    formulas = dict(cf._FORMULAS)
    formulas["C14"] = lambda n: 5 * factorial(n) // 6 + 1
    rep = cf.verify_registry(4, ids=["C14", "C13"], formulas=formulas)
    assert not rep.ok
    assert {m.id for m in rep.mismatches} == {"C14"}
    m = next(m for m in rep.mismatches if m.n == 4)
    assert (m.expected, m.observed) == (21, 20)


def test_verify_registry_errors():
    with pytest.raises(ValueError):
        cf.verify_registry(9)
    with pytest.raises(KeyError):
        cf.verify_registry(3, ids=["Z01"])


# -- C09 ---------------------------------------------------------------------------


@pytest.mark.parametrize("n, expected", [(1, 0), (2, 1), (4, 45)])
def test_max_excedence_sum(n, expected):
    assert cf.max_excedence_sum(n) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_c09_identities(n):
    a = cf.c09_sum(n)
    assert a == cf.c09_alternative(n)
    assert cf.c09_sum(n + 1) == factorial(n + 1) - cf.max_excedence_sum(n)


def test_c09_position_counts_sum_by_hand():
    assert [cf.c09_position_count(4, k) for k in range(1, 5)] == [1, 4, 6, 6]
    with pytest.raises(ValueError):
        cf.c09_position_count(4, 5)


# -- C10 ---------------------------------------------------------------------------


def test_c10_ingredients():
    counts = [cf.c10_ingredients(n) for n in range(1, 9)]
    assert [c[0] for c in counts] == [0, 0, 1, 5, 31, 205, 1529, 12747]
    assert all(p1 == p2 for p1, p2 in counts)


def test_c10_recursion_reproduces_row():
    for which in (0, 1):
        seq = cf.c10_recursion(lambda n: cf.c10_ingredients(n)[which], upto=8)
        assert seq[:7] == list(catalog.CATALOG["C10"].terms)
        assert seq[7] == 23275


# -- C12 ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 11))
def test_c12_identities(n):
    a = cf.c12_recurrence(n)
    assert a == cf.c12_alternating(n)
    assert cf.non_derangements(n + 1) == n * a
    if n >= 2:
        assert a == cf.non_derangements(n) + cf.non_derangements(n - 1)


def test_c12_position_counts():
    assert cf.c12_position_counts(3) == {1: 2, 2: 2, 3: 1}
    for n in range(2, 8):
        counts = cf.c12_position_counts(n)
        assert sum(counts.values()) == cf.c12_recurrence(n)
        assert counts[1] == counts[2] == factorial(n - 1)
        prev = cf.c12_position_counts(n - 1)
        for k in range(3, n + 1):
            assert counts[k] == counts[k - 1] - prev[k - 1]


def test_derangements():
    assert [cf.derangements(n) for n in range(7)] == [1, 0, 1, 2, 9, 44, 265]


# -- C16 ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 13))
def test_c16_identities(n):
    for m in range(1, 10):
        for k in range(0, 4):
            if n >= 3 * k and m >= 3 * k:
                assert cf.squares_recursive(n, m, k) == cf.squares_product(n, m, k), (n, m, k)
            else:
                # no room for k disjoint squares
                assert cf.squares_recursive(n, m, k) == 0
    b = sum((-1) ** (k + 1) * cf.c16_d(n, k) for k in range(1, n // 3 + 1))
    assert b == cf.c16_b(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_c16_b_counts_containers(n):
    p = catalog.CATALOG["C16"].pattern
    assert cf.c16_b(n) == sum(contains(pi, p) for pi in permutations_of(n))


def test_squares_single():
    # one 3x3 square in a 4x5 board: 2 * 3 placements
    assert cf.squares_product(4, 5, 1) == 6


# -- reference sequences ---------------------------------------------------------


def test_catalan_and_bell():
    assert [cf.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [cf.bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
