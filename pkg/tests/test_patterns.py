import itertools

import numpy as np
import pytest
from conftest import all_perms, naive_classical_count
from hypothesis import given, settings
from hypothesis import strategies as st

from bivinc import engine
from bivinc.patterns import (
    GROUP_WORDS,
    BiVincularPattern,
    canonical_representative,
    contains,
    count_occurrences,
    enumerate_patterns,
    occurrences,
    parse_pattern,
    pattern_symmetry,
    symmetry_class,
)
from bivinc.perms import ParseError, Permutation, apply_symmetry

P = parse_pattern

small_perms = st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(Permutation)
patterns_k3 = st.sampled_from(enumerate_patterns(3))


@pytest.mark.parametrize(
    "text, sigma, X, Y",
    [
        ("132|X=0,1|Y=2", (1, 3, 2), {0, 1}, {2}),
        ("12|X=|Y=", (1, 2), set(), set()),
        ("4321|X=4,0|Y=3", (4, 3, 2, 1), {0, 4}, {3}),
    ],
)
def test_parse_pattern(text, sigma, X, Y):
    p = P(text)
    assert (p.sigma, p.X, p.Y) == (sigma, X, Y)


@pytest.mark.parametrize(
    "text",
    ["132|X=4|Y=", "132|X=|Y=4", "133|X=|Y=", "|X=|Y=", "132|X=1,1|Y=", "132|X=a|Y=",
     "132|Y=|X=", "132"],
)
def test_parse_pattern_errors(text):
    with pytest.raises(ParseError):
        P(text)


@given(patterns_k3)
def test_pattern_serialization_round_trip(p):
    assert P(str(p)) == p


def test_serializer_sorts_sets():
    assert str(P("132|X=1,0|Y=2")) == "132|X=0,1|Y=2"


def test_pattern_validation():
    with pytest.raises(ValueError):
        BiVincularPattern.of("12", X=[3])
    with pytest.raises(ValueError):
        BiVincularPattern(Permutation(()))


@pytest.mark.parametrize("k, count", [(1, 16), (2, 128), (3, 1536)])
def test_enumerate_patterns_count(k, count):
    pats = enumerate_patterns(k)
    assert len(pats) == len(set(pats)) == count


@pytest.mark.parametrize("k", [0, 5])
def test_enumerate_patterns_guard(k):
    with pytest.raises(ValueError):
        enumerate_patterns(k)


@pytest.mark.parametrize(
    "pi, pattern, expected",
    [
        ((2, 5, 1, 4, 3), "132|X=0,1|Y=2", 1),
        ((1, 2, 3), "12|X=|Y=", 3),
        ((3, 2, 1), "12|X=|Y=", 0),
        ((1, 3, 2), "21|X=1|Y=1", 1),
        ((1,), "12|X=|Y=", 0),
        ((1, 2, 3), "123|X=0,1,2,3|Y=0,1,2,3", 1),
        ((2, 1), "1|X=0|Y=", 1),
        ((2, 1), "1|X=|Y=0", 1),
        ((), "1|X=|Y=", 0),
    ],
)
def test_count_occurrences_examples(pi, pattern, expected):
    assert count_occurrences(pi, P(pattern)) == expected
    assert contains(pi, P(pattern)) == (expected > 0)


def test_example_occurrence_positions():
    # pi_1 < pi_2 = pi_k + 1 with the first two letters adjacent and leading
    assert occurrences((2, 5, 1, 4, 3), P("132|X=0,1|Y=2")) == [(1, 2, 4)]


@pytest.mark.parametrize("n", range(0, 8))
def test_classical_patterns_match_naive_matcher(n):
    perms = all_perms(n)
    for k in (1, 2, 3):
        for sigma in itertools.permutations(range(1, k + 1)):
            p = BiVincularPattern(Permutation(sigma))
            for pi in perms if n < 7 else perms[::7]:
                assert count_occurrences(pi, p) == naive_classical_count(pi, sigma)


@pytest.mark.parametrize("n", range(0, 6))
def test_backtracking_matches_index_scan(n):
    for pi in all_perms(n):
        for p in enumerate_patterns(2) + enumerate_patterns(3)[::5]:
            assert count_occurrences(pi, p) == len(occurrences(pi, p))


@settings(max_examples=300)
@given(small_perms, patterns_k3)
def test_boundary_conventions_on_found_occurrences(pi, p):
    n = len(pi)
    for occ in occurrences(pi, p):
        letters = sorted(pi[i - 1] for i in occ)
        if 0 in p.X:
            assert occ[0] == 1
        if p.k in p.X:
            assert occ[-1] == n
        if 0 in p.Y:
            assert letters[0] == 1
        if p.k in p.Y:
            assert letters[-1] == n
        for x in p.X - {0, p.k}:
            assert occ[x] == occ[x - 1] + 1
        for y in p.Y - {0, p.k}:
            assert letters[y] == letters[y - 1] + 1


@pytest.mark.parametrize(
    "word, expected",
    [
        ("i", "132|X=2|Y=0,1"),
        ("r", "231|X=2,3|Y=2"),
        ("c", "312|X=0,1|Y=1"),
        ("rc", "213|X=2,3|Y=1"),
        ("irc", "213|X=1|Y=2,3"),
        ("ir", "231|X=1|Y=0,1"),
    ],
)
def test_pattern_symmetry_examples(word, expected):
    assert pattern_symmetry(P("132|X=0,1|Y=2"), word) == P(expected)


def test_pattern_symmetry_complement_of_12():
    assert pattern_symmetry(P("12|X=|Y="), "c") == P("21|X=|Y=")


def test_pattern_symmetry_unknown_letter():
    with pytest.raises(ValueError):
        pattern_symmetry(P("12|X=|Y="), "q")


def test_symmetry_class_of_example_pattern():
    expected = {
        "132|X=0,1|Y=2", "132|X=2|Y=0,1", "213|X=2,3|Y=1", "213|X=1|Y=2,3",
        "231|X=2,3|Y=2", "231|X=1|Y=0,1", "312|X=0,1|Y=1", "312|X=2|Y=2,3",
    }
    assert {str(p) for p in symmetry_class(P("132|X=0,1|Y=2"))} == expected


def test_symmetry_class_small_cases():
    c = symmetry_class(P("12|X=|Y="))
    assert c == {P("12|X=|Y="), P("21|X=|Y=")}
    assert canonical_representative(c) == P("12|X=|Y=")
    assert canonical_representative({P("21|X=|Y=")}) == P("21|X=|Y=")
    assert canonical_representative(symmetry_class(P("132|X=0,1|Y=2"))) == P("132|X=0,1|Y=2")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_symmetry_classes_partition(k):
    seen = {}
    for p in enumerate_patterns(k):
        c = symmetry_class(p)
        assert 8 % len(c) == 0
        for q in c:
            assert seen.setdefault(q, c) == c


def test_group_words_form_a_group():
    p = P("1342|X=0,3|Y=1,4")
    images = {pattern_symmetry(p, w) for w in GROUP_WORDS}
    for w in GROUP_WORDS:
        for a in "irc":
            assert pattern_symmetry(p, w + a) in images


def _apply_rows(block: np.ndarray, a: str) -> np.ndarray:
    n = block.shape[1]
    if a == "r":
        return block[:, ::-1]
    if a == "c":
        return (n + 1 - block).astype(np.int8)
    inv = np.empty_like(block)
    rows = np.arange(len(block))[:, None]
    inv[rows, block.astype(np.int64) - 1] = np.arange(1, n + 1, dtype=np.int8)
    return inv


@pytest.mark.parametrize("n", range(1, 7))
def test_equivariance_of_occurrence_counts(n):
    block = engine.perm_block(n)
    images = {a: _apply_rows(block, a) for a in "irc"}
    assert list(map(tuple, images["i"][:3])) == [
        tuple(apply_symmetry(Permutation(r), "i")) for r in block[:3]
    ]
    for k in (1, 2, 3):
        for p in enumerate_patterns(k):
            base = engine.occurrence_counts(block, p)
            for a in "irc":
                q = pattern_symmetry(p, a)
                assert np.array_equal(base, engine.occurrence_counts(images[a], q)), (p, a)
