import itertools

import pytest

from bivinc.perms import Permutation


def naive_classical_count(pi, sigma) -> int:
    """Occurrences of a classical pattern by comparing every pair of letters."""
    k = len(sigma)
    total = 0
    for combo in itertools.combinations(range(len(pi)), k):
        letters = [pi[c] for c in combo]
        if all((letters[a] < letters[b]) == (sigma[a] < sigma[b])
               for a in range(k) for b in range(a + 1, k)):
            total += 1
    return total


def all_perms(n):
    return [Permutation._trusted(t) for t in itertools.permutations(range(1, n + 1))]


@pytest.fixture
def perms_upto():
    return lambda N: [p for n in range(N + 1) for p in all_perms(n)]


def bottom_anchored_pairs():
    """(123,X,{0}∪Y), (132,X,{0}∪Y) for every admitted (X, Y)."""
    from bivinc.patterns import BiVincularPattern

    excluded_x = [{1}, {3}, {0, 1}, {0, 3}]
    excluded_y = [{0, 1}, {0, 3}]
    out = []
    for xs in _subsets(range(4)):
        for ys in _subsets(range(1, 4)):
            y = {0} | ys
            if xs in excluded_x and y in excluded_y:
                continue
            out.append((BiVincularPattern.of("123", X=xs, Y=y), BiVincularPattern.of("132", X=xs, Y=y)))
    return out


def y1_y3_pairs():
    """(σ,X,{1}), (σ,X,{3}) for σ in {123, 132} and the five listed X."""
    from bivinc.patterns import BiVincularPattern

    out = []
    for sigma in ("123", "132"):
        for xs in ({0}, {0, 2}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}):
            out.append((BiVincularPattern.of(sigma, X=xs, Y={1}), BiVincularPattern.of(sigma, X=xs, Y={3})))
    return out


def _subsets(items):
    items = list(items)
    return [set(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record ``(criterion, passed, seconds, detail)`` for the summary lines."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])
    return lambda *row: lines.append(row)


def pytest_terminal_summary(terminalreporter, config):
    rows = config.stash.get(ACCEPTANCE, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, seconds, detail in sorted(rows):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {criterion:2d}: {status}  {seconds:7.2f}s  {detail}")
