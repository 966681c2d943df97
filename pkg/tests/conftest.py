import itertools
from collections import Counter

import pytest

from mapenum.oriented import build_sigma, classify
from mapenum.perm import Permutation, compose, matchings
from mapenum.unoriented import (
    build_doubled,
    classify_unoriented,
    lift,
    signed_matchings,
)

# filled by tests/test_acceptance.py, printed in the terminal summary
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def brute_oriented(profile):
    """Genus histogram by classifying every matching one at a time in pure Python."""
    sigma = build_sigma(profile)
    bins = Counter()
    for m in matchings(sigma.size):
        g = classify(sigma, m)
        if g is not None:
            bins[g] += 1
    return dict(sorted(bins.items()))


def brute_oriented_faces(profile):
    sigma = build_sigma(profile)
    bins = Counter()
    for m in matchings(sigma.size):
        bins[compose(sigma, m.to_permutation()).cycle_count()] += 1
    return dict(sorted(bins.items()))


def brute_unoriented(profile):
    space, sigma = build_doubled(profile)
    bins = Counter()
    for sm in signed_matchings(space.edges):
        chi = classify_unoriented(space, sigma, lift(space, sm))
        if chi is not None:
            bins[chi] += 1
    return dict(sorted(bins.items()))


def brute_involution_count(n):
    """Fixed-point-free involutions counted straight from all n! permutations."""
    count = 0
    for images in itertools.permutations(range(1, n + 1)):
        p = Permutation(images)
        if all(p(x) != x and p(p(x)) == x for x in range(1, n + 1)):
            count += 1
    return count


@pytest.fixture
def paper_sigma():
    return Permutation.from_string("(1 2 3)(4 5 6)(7 8 9 10)")
