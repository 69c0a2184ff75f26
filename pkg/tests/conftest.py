"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's own enumeration and
closure code paths: maps are generated as raw tuples and filtered by
definition, so expected values in the tests come from a second route.
"""

from itertools import combinations, product

import pytest

from ordrange import RangeSet


def brute_force_maps(n, members):
    """All monotone maps into the member set, by filtering every function."""
    out = []
    for seq in product(range(1, n + 1), repeat=n):
        if all(a <= b for a, b in zip(seq, seq[1:])) and set(seq) <= set(members):
            out.append(seq)
    return sorted(out)


def brute_force_closure(seqs):
    """Closure of a set of image tuples under composition, by saturation."""
    done = set(seqs)
    while True:
        fresh = set()
        for f in done:
            for g in done:
                h = tuple(g[v - 1] for v in f)
                if h not in done:
                    fresh.add(h)
        if not fresh:
            return done
        done |= fresh


def range_sets(n, smallest=1, largest=None):
    """Every nonempty subset of {1..n} with size in the given band."""
    largest = n if largest is None else largest
    for size in range(smallest, largest + 1):
        for members in combinations(range(1, n + 1), size):
            yield RangeSet(n, members)


@pytest.fixture
def y13():
    return RangeSet(3, (1, 3))
