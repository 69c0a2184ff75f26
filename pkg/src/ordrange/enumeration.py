"""Enumeration of the semigroup of monotone self-maps with restricted range.

For a chain of size n and a range set Y, the semigroup consists of all
weakly increasing length-n sequences over the members of Y; there are
C(n+r-1, r-1) of them for r = |Y|.  Enumeration order is fixed as
lexicographic on image sequences so element ids are stable across runs.
"""

from __future__ import annotations

import math
import os
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .chain import (
    ChainMap,
    DomainError,
    GuardExceeded,
    RangeSet,
    identity,
    image,
)

# Above this size products are memoized on demand instead of precomputed.
FULL_TABLE_LIMIT = 512

DEFAULT_SEARCH_GUARD = 60
DEFAULT_CLOSURE_GUARD = 5000


def search_guard() -> int:
    """Element-count limit for subset searches (env ORDRANGE_MAX_ELEMENTS)."""
    return int(os.environ.get("ORDRANGE_MAX_ELEMENTS", DEFAULT_SEARCH_GUARD))


def closure_guard() -> int:
    """Element-count limit for closure computations (same env override)."""
    raw = os.environ.get("ORDRANGE_MAX_ELEMENTS")
    return DEFAULT_CLOSURE_GUARD if raw is None else int(raw)


def count_maps(n: int, r: int) -> int:
    """Number of monotone maps on {1..n} with values in an r-element set."""
    if n < 1:
        raise DomainError(f"chain size must be positive, got {n}")
    if not 1 <= r <= n:
        raise DomainError(f"range size {r} outside 1..{n}")
    return math.comb(n + r - 1, r - 1)


class SemigroupTable:
    """An enumerated finite semigroup of ChainMaps with id-based products.

    Elements are pairwise distinct and the set must be closed under
    composition.  Products are looked up through a full table when the
    semigroup has at most FULL_TABLE_LIMIT elements and memoized on
    demand otherwise; both paths give identical answers (the memo is a
    plain dict, safe for concurrent readers under CPython).
    """

    def __init__(self, elements: Sequence[ChainMap], *, check_closed: bool = True,
                 force_memo: bool = False):
        self.elements: tuple[ChainMap, ...] = tuple(elements)
        if not self.elements:
            raise DomainError("a semigroup table needs at least one element")
        self.n = self.elements[0].n
        self.index: dict[tuple[int, ...], int] = {}
        for i, el in enumerate(self.elements):
            if el.n != self.n:
                raise DomainError("mixed chain sizes in one table")
            if el.images in self.index:
                raise DomainError(f"duplicate element {el!r}")
            self.index[el.images] = i
        ident = identity(self.n).images
        self.has_identity = ident in self.index
        self._table: list[list[int]] | None = None
        self._memo: dict[int, int] = {}
        if not force_memo and len(self.elements) <= FULL_TABLE_LIMIT:
            self._fill_table()  # raises if any product escapes
        elif check_closed:
            self._check_closed()

    def _compose_raw(self, i: int, j: int) -> int:
        gi = self.elements[j].images
        prod = tuple(gi[v - 1] for v in self.elements[i].images)
        try:
            return self.index[prod]
        except KeyError:
            raise DomainError(
                f"product {list(prod)} escapes the table; not closed") from None

    def _fill_table(self) -> None:
        size = len(self.elements)
        rows = []
        for i in range(size):
            rows.append([self._compose_raw(i, j) for j in range(size)])
        self._table = rows

    def _check_closed(self) -> None:
        for i in range(len(self.elements)):
            for j in range(len(self.elements)):
                self._compose_raw(i, j)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def id_of(self, el: ChainMap) -> int:
        try:
            return self.index[el.images]
        except KeyError:
            raise DomainError(f"{el!r} is not an element of this table") from None

    def product(self, i: int, j: int) -> int:
        """Id of elements[i] followed by elements[j]."""
        if self._table is not None:
            return self._table[i][j]
        key = i * len(self.elements) + j
        got = self._memo.get(key)
        if got is None:
            got = self._compose_raw(i, j)
            self._memo[key] = got
        return got

    def identity_id(self) -> int | None:
        if not self.has_identity:
            return None
        return self.index[identity(self.n).images]

    def closure(self, generator_ids: Iterable[int]) -> frozenset[int]:
        """Ids of all products of the given generators (any length >= 1)."""
        gens = sorted(set(generator_ids))
        for g in gens:
            if not 0 <= g < len(self.elements):
                raise DomainError(f"generator id {g} out of range")
        seen = set(gens)
        frontier = list(gens)
        while frontier:
            fresh = []
            for x in frontier:
                for g in gens:
                    p = self.product(x, g)
                    if p not in seen:
                        seen.add(p)
                        fresh.append(p)
            frontier = fresh
        return frozenset(seen)


def enumerate_elements(n: int, Y: RangeSet) -> list[ChainMap]:
    """All monotone maps on {1..n} with values in Y, in lexicographic order."""
    if Y.n != n:
        raise DomainError(f"range set lives on chain {Y.n}, not {n}")
    return [ChainMap(n, seq)
            for seq in combinations_with_replacement(Y.members, n)]


def enumerate_semigroup(n: int, Y: RangeSet, *, guard: int | None = None) -> SemigroupTable:
    """SemigroupTable of all monotone maps into Y, with stable element ids."""
    limit = closure_guard() if guard is None else guard
    total = count_maps(n, len(Y))
    if total > limit:
        raise GuardExceeded(
            f"semigroup has {total} elements, above the guard {limit}")
    return SemigroupTable(enumerate_elements(n, Y), check_closed=False)


def maps_with_image_size(n: int, Y: RangeSet, k: int) -> list[ChainMap]:
    """The elements whose image has exactly k values.

    There are C(n-1, k-1) * C(r, k) of them: a convex kernel of weight k
    paired with a k-subset of Y.
    """
    if not 1 <= k <= len(Y):
        raise DomainError(f"image size {k} outside 1..{len(Y)}")
    return [f for f in enumerate_elements(n, Y) if len(image(f)) == k]
