"""Value types for order-preserving transformations of a finite chain.

Points of the chain {1 < 2 < ... < n} are 1-indexed everywhere; any
0-indexing is an implementation detail that never crosses the API.
All types are immutable values and every operation here is pure, so
instances are safe to share between threads.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable


class DomainError(ValueError):
    """A value violates a structural invariant (bad input, not a bug)."""


class DimensionMismatch(DomainError):
    """Two objects live on chains of different sizes."""


class GuardExceeded(RuntimeError):
    """A brute-force search guard was exceeded.

    Raise the limit through the ORDRANGE_MAX_ELEMENTS environment
    variable if the run is intentional.
    """


@dataclass(frozen=True)
class ChainMap:
    """A total order-preserving transformation of {1..n}.

    ``images[x-1]`` is the image of point ``x``.  The sequence must be
    weakly increasing with values in 1..n; invalid data is rejected at
    construction, never normalized.
    """

    n: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if self.n < 1:
            raise DomainError(f"chain size must be positive, got {self.n}")
        if len(self.images) != self.n:
            raise DomainError(
                f"expected {self.n} images, got {len(self.images)}")
        prev = 1
        for v in self.images:
            if not isinstance(v, int) or not 1 <= v <= self.n:
                raise DomainError(f"image {v!r} outside 1..{self.n}")
            if v < prev:
                raise DomainError(
                    f"images {list(self.images)} are not weakly increasing")
            prev = v

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "ChainMap":
        images = tuple(images)
        return cls(len(images), images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise DomainError(f"point {x} outside 1..{self.n}")
        return self.images[x - 1]

    def __repr__(self) -> str:
        return f"ChainMap({list(self.images)})"

    def is_idempotent(self) -> bool:
        return all(self.images[v - 1] == v for v in set(self.images))


@dataclass(frozen=True)
class PartialMap:
    """An order-preserving map from a subchain of {1..n} into {1..n}.

    The domain is strictly increasing, the image sequence weakly
    increasing; on a chain that is exactly order-preservation.
    """

    n: int
    domain: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "images", tuple(self.images))
        if self.n < 1:
            raise DomainError(f"chain size must be positive, got {self.n}")
        if not self.domain:
            raise DomainError("partial map needs a nonempty domain")
        if len(self.domain) != len(self.images):
            raise DomainError(
                f"domain has {len(self.domain)} points but "
                f"{len(self.images)} images")
        prev = 0
        for a in self.domain:
            if not 1 <= a <= self.n:
                raise DomainError(f"domain point {a} outside 1..{self.n}")
            if a <= prev:
                raise DomainError(
                    f"domain {list(self.domain)} is not strictly increasing")
            prev = a
        prev = 1
        for b in self.images:
            if not 1 <= b <= self.n:
                raise DomainError(f"image {b} outside 1..{self.n}")
            if b < prev:
                raise DomainError(
                    f"images {list(self.images)} are not weakly increasing")
            prev = b

    def __call__(self, a: int) -> int:
        i = bisect_left(self.domain, a)
        if i == len(self.domain) or self.domain[i] != a:
            raise DomainError(f"point {a} not in domain {list(self.domain)}")
        return self.images[i]

    def __len__(self) -> int:
        return len(self.domain)

    def is_total(self) -> bool:
        return len(self.domain) == self.n

    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.images, self.images[1:]))

    def inverse(self) -> "PartialMap":
        """Inverse of an injective map (domain and images swap roles)."""
        if not self.is_injective():
            raise DomainError("only injective partial maps can be inverted")
        return PartialMap(self.n, self.images, self.domain)

    def __repr__(self) -> str:
        pairs = ", ".join(f"{a}->{b}" for a, b in zip(self.domain, self.images))
        return f"PartialMap({pairs})"


@dataclass(frozen=True)
class RangeSet:
    """A nonempty subset of {1..n}, kept sorted strictly increasing."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        if self.n < 1:
            raise DomainError(f"chain size must be positive, got {self.n}")
        if not self.members:
            raise DomainError("range set must be nonempty")
        prev = 0
        for y in self.members:
            if not 1 <= y <= self.n:
                raise DomainError(f"member {y} outside 1..{self.n}")
            if y <= prev:
                raise DomainError(
                    f"members {list(self.members)} are not strictly increasing")
            prev = y

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "RangeSet":
        return cls(n, tuple(members))

    @property
    def r(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, y: int) -> bool:
        i = bisect_left(self.members, y)
        return i < len(self.members) and self.members[i] == y

    def position(self, y: int) -> int:
        """1-based position of ``y`` among the sorted members."""
        i = bisect_left(self.members, y)
        if i == len(self.members) or self.members[i] != y:
            raise DomainError(f"{y} is not a member of {list(self.members)}")
        return i + 1

    def without(self, i: int) -> tuple[int, ...]:
        """Members minus the i-th one (1-based)."""
        if not 1 <= i <= len(self.members):
            raise DomainError(f"index {i} outside 1..{len(self.members)}")
        return self.members[: i - 1] + self.members[i:]

    def __repr__(self) -> str:
        return f"RangeSet(n={self.n}, {{{', '.join(map(str, self.members))}}})"


@dataclass(frozen=True)
class ConvexPartition:
    """A partition of {1..n} into consecutive intervals.

    Stored as the strictly increasing right endpoints of the blocks,
    ending at n.  Two kernels are equal iff their boundary tuples are.
    """

    n: int
    boundaries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        if self.n < 1:
            raise DomainError(f"chain size must be positive, got {self.n}")
        if not self.boundaries or self.boundaries[-1] != self.n:
            raise DomainError(
                f"boundaries {list(self.boundaries)} must end at {self.n}")
        prev = 0
        for b in self.boundaries:
            if b <= prev:
                raise DomainError(
                    f"boundaries {list(self.boundaries)} are not strictly "
                    "increasing")
            prev = b

    @property
    def weight(self) -> int:
        return len(self.boundaries)

    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Blocks as (first, last) point pairs, in chain order."""
        out = []
        start = 1
        for b in self.boundaries:
            out.append((start, b))
            start = b + 1
        return tuple(out)

    def block_of(self, x: int) -> int:
        """1-based index of the block containing ``x``."""
        if not 1 <= x <= self.n:
            raise DomainError(f"point {x} outside 1..{self.n}")
        return bisect_left(self.boundaries, x) + 1

    def refines(self, other: "ConvexPartition") -> bool:
        """True iff every block of ``self`` sits inside a block of ``other``."""
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} != {other.n}")
        mine = set(self.boundaries)
        return all(b in mine for b in other.boundaries)

    def split_block(self, t: int) -> "ConvexPartition":
        """Split off the first point of block ``t`` (1-based) as its own block."""
        first, last = self.blocks()[t - 1]
        if first == last:
            raise DomainError(f"block {t} is a singleton, cannot split")
        extra = first
        bs = sorted(self.boundaries + (extra,))
        return ConvexPartition(self.n, tuple(bs))

    def __repr__(self) -> str:
        parts = "|".join(
            ",".join(map(str, range(s, e + 1))) for s, e in self.blocks())
        return f"ConvexPartition({parts})"


# ---------------------------------------------------------------------------
# elementary operations


def identity(n: int) -> ChainMap:
    return ChainMap(n, tuple(range(1, n + 1)))


def constant(n: int, y: int) -> ChainMap:
    """The constant transformation with image {y}."""
    if not 1 <= y <= n:
        raise DomainError(f"value {y} outside 1..{n}")
    return ChainMap(n, (y,) * n)


def compose(f: ChainMap, g: ChainMap) -> ChainMap:
    """Apply ``f`` first, then ``g``: result(x) = g(f(x))."""
    if f.n != g.n:
        raise DimensionMismatch(f"cannot compose maps on chains {f.n} and {g.n}")
    gi = g.images
    return ChainMap(f.n, tuple(gi[v - 1] for v in f.images))


def image(f: ChainMap) -> RangeSet:
    """The set of values taken by ``f``, as a RangeSet."""
    vals = []
    prev = 0
    for v in f.images:
        if v != prev:
            vals.append(v)
            prev = v
    return RangeSet(f.n, tuple(vals))


def kernel(f: ChainMap) -> ConvexPartition:
    """The fiber partition of ``f``; blocks are consecutive intervals."""
    bounds = [x for x in range(1, f.n) if f.images[x - 1] != f.images[x]]
    bounds.append(f.n)
    return ConvexPartition(f.n, tuple(bounds))


def fixed_points(f: ChainMap) -> frozenset[int]:
    return frozenset(x for x in range(1, f.n + 1) if f.images[x - 1] == x)


def restrict(f: ChainMap, points: Iterable[int]) -> PartialMap:
    """The restriction of ``f`` to a nonempty set of points."""
    dom = tuple(sorted(set(points)))
    if not dom:
        raise DomainError("cannot restrict to an empty set")
    return PartialMap(f.n, dom, tuple(f.images[a - 1] for a in dom))


def floor_extension(theta: PartialMap) -> ChainMap:
    """Total extension sending each gap point to its nearest lower neighbour.

    Every x takes the image of the greatest domain point <= x; points
    below the whole domain clamp to the first image.  A one-point
    domain extends to the constant map.
    """
    dom, img, n = theta.domain, theta.images, theta.n
    if len(dom) == 1:
        return constant(n, img[0])
    out = []
    for x in range(1, n + 1):
        j = bisect_right(dom, x) - 1
        out.append(img[j] if j >= 0 else img[0])
    return ChainMap(n, tuple(out))


def ceiling_extension(theta: PartialMap) -> ChainMap:
    """Total extension sending each gap point to its nearest upper neighbour.

    Mirror of :func:`floor_extension`: every x takes the image of the
    least domain point >= x, clamping to the last image above the domain.
    """
    dom, img, n = theta.domain, theta.images, theta.n
    if len(dom) == 1:
        return constant(n, img[0])
    k = len(dom)
    out = []
    for x in range(1, n + 1):
        j = bisect_left(dom, x)
        out.append(img[j] if j < k else img[k - 1])
    return ChainMap(n, tuple(out))


def reflect(f: ChainMap) -> ChainMap:
    """Conjugate ``f`` by the reflection x -> n+1-x of the chain.

    The reflection is an involutive automorphism of the whole semigroup
    of order-preserving maps: reflect(fg) = reflect(f) reflect(g).
    """
    n = f.n
    return ChainMap(n, tuple(n + 1 - f.images[n - x] for x in range(1, n + 1)))


def reflect_partial(theta: PartialMap) -> PartialMap:
    """Reflection conjugate of a partial map; swaps floor/ceiling extensions."""
    n = theta.n
    dom = tuple(n + 1 - a for a in reversed(theta.domain))
    img = tuple(n + 1 - b for b in reversed(theta.images))
    return PartialMap(n, dom, img)


def reflect_set(Y: RangeSet) -> RangeSet:
    """The mirror image {n+1-y : y in Y} of a range set."""
    n = Y.n
    return RangeSet(n, tuple(n + 1 - y for y in reversed(Y.members)))


def maps_into(f: ChainMap, Y: RangeSet) -> bool:
    """True iff every value of ``f`` lies in ``Y``."""
    if f.n != Y.n:
        raise DimensionMismatch(f"map on {f.n} vs range set on {Y.n}")
    return all(v in Y for v in set(f.images))
