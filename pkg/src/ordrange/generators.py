"""Generating sets and rank of the semigroup of monotone maps into Y.

Writing Y = {y_1 < ... < y_r} with 1 < r < n, the rank of the semigroup
is C(n-1, r-1) + (number of captive members of Y).  A member y is
*captive* when y is an endpoint of the chain or both of its chain
neighbours lie in Y; a captive value can only appear in the image of a
product when some factor already misses exactly the right value, which
forces one extra generator per captive member beyond the C(n-1, r-1)
maps whose image is all of Y.

The constructive machinery mirrors that picture: factorizations that
raise image size, retractions that shuttle the missing value of a
corank-one regular element up or down, and the case analysis that
assembles a minimum generating set.  A definition-based subset search
provides the independent minimality oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chain import (
    ChainMap,
    ConvexPartition,
    DomainError,
    GuardExceeded,
    PartialMap,
    RangeSet,
    ceiling_extension,
    compose,
    floor_extension,
    image,
    kernel,
    maps_into,
)
from .enumeration import (
    SemigroupTable,
    count_maps,
    enumerate_semigroup,
    search_guard,
)
from .regularity import is_regular

FULL_IMAGE = "full_image"
FLOOR = "floor_retraction"
CEILING = "ceiling_retraction"
PREFIX_SHIFT = "prefix_shift"
SUFFIX_SHIFT = "suffix_shift"


# ---------------------------------------------------------------------------
# captive members and the rank formula


def captive_set(n: int, Y: RangeSet) -> tuple[int, ...]:
    """The captive members of Y: endpoints of the chain, or members whose
    chain neighbours both lie in Y.  May be empty."""
    if Y.n != n:
        raise DomainError(f"range set lives on chain {Y.n}, not {n}")
    out = []
    for y in Y:
        if y in (1, n) or (y - 1 in Y and y + 1 in Y):
            out.append(y)
    return tuple(out)


def rank_by_formula(n: int, Y: RangeSet) -> int:
    """Minimum size of a generating set.

    For 1 < r < n this is C(n-1, r-1) + #captive(Y).  The degenerate
    ends follow the usual conventions: a one-point range gives the
    trivial semigroup (rank 1) and the full range gives the monoid of
    all monotone maps (rank n, counting its identity).
    """
    import math

    r = len(Y)
    if Y.n != n:
        raise DomainError(f"range set lives on chain {Y.n}, not {n}")
    if r == 1:
        return 1
    if r == n:
        return n
    return math.comb(n - 1, r - 1) + len(captive_set(n, Y))


# ---------------------------------------------------------------------------
# building blocks


def _blocks_and_values(alpha: ChainMap) -> tuple[list[tuple[int, int]], list[int]]:
    blocks = list(kernel(alpha).blocks())
    return blocks, [alpha(s) for s, _ in blocks]


def _map_from_blocks(n: int, blocks: list[tuple[int, int]],
                     values: list[int]) -> ChainMap:
    out = [0] * n
    for (s, e), v in zip(blocks, values):
        for x in range(s, e + 1):
            out[x - 1] = v
    return ChainMap(n, tuple(out))


def full_image_map(partition: ConvexPartition, Y: RangeSet) -> ChainMap:
    """The unique monotone map with the given kernel and image all of Y."""
    if partition.weight != len(Y):
        raise DomainError(
            f"partition has {partition.weight} blocks for {len(Y)} values")
    return _map_from_blocks(
        partition.n, list(partition.blocks()), list(Y.members))


def full_image_maps(n: int, Y: RangeSet) -> list[ChainMap]:
    """All C(n-1, r-1) maps whose image is the whole of Y.

    One per convex partition of weight r, ordered lexicographically by
    block boundaries; block t is sent to the t-th member of Y.
    """
    r = len(Y)
    if r > n:
        raise DomainError(f"{r} blocks cannot partition {n} points")
    out = []
    for cuts in combinations(range(1, n), r - 1):
        part = ConvexPartition(n, cuts + (n,))
        out.append(full_image_map(part, Y))
    return out


def _retraction_seed(Y: RangeSet, i: int) -> PartialMap:
    members = Y.without(i)
    return PartialMap(Y.n, members, members)


def floor_retraction(n: int, Y: RangeSet, i: int) -> ChainMap:
    """Idempotent fixing Y minus its i-th member, pulling y_i downward."""
    if Y.n != n:
        raise DomainError(f"range set lives on chain {Y.n}, not {n}")
    return floor_extension(_retraction_seed(Y, i))


def ceiling_retraction(n: int, Y: RangeSet, i: int) -> ChainMap:
    """Idempotent fixing Y minus its i-th member, pushing y_i upward."""
    if Y.n != n:
        raise DomainError(f"range set lives on chain {Y.n}, not {n}")
    return ceiling_extension(_retraction_seed(Y, i))


def prefix_shift_generator(n: int, Y: RangeSet, i: int) -> ChainMap:
    """One map replacing both low-end retractions when Y starts 1..i-1.

    Defined for 3 <= i <= r: the first i-2 members shift up one slot,
    the tail from y_i on stays fixed; the ceiling extension misses y_1.
    """
    r = len(Y)
    if not 3 <= i <= r:
        raise DomainError(f"index {i} outside 3..{r}")
    ys = Y.members
    dom = ys[: i - 2] + ys[i - 1:]
    img = ys[1: i - 1] + ys[i - 1:]
    return ceiling_extension(PartialMap(n, dom, img))


def suffix_shift_generator(n: int, Y: RangeSet, j: int) -> ChainMap:
    """Mirror of the prefix shift for a top-end run; misses y_r.

    Defined for 2 <= j <= r-1: members up to y_{j-1} stay fixed, the
    tail from y_{j+1} on shifts down one slot; floor extension.
    """
    r = len(Y)
    if not 2 <= j <= r - 1:
        raise DomainError(f"index {j} outside 2..{r - 1}")
    ys = Y.members
    dom = ys[: j - 1] + ys[j:]
    img = ys[: j - 1] + ys[j - 1: r - 1]
    return floor_extension(PartialMap(n, dom, img))


# ---------------------------------------------------------------------------
# factorizations


def missing_index(alpha: ChainMap, Y: RangeSet) -> int:
    """For a map whose image misses exactly one member of Y, its 1-based index."""
    im = set(image(alpha).members)
    gone = [t for t, y in enumerate(Y.members, start=1) if y not in im]
    if len(gone) != 1 or len(im) != len(Y) - 1:
        raise DomainError(
            f"image size {len(im)} is not {len(Y) - 1}; not corank one")
    return gone[0]


def factor_through_full_image(alpha: ChainMap, Y: RangeSet) -> tuple[ChainMap, ChainMap]:
    """Split a corank-one map as (full-image map) * (regular corank-one map).

    The left factor splits the first non-singleton kernel block of alpha
    at its least point; the right factor is the floor extension of the
    position-wise bijection between Y-minus-one-value sets, hence regular
    with image size r-1.
    """
    if not maps_into(alpha, Y):
        raise DomainError(f"{alpha!r} does not map into {list(Y.members)}")
    r = len(Y)
    miss = missing_index(alpha, Y)
    part = kernel(alpha)
    sizes = [e - s + 1 for s, e in part.blocks()]
    big = next(t for t, size in enumerate(sizes, start=1) if size >= 2)
    beta = full_image_map(part.split_block(big), Y)
    theta = PartialMap(alpha.n, Y.without(big + 1), Y.without(miss))
    gamma = floor_extension(theta)
    assert compose(beta, gamma) == alpha
    assert len(image(beta)) == r and len(image(gamma)) == r - 1
    assert is_regular(gamma, Y)
    return beta, gamma


def factor_raising_rank(alpha: ChainMap, Y: RangeSet) -> tuple[ChainMap, ChainMap]:
    """Split a map of image size k < r-1 into two factors of image size k+1.

    Two values u < v of Y missing from the image are woven in: the left
    factor splits the first non-singleton kernel block and exposes u or
    v, the right factor (a floor extension) folds it back.  The case
    split depends on where the split block sits relative to the gaps
    holding u and v.
    """
    if not maps_into(alpha, Y):
        raise DomainError(f"{alpha!r} does not map into {list(Y.members)}")
    r = len(Y)
    blocks, a = _blocks_and_values(alpha)
    k = len(a)
    if k >= r - 1:
        raise DomainError(f"image size {k} is not below {r - 1}")
    missing = [y for y in Y if y not in set(a)]
    u, v = missing[0], missing[1]
    ell = sum(1 for t in a if t < u)
    m = sum(1 for t in a if t < v)
    sizes = [e - s + 1 for s, e in blocks]
    j = next(t for t, size in enumerate(sizes, start=1) if size >= 2)
    part = kernel(alpha).split_block(j)
    n = alpha.n

    if j <= ell:
        if j == ell:
            bv = a[: ell - 1] + [a[ell - 1], u] + a[ell:]
            dom = a[:m] + [v] + a[m:]
            img = list(dom)
        else:
            bv = a[: j - 1] + [a[j - 1], a[j]] + a[j + 1: ell] + [u] + a[ell:]
            dom = a[:j] + a[j + 1: ell] + [u] + a[ell: m] + [v] + a[m:]
            img = a[:m] + [v] + a[m:]
    elif j <= m:
        if j == ell + 1:
            bv = a[: ell] + [u, a[ell]] + a[ell + 1:]
            dom = a[: ell] + [u] + a[ell + 1: m] + [v] + a[m:]
            img = a[: ell] + [a[ell]] + a[ell + 1: m] + [v] + a[m:]
        else:
            bv = a[: ell] + [u] + a[ell: j - 2] + [a[j - 2], a[j - 1]] + a[j:]
            dom = a[: ell] + [u] + a[ell: j - 1] + a[j: m] + [v] + a[m:]
            img = a[: ell] + [a[ell]] + a[ell + 1: j] + a[j: m] + [v] + a[m:]
    else:
        if j == m + 1:
            bv = a[:m] + [v, a[m]] + a[m + 1:]
            dom = a[: ell] + [u] + a[ell: m] + [v] + a[m + 1:]
            img = a[: ell] + [u] + a[ell: m] + [a[m]] + a[m + 1:]
        else:
            bv = a[:m] + [v] + a[m: j - 2] + [a[j - 2], a[j - 1]] + a[j:]
            dom = a[: ell] + [u] + a[ell: m] + [v] + a[m: j - 1] + a[j:]
            img = a[: ell] + [u] + a[ell: m] + [a[m]] + a[m + 1: j] + a[j:]

    beta = _map_from_blocks(n, list(part.blocks()), bv)
    gamma = floor_extension(PartialMap(n, tuple(dom), tuple(img)))
    assert compose(beta, gamma) == alpha
    assert len(image(beta)) == k + 1 and len(image(gamma)) == k + 1
    return beta, gamma


def slide_to_missing_index(alpha: ChainMap, target: int, Y: RangeSet
                           ) -> tuple[ChainMap, list[tuple[str, int]]]:
    """Rewrite a regular corank-one map with a prescribed missing value.

    Returns (beta, word) with beta regular, missing exactly the target
    member of Y, and alpha equal to beta followed by the word of
    retractions: ceiling retractions with indices target-1 down to m
    when the current missing index m is below the target, floor
    retractions with indices target+1 up to m when above.
    """
    r = len(Y)
    if not 1 <= target <= r:
        raise DomainError(f"target {target} outside 1..{r}")
    if not is_regular(alpha, Y):
        raise DomainError("only regular maps slide between corank classes")
    m = missing_index(alpha, Y)
    blocks, values = _blocks_and_values(alpha)
    word: list[tuple[str, int]] = []
    cur = m
    while cur < target:
        # beta in the class missing y_{cur+1}: block holding y_{cur+1}
        # steps down to y_cur
        word.insert(0, (CEILING, cur))
        values[cur - 1] = Y.members[cur - 1]
        cur += 1
    while cur > target:
        word.insert(0, (FLOOR, cur))
        values[cur - 2] = Y.members[cur - 1]
        cur -= 1
    beta = _map_from_blocks(alpha.n, blocks, values)
    assert missing_index(beta, Y) == target and is_regular(beta, Y)
    check = beta
    for kind, idx in word:
        step = (ceiling_retraction if kind == CEILING else floor_retraction)(
            alpha.n, Y, idx)
        check = compose(check, step)
    assert check == alpha
    return beta, word


# ---------------------------------------------------------------------------
# the generating set


@dataclass(frozen=True)
class TaggedGenerator:
    """A generator together with how it was constructed."""

    element: ChainMap
    kind: str
    index: int | None = None

    def as_dict(self) -> dict:
        return {
            "images": list(self.element.images),
            "kind": self.kind,
            "index": self.index,
        }


@dataclass(frozen=True)
class GeneratingSet:
    n: int
    range_set: RangeSet
    members: tuple[TaggedGenerator, ...]

    def __post_init__(self) -> None:
        seen = set()
        for g in self.members:
            if g.element.images in seen:
                raise DomainError(f"duplicate generator {g.element!r}")
            seen.add(g.element.images)
            if not maps_into(g.element, self.range_set):
                raise DomainError(f"{g.element!r} escapes the range set")

    def elements(self) -> list[ChainMap]:
        return [g.element for g in self.members]

    def __len__(self) -> int:
        return len(self.members)


def first_missing_point(n: int, Y: RangeSet) -> int:
    """Least chain point outside Y; at most r+1 and defined whenever r < n."""
    for x in range(1, n + 1):
        if x not in Y:
            return x
    raise DomainError("the range set covers the whole chain")


def tail_anchor(n: int, Y: RangeSet) -> int:
    """Position j such that Y holds exactly the run n-r+j..n at its top.

    Equals r+1 when n is outside Y, and 1 when Y is one solid run
    ending at n.
    """
    r = len(Y)
    if n not in Y:
        return r + 1
    run = 1
    while run < r and (n - run) in Y:
        run += 1
    if (n - run) in Y:  # run == r and still inside: solid run
        raise DomainError("the range set covers the whole chain")
    return r + 1 - run


def minimum_generating_set(n: int, Y: RangeSet, *, check: bool = True
                           ) -> GeneratingSet:
    """A generating set of the minimum size C(n-1, r-1) + #captive(Y).

    All full-image maps are always needed; the extra generators are one
    retraction (or shift) per captive member, chosen by a case analysis
    on where the least missing chain point i and the top run anchor j
    fall.  Retractions whose index is not captive are dropped: those lie
    in the closure of the full-image maps.  With ``check`` the closure
    is computed and compared against the full semigroup (mandatory
    everywhere the guard allows).
    """
    r = len(Y)
    if Y.n != n:
        raise DomainError(f"range set lives on chain {Y.n}, not {n}")
    if not 1 < r < n:
        raise DomainError(f"need 1 < |Y| < n, got |Y|={r}, n={n}")
    i = first_missing_point(n, Y)
    j = tail_anchor(n, Y)
    captive = set(captive_set(n, Y))

    eps: list[tuple[str, int]] = []
    if i == r + 1:
        eps = [(CEILING, t) for t in range(1, r)]
    else:
        if i == 1:
            tilde: list[int] = []
            shift_low = None
            hats = set(range(2, r + 1))
        elif i == 2:
            tilde = [1]
            shift_low = None
            hats = set(range(2, r + 1))
        else:
            tilde = list(range(2, i - 1))
            shift_low = i
            hats = set(range(i, r + 1))
        shift_high = None
        if j == r + 1:
            hats.discard(r)
        elif 2 <= j <= r - 1:
            hats.discard(j)
            hats.discard(r)
            shift_high = j
        hats = {t for t in hats if Y.members[t - 1] in captive}
        if shift_low is not None:
            eps.append((PREFIX_SHIFT, shift_low))
        eps.extend((CEILING, t) for t in tilde)
        eps.extend((FLOOR, t) for t in sorted(hats))
        if shift_high is not None:
            eps.append((SUFFIX_SHIFT, shift_high))

    members = [
        TaggedGenerator(f, FULL_IMAGE) for f in full_image_maps(n, Y)
    ]
    for kind, idx in eps:
        builder = {
            FLOOR: floor_retraction,
            CEILING: ceiling_retraction,
            PREFIX_SHIFT: prefix_shift_generator,
            SUFFIX_SHIFT: suffix_shift_generator,
        }[kind]
        members.append(TaggedGenerator(builder(n, Y, idx), kind, idx))

    gens = GeneratingSet(n, Y, tuple(members))
    expected = rank_by_formula(n, Y)
    if len(gens) != expected:
        raise AssertionError(
            f"built {len(gens)} generators, formula says {expected}")
    if check:
        table = enumerate_semigroup(n, Y)
        if not generates(gens.elements(), table):
            raise AssertionError("constructed set fails to generate")
    return gens


def generates(elements, table: SemigroupTable) -> bool:
    """True iff the closure of the elements under composition is everything."""
    ids = [table.id_of(el) for el in elements]
    return len(table.closure(ids)) == len(table)


def corank_one_class(table: SemigroupTable, Y: RangeSet, j: int) -> frozenset[int]:
    """Ids of all elements whose image is Y minus its j-th member."""
    want = Y.without(j)
    return frozenset(
        i for i, el in enumerate(table.elements)
        if image(el).members == want)


# ---------------------------------------------------------------------------
# minimality oracle


def minimal_generating_sets(n: int, Y: RangeSet, *, max_elements: int | None = None,
                            witness_limit: int | None = None,
                            restrict: bool | None = None,
                            ) -> tuple[int, list[frozenset[int]]]:
    """Search for a least-size generating set; returns (size, witnesses).

    With ``restrict`` false the search sweeps every subset in ascending
    size order: a genuinely assumption-free oracle, kept for small
    tables.  Otherwise only supersets of the full-image class are tried,
    which is safe because a full-image element can only factor through
    full-image elements with its own kernel and image, i.e. through
    itself, so every generating set contains the whole class.  Witness
    collection stops at ``witness_limit`` sets; minimality is never
    affected because every smaller size is fully exhausted first.
    """
    guard = search_guard() if max_elements is None else max_elements
    total = count_maps(n, len(Y))
    if total > guard:
        raise GuardExceeded(
            f"semigroup has {total} elements, above the guard {guard}")
    table = enumerate_semigroup(n, Y, guard=max(total, guard))
    size = len(table)
    if restrict is None:
        restrict = size > 16

    def sweep(base: list[int], pool: list[int], extra: int) -> list[frozenset[int]]:
        found: list[frozenset[int]] = []
        for combo in combinations(pool, extra):
            ids = base + list(combo)
            if len(table.closure(ids)) == size:
                found.append(frozenset(ids))
                if witness_limit is not None and len(found) >= witness_limit:
                    break
        return found

    if not restrict:
        for s in range(1, size + 1):
            found = sweep([], list(range(size)), s)
            if found:
                return s, found
    else:
        a_ids = [i for i, el in enumerate(table.elements)
                 if len(image(el)) == len(Y)]
        pool = [i for i in range(size) if i not in set(a_ids)]
        # corank-one elements first: witnesses surface sooner, and any
        # witness is verified by the closure itself
        pool.sort(key=lambda i: (-len(image(table.elements[i])), i))
        for extra in range(0, len(pool) + 1):
            found = sweep(a_ids, pool, extra)
            if found:
                return len(a_ids) + extra, found
    raise AssertionError("the whole semigroup failed to generate itself")


def rank_by_search(n: int, Y: RangeSet, *, max_elements: int | None = None) -> int:
    """Minimum cardinality of a generating set, by exhaustive search."""
    rank, _ = minimal_generating_sets(
        n, Y, max_elements=max_elements, witness_limit=1)
    return rank
