"""Rewriting semigroup elements as words over a minimum generating set.

The route follows the structure of the rank proof itself: maps of low
image size are split by :func:`factor_raising_rank` until corank one,
corank-one maps factor through a full-image map times a regular
corank-one map, and the regular part slides to the pivot class fixed by
the least missing chain point, where explicit products of full-image
maps (plus at most one retraction) finish the job.  Retractions that
were pruned from the generating set are themselves rewritten as words
over it.  Every step is verified by multiplying the word back out.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import reduce

from .chain import (
    ChainMap,
    DomainError,
    PartialMap,
    RangeSet,
    ceiling_extension,
    compose,
    floor_extension,
    image,
    kernel,
    maps_into,
    reflect,
    reflect_set,
)
from .generators import (
    CEILING,
    FLOOR,
    FULL_IMAGE,
    PREFIX_SHIFT,
    SUFFIX_SHIFT,
    GeneratingSet,
    ceiling_retraction,
    factor_raising_rank,
    factor_through_full_image,
    first_missing_point,
    floor_retraction,
    full_image_map,
    slide_to_missing_index,
    tail_anchor,
)
from .regularity import is_regular


def product_of(maps: list[ChainMap]) -> ChainMap:
    if not maps:
        raise DomainError("empty word has no product")
    return reduce(compose, maps)


def _lemcr_theta(n: int, Y: RangeSet, i: int) -> ChainMap:
    """Full-image helper splitting the prefix shift into both retractions.

    Needs Y to start with the run 1..i-1 and skip i; the ceiling
    extension has image all of Y.
    """
    m = Y.members
    dom = m[1: i - 1] + (m[i - 2] + 1,) + m[i - 1:]
    img = m
    return ceiling_extension(PartialMap(n, dom, img))


def _lema_theta(n: int, Y: RangeSet, k: int) -> ChainMap:
    """Full-image map whose square is the k-th floor retraction.

    Requires a chain point strictly between y_k and y_{k+1}.
    """
    m = Y.members
    dom = m[: k - 1] + (m[k - 1] + 1,) + m[k:]
    return floor_extension(PartialMap(n, dom, m))


def _lemb_word(n: int, Y: RangeSet, k: int) -> list[ChainMap]:
    """The k-th floor retraction as a product of two full-image maps.

    Requires a gap just below y_k and room above it (y_k < n-r+k); the
    least chain point above y_k missing from the tail of Y is woven
    through both factors.
    """
    m = Y.members
    tail = set(m[k - 1:])
    spare = [y for y in range(m[k - 1], n + 1) if y not in tail]
    if not spare:
        raise DomainError(f"no spare point above {m[k - 1]}")
    y = spare[0]
    ell = bisect_left(m, y)  # y_ell < y < y_{ell+1}, 1-based ell
    if ell == k:
        th = _lema_theta(n, Y, k)
        return [th, th]
    dom1 = m[: k - 1] + m[k: ell] + (y,) + m[ell:]
    th1 = floor_extension(PartialMap(n, dom1, m))
    dom2 = m[: k - 1] + (m[k - 1] - 1, m[k - 1]) + m[k: ell - 1] + m[ell:]
    th2 = floor_extension(PartialMap(n, dom2, m))
    word = [th1, th2]
    assert product_of(word) == floor_retraction(n, Y, k)
    return word


def _imin_word(beta: ChainMap, Y: RangeSet) -> list[ChainMap]:
    """A regular map missing y_1, with y_1 > 1, as two full-image maps."""
    n = beta.n
    m = Y.members
    part = kernel(beta)
    split = part.split_block(1)
    left = full_image_map(split, Y)
    dom = (1, m[0]) + m[2:]
    right = floor_extension(PartialMap(n, dom, m))
    word = [left, right]
    assert product_of(word) == beta
    return word


def _imax_word(beta: ChainMap, Y: RangeSet) -> list[ChainMap]:
    """Mirror of :func:`_imin_word` for a map missing y_r with y_r < n."""
    Yr = reflect_set(Y)
    word = _imin_word(reflect(beta), Yr)
    out = [reflect(w) for w in word]
    assert product_of(out) == beta
    return out


def _imed_word(beta: ChainMap, Y: RangeSet, i: int) -> list:
    """A regular map missing y_i (chain starts 1..i-1, then skips i).

    Returns a list whose entries are either full-image ChainMaps or the
    tag (FLOOR, i); the caller resolves the tag against the generating
    set.  Which shape comes out depends on where the chain point i sits
    among the kernel blocks.
    """
    n = beta.n
    m = Y.members
    part = kernel(beta)
    p0 = part.block_of(i) - 1
    lab = p0 + 1 if p0 + 1 <= i - 1 else p0 + 2
    if lab == i + 1:
        left = full_image_map(part.split_block(p0 + 1), Y)
        dom = m[: i - 1] + (i, m[i - 1]) + m[i + 1:]
        img = m[: i - 1] + (m[i - 1], m[i]) + m[i + 1:]
        right = floor_extension(PartialMap(n, dom, img))
        word = [left, right]
        assert product_of(word) == beta
        return word
    if lab == i - 1:
        left = full_image_map(part.split_block(p0 + 1), Y)
        return [left, (FLOOR, i)]
    if lab == i - 2:
        left = full_image_map(part.split_block(p0 + 1), Y)
        dom = m[: i - 2] + (i,) + m[i - 1:]
        img = m[: i - 2] + (m[i - 2],) + m[i - 1:]
        mid = floor_extension(PartialMap(n, dom, img))
        return [left, mid, (FLOOR, i)]
    raise AssertionError(f"point {i} sits in block {lab}, expected "
                         f"{i - 2}, {i - 1} or {i + 1}")


class _Rewriter:
    def __init__(self, gens: GeneratingSet):
        self.gens = gens
        self.n = gens.n
        self.Y = gens.range_set
        self.r = len(gens.range_set)
        self.by_tag = {
            (g.kind, g.index): g.element
            for g in gens.members if g.kind != FULL_IMAGE
        }
        self.full = {
            g.element.images for g in gens.members if g.kind == FULL_IMAGE
        }
        self.i = first_missing_point(self.n, self.Y)
        self.j = tail_anchor(self.n, self.Y)
        self.pivot = self.i if self.i <= self.r else self.r

    def emit_full(self, beta: ChainMap) -> list[ChainMap]:
        if beta.images not in self.full:
            raise AssertionError(f"{beta!r} is not a full-image generator")
        return [beta]

    def resolve(self, kind: str, idx: int) -> list[ChainMap]:
        got = self.by_tag.get((kind, idx))
        if got is not None:
            return [got]
        n, Y, r = self.n, self.Y, self.r
        if kind == CEILING:
            # only the ends of the low run are pruned, both fold through
            # the prefix shift
            theta = _lemcr_theta(n, Y, self.i)
            shift = self.by_tag[(PREFIX_SHIFT, self.i)]
            if idx == 1:
                word = [theta, shift]
            elif idx == self.i - 1:
                word = [shift, theta]
            else:
                raise AssertionError(f"unexpected missing ceiling {idx}")
            assert product_of(word) == ceiling_retraction(n, Y, idx)
            return word
        if 2 <= self.j <= r - 1 and idx in (self.j, r):
            # both top retractions fold through the suffix shift
            Yr = reflect_set(Y)
            theta = reflect(_lemcr_theta(n, Yr, r + 2 - self.j))
            shift = self.by_tag[(SUFFIX_SHIFT, self.j)]
            word = [theta, shift] if idx == r else [shift, theta]
            assert product_of(word) == floor_retraction(n, Y, idx)
            return word
        if idx == r and self.j == r + 1:
            # y_r below n: the whole class collapses into full-image maps
            return _imax_word(floor_retraction(n, Y, r), Y)
        if Y.members[idx] > Y.members[idx - 1] + 1:
            th = _lema_theta(n, Y, idx)
            word = [th, th]
            assert product_of(word) == floor_retraction(n, Y, idx)
            return word
        return _lemb_word(n, Y, idx)

    def express_regular_corank(self, gamma: ChainMap) -> list[ChainMap]:
        beta, tags = slide_to_missing_index(gamma, self.pivot, self.Y)
        if self.i == self.r + 1:
            head: list = _imax_word(beta, self.Y)
        elif self.i == 1:
            head = _imin_word(beta, self.Y)
        else:
            head = _imed_word(beta, self.Y, self.i)
        out: list[ChainMap] = []
        for item in head:
            if isinstance(item, tuple):
                out.extend(self.resolve(*item))
            else:
                out.extend(self.emit_full(item))
        for kind, idx in tags:
            out.extend(self.resolve(kind, idx))
        return out

    def express(self, alpha: ChainMap) -> list[ChainMap]:
        k = len(image(alpha))
        if k == self.r:
            return self.emit_full(alpha)
        if k < self.r - 1:
            left, right = factor_raising_rank(alpha, self.Y)
            return self.express(left) + self.express(right)
        if is_regular(alpha, self.Y):
            return self.express_regular_corank(alpha)
        left, right = factor_through_full_image(alpha, self.Y)
        return self.emit_full(left) + self.express_regular_corank(right)


def express_in_generators(alpha: ChainMap, gens: GeneratingSet) -> list[ChainMap]:
    """A word over the generating set whose product is ``alpha``.

    Every entry of the result is one of the generators; the product is
    verified before returning.
    """
    if not maps_into(alpha, gens.range_set):
        raise DomainError(
            f"{alpha!r} does not map into {list(gens.range_set.members)}")
    word = _Rewriter(gens).express(alpha)
    allowed = {g.element.images for g in gens.members}
    for w in word:
        if w.images not in allowed:
            raise AssertionError(f"word member {w!r} is not a generator")
    if product_of(word) != alpha:
        raise AssertionError("word product does not reproduce the input")
    return word
