from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from conftest import range_sets
from ordrange import (
    ChainMap,
    DomainError,
    PartialMap,
    RangeSet,
    build_extension,
    canonical_order_isomorphism,
    ceiling_extension,
    complete_extensions,
    enumerate_elements,
    floor_extension,
    identity,
    is_bicompletable,
    is_completable,
    kernel,
    order_ideals,
    restrict,
)

cm = ChainMap.from_images


def all_partial_maps(n, Y):
    for k in range(1, n + 1):
        for dom in combinations(range(1, n + 1), k):
            for img in combinations_with_replacement(Y.members, k):
                yield PartialMap(n, dom, img)


class TestOrderIdeals:
    def test_two_points(self):
        assert order_ideals({1, 3}) == [frozenset(), {1}, {1, 3}]

    def test_one_point(self):
        assert order_ideals({2}) == [frozenset(), {2}]

    def test_empty(self):
        assert order_ideals(set()) == [frozenset()]

    def test_count(self):
        assert len(order_ideals({2, 3, 5, 7})) == 5


class TestCriterion:
    def test_partial_identity_y13(self, y13):
        theta = PartialMap(3, (1, 3), (1, 3))
        assert is_completable(theta, y13)

    def test_small(self):
        Y = RangeSet(2, (1, 2))
        assert is_completable(PartialMap(2, (1,), (2,)), Y)

    def test_rejects_image_outside_range(self, y13):
        with pytest.raises(DomainError):
            is_completable(PartialMap(3, (1,), (2,)), y13)

    def test_always_true_on_finite_chains(self):
        for n in range(1, 5):
            for Y in range_sets(n):
                for theta in all_partial_maps(n, Y):
                    assert is_completable(theta, Y)

    def test_matches_exhaustive_search(self):
        for n in range(1, 5):
            for Y in range_sets(n):
                for theta in all_partial_maps(n, Y):
                    verdict = is_completable(theta, Y)
                    exts = complete_extensions(theta, Y)
                    assert verdict == bool(exts)
                    witness = build_extension(theta, Y)
                    assert verdict == (witness is not None)
                    if witness is not None:
                        assert witness in exts


class TestExtensions:
    def test_partial_identity_extensions(self, y13):
        theta = PartialMap(3, (1, 3), (1, 3))
        got = {f.images for f in complete_extensions(theta, y13)}
        assert got == {(1, 1, 3), (1, 3, 3)}

    def test_total_map_extends_to_itself_only(self, y13):
        theta = PartialMap(3, (1, 2, 3), (1, 1, 3))
        got = complete_extensions(theta, y13)
        assert got == [cm([1, 1, 3])]

    def test_worked_example_contains_both_canonical_extensions(self):
        theta = PartialMap(9, (2, 5, 6, 8), (1, 3, 5, 7))
        Y = RangeSet(9, tuple(range(1, 10)))
        exts = {f.images for f in complete_extensions(theta, Y)}
        assert floor_extension(theta).images in exts
        assert ceiling_extension(theta).images in exts


class TestCanonicalOrderIsomorphism:
    def test_fiber_matching(self):
        theta = canonical_order_isomorphism(cm([1, 1, 2]), cm([2, 2, 3]))
        assert theta == PartialMap(3, (1, 2), (2, 3))

    def test_same_map_gives_partial_identity(self):
        f = cm([1, 1, 3])
        theta = canonical_order_isomorphism(f, f)
        assert theta.domain == theta.images == (1, 3)

    def test_another_pair(self):
        theta = canonical_order_isomorphism(cm([1, 2, 2]), cm([1, 3, 3]))
        assert theta == PartialMap(3, (1, 2), (1, 3))

    def test_kernel_mismatch_rejected(self):
        with pytest.raises(DomainError):
            canonical_order_isomorphism(cm([1, 1, 3]), cm([1, 3, 3]))

    def test_roundtrip_recovers_both_maps(self):
        for Y in range_sets(4):
            by_kernel = {}
            for f in enumerate_elements(4, Y):
                by_kernel.setdefault(kernel(f).boundaries, []).append(f)
            for group in by_kernel.values():
                for f in group:
                    for g in group:
                        theta = canonical_order_isomorphism(f, g)
                        inv = theta.inverse()
                        for x in range(1, 5):
                            assert theta(f(x)) == g(x)
                            assert inv(g(x)) == f(x)


class TestBicompletable:
    def test_partial_identity_in_full_range(self):
        Y = RangeSet(4, (1, 2, 3, 4))
        for dom in ((1,), (2, 3), (1, 4), (1, 2, 3, 4)):
            theta = PartialMap(4, dom, dom)
            assert is_bicompletable(theta, Y)

    def test_shift(self):
        Y = RangeSet(3, (1, 2, 3))
        assert is_bicompletable(PartialMap(3, (1, 2), (2, 3)), Y)

    def test_needs_injective(self, y13):
        with pytest.raises(DomainError):
            is_bicompletable(PartialMap(3, (1, 3), (1, 1)), y13)

    def test_domain_must_sit_in_range_set(self, y13):
        with pytest.raises(DomainError):
            is_bicompletable(PartialMap(3, (2,), (3,)), y13)

    def test_every_injective_map_between_subsets_of_y(self):
        for n in range(1, 5):
            for Y in range_sets(n):
                for k in range(1, len(Y) + 1):
                    for dom in combinations(Y.members, k):
                        for img in combinations(Y.members, k):
                            theta = PartialMap(n, dom, img)
                            assert is_bicompletable(theta, Y)


@given(st.data())
def test_random_partial_maps_complete_on_larger_chains(data):
    # beyond the exhaustive sweeps: finite chains never refuse an extension
    n = data.draw(st.integers(1, 9))
    members = tuple(sorted(data.draw(
        st.sets(st.integers(1, n), min_size=1, max_size=n))))
    Y = RangeSet(n, members)
    k = data.draw(st.integers(1, n))
    dom = tuple(sorted(data.draw(
        st.sets(st.integers(1, n), min_size=k, max_size=k))))
    img = tuple(sorted(data.draw(
        st.lists(st.sampled_from(members), min_size=len(dom),
                 max_size=len(dom)))))
    theta = PartialMap(n, dom, img)
    assert is_completable(theta, Y)
    ext = build_extension(theta, Y)
    assert ext is not None
    assert all(ext(a) == theta(a) for a in dom)
    assert set(ext.images) <= set(members)


def test_restrict_then_extend_is_identity_on_domain():
    f = identity(5)
    theta = restrict(f, {2, 4})
    ext = build_extension(theta, RangeSet(5, (1, 2, 3, 4, 5)))
    assert ext is not None and ext(2) == 2 and ext(4) == 4
