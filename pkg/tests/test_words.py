import pytest

from conftest import range_sets
from ordrange import (
    ChainMap,
    DomainError,
    enumerate_elements,
    express_in_generators,
    image,
    minimum_generating_set,
    product_of,
)

cm = ChainMap.from_images


def test_full_image_member_is_its_own_word(y13):
    gens = minimum_generating_set(3, y13, check=False)
    word = express_in_generators(cm([1, 1, 3]), gens)
    assert word == [cm([1, 1, 3])]


def test_constant_reconstructs(y13):
    gens = minimum_generating_set(3, y13, check=False)
    word = express_in_generators(cm([1, 1, 1]), gens)
    assert product_of(word) == cm([1, 1, 1])


def test_rejects_map_outside_range(y13):
    gens = minimum_generating_set(3, y13, check=False)
    with pytest.raises(DomainError):
        express_in_generators(cm([1, 2, 3]), gens)


def test_every_element_reconstructs_for_n_up_to_4():
    for n in (3, 4):
        for Y in range_sets(n, smallest=2, largest=n - 1):
            gens = minimum_generating_set(n, Y, check=False)
            allowed = {g.element.images for g in gens.members}
            for alpha in enumerate_elements(n, Y):
                word = express_in_generators(alpha, gens)
                assert word
                assert product_of(word) == alpha
                assert all(w.images in allowed for w in word)


def test_words_stay_short_for_small_chains():
    for Y in range_sets(4, smallest=2, largest=3):
        gens = minimum_generating_set(4, Y, check=False)
        for alpha in enumerate_elements(4, Y):
            word = express_in_generators(alpha, gens)
            assert len(word) <= 32


def test_low_rank_elements_use_multiple_factors(y13):
    gens = minimum_generating_set(3, y13, check=False)
    for alpha in enumerate_elements(3, y13):
        word = express_in_generators(alpha, gens)
        if len(image(alpha)) == 2:
            continue
        assert product_of(word) == alpha
