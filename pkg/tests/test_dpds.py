"""Direct product difference sets: verification, map correspondence, equivalence."""

import random
from itertools import combinations

import pytest

from costaskit.abgroup import AbelianGroup
from costaskit.circmap import GroupMap, injective_maps, is_circular_costas, welch_map
from costaskit.dpds import (
    ProductDifferenceSet,
    dpds_equivalent,
    from_map,
    is_dpds,
    search_dpds,
    search_none,
    to_map,
)
from costaskit.classic import welch_family
from costaskit.gf import make_field

Z4, Z5 = AbelianGroup([4]), AbelianGroup([5])
EXAMPLE_POINTS = [((0,), (2,)), ((1,), (4,)), ((2,), (3,)), ((3,), (1,))]

# the twelve ordered differences of the order-5 example set
EXAMPLE_TRIPLES = {
    (((0,), (2,)), ((1,), (4,)), ((3,), (3,))),
    (((1,), (4,)), ((0,), (2,)), ((1,), (2,))),
    (((0,), (2,)), ((2,), (3,)), ((2,), (4,))),
    (((1,), (4,)), ((2,), (3,)), ((3,), (1,))),
    (((0,), (2,)), ((3,), (1,)), ((1,), (1,))),
    (((1,), (4,)), ((3,), (1,)), ((2,), (3,))),
    (((2,), (3,)), ((0,), (2,)), ((2,), (1,))),
    (((3,), (1,)), ((0,), (2,)), ((3,), (4,))),
    (((2,), (3,)), ((1,), (4,)), ((1,), (4,))),
    (((3,), (1,)), ((1,), (4,)), ((2,), (2,))),
    (((2,), (3,)), ((3,), (1,)), ((3,), (2,))),
    (((3,), (1,)), ((2,), (3,)), ((1,), (3,))),
}


def example_set():
    return ProductDifferenceSet(Z4, Z5, EXAMPLE_POINTS)


def test_construction_validation():
    with pytest.raises(ValueError):
        ProductDifferenceSet(Z4, AbelianGroup([6]), [])  # sizes not consecutive
    with pytest.raises(ValueError):
        ProductDifferenceSet(AbelianGroup([1]), AbelianGroup([2]), [])  # order below 3
    with pytest.raises(ValueError):
        ProductDifferenceSet(Z4, Z5, [((0,), (2,), (1,))])
    d = ProductDifferenceSet(Z4, Z5, [((5,), (7,)), ((1,), (2,))])
    assert ((1,), (2,)) in d.points  # coordinates reduced into range


def test_order_five_example_is_dpds():
    d = example_set()
    assert is_dpds(d)
    assert d.order == 5
    triples = d.difference_triples()
    assert len(triples) == 12
    assert set(triples) == EXAMPLE_TRIPLES


def test_removed_point_fails():
    d = ProductDifferenceSet(Z4, Z5, EXAMPLE_POINTS[:3])
    assert not is_dpds(d)


def test_repeated_difference_fails():
    d = ProductDifferenceSet(Z4, Z5, [((i,), (i + 1,)) for i in range(4)])
    assert not is_dpds(d)


def test_axis_difference_fails():
    # shared first coordinate puts a difference on the {0} x B axis
    d = ProductDifferenceSet(Z4, Z5, [((0,), (2,)), ((0,), (4,)), ((2,), (3,)), ((3,), (1,))])
    assert not is_dpds(d)


def test_from_map_and_to_map():
    f = GroupMap(Z4, Z5, {(0,): (2,), (1,): (4,), (2,): (3,), (3,): (1,)})
    d = from_map(f)
    assert d == example_set()
    assert to_map(d).images == f.images
    with pytest.raises(ValueError):
        from_map(GroupMap(Z4, Z5, {(i,): (0,) for i in range(4)}))
    dup = ProductDifferenceSet(Z4, Z5, [((0,), (1,)), ((0,), (2,)), ((1,), (3,)), ((2,), (4,))])
    with pytest.raises(ValueError):
        to_map(dup)


def test_welch_graph_in_mixed_product():
    F4 = make_field(2, 2)
    d = from_map(welch_map(F4))
    assert d.group_b == AbelianGroup([2, 2])
    assert is_dpds(d)
    assert d.sorted_points() == [((0,), (1, 0)), ((1,), (0, 1)), ((2,), (1, 1))]


def test_correspondence_all_injective_maps_order_five():
    circular = 0
    for f in injective_maps(Z4, Z5):
        c = is_circular_costas(f)
        circular += c
        assert c == is_dpds(from_map(f))
    assert circular == 40


def test_correspondence_welch_and_random_order_seven():
    F7 = make_field(7)
    for seq in sorted(welch_family(7)):
        f = GroupMap(AbelianGroup([6]), AbelianGroup([7]), {(i,): (v,) for i, v in enumerate(seq)})
        assert is_circular_costas(f) and is_dpds(from_map(f))
    Z6, Z7 = AbelianGroup([6]), AbelianGroup([7])
    rng = random.Random(1234)
    els = Z7.elements()
    for _ in range(10_000):
        img = rng.sample(els, 6)
        f = GroupMap(Z6, Z7, {(i,): img[i] for i in range(6)})
        assert is_circular_costas(f) == is_dpds(from_map(f))


def test_equivalence_reflexive_and_translation():
    d = example_set()
    assert dpds_equivalent(d, d)
    assert dpds_equivalent(d, d.translated((1,), (1,)))
    assert dpds_equivalent(d.translated((3,), (2,)), d)


def test_equivalence_rejects_non_dpds_candidates():
    d = example_set()
    diag = ProductDifferenceSet(Z4, Z5, [((i,), (i + 1,)) for i in range(4)])
    assert not dpds_equivalent(d, diag)
    smaller = ProductDifferenceSet(Z4, Z5, EXAMPLE_POINTS[:3])
    assert not dpds_equivalent(d, smaller)
    other = ProductDifferenceSet(AbelianGroup([6]), AbelianGroup([7]), [])
    with pytest.raises(ValueError):
        dpds_equivalent(d, other)


def test_order_five_search_and_single_class():
    found = list(search_dpds(Z4, Z5))
    assert len(found) == 40
    assert example_set() in found
    # graphs of the 40 circular maps and nothing else
    graphs = {from_map(f) for f in injective_maps(Z4, Z5) if is_circular_costas(f)}
    assert set(found) == graphs
    # exhaustive pairing against a representative: one equivalence class
    assert all(dpds_equivalent(found[0], d) for d in found[1:])


def test_normalized_search_agrees():
    norm = list(search_dpds(Z4, Z5, normalize=True))
    assert all(((0,), (0,)) in d.points for d in norm)
    full = set(search_dpds(Z4, Z5))
    assert set(norm) == {d for d in full if ((0,), (0,)) in d.points}


def test_search_matches_raw_combination_scan():
    # oracle: test every 4-subset of Z4 x Z5 directly against is_dpds
    cells = [(a, b) for a in Z4.elements() for b in Z5.elements()]
    raw = {
        ProductDifferenceSet(Z4, Z5, pts)
        for pts in combinations(cells, 4)
        if is_dpds(ProductDifferenceSet(Z4, Z5, pts))
    }
    assert raw == set(search_dpds(Z4, Z5))


def test_no_order_six_dpds():
    assert search_none(6)
    assert search_none(6, normalize=False)


def test_search_none_validation_and_cap():
    with pytest.raises(ValueError):
        search_none(2)
    with pytest.raises(ValueError):
        search_none(7)
