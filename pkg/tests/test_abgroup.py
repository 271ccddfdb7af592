"""Abelian group canonical forms, witnesses, and automorphism streams."""

import pytest

from costaskit.abgroup import (
    AbelianGroup,
    automorphism_count,
    automorphisms,
    compose_tables,
    invert_table,
    is_isomorphic,
    isomorphism_witness,
)
from costaskit.numbers import euler_phi


def test_construction_and_validation():
    g = AbelianGroup([4, 5])
    assert g.order == 20 and g.rank == 2
    assert g.descriptor() == "Z4xZ5"
    with pytest.raises(ValueError):
        AbelianGroup([4, 1])
    assert AbelianGroup([]).order == 1  # trivial group is allowed


def test_element_arithmetic():
    g = AbelianGroup([4, 5])
    assert g.add((3, 1), (2, 3)) == (1, 4)
    assert g.sub((0, 2), (1, 4)) == (3, 3)
    assert g.neg((1, 2)) == (3, 3)
    assert g.scalar(7, (1, 1)) == (3, 2)
    assert g.element_order((2, 0)) == 2
    assert g.element_order((1, 1)) == 20
    assert g.element_order(g.zero()) == 1
    with pytest.raises(ValueError):
        g.check((1, 2, 3))
    assert g.check((-1, 7)) == (3, 2)


def test_elements_are_lexicographic_and_indexed():
    g = AbelianGroup([2, 3])
    els = g.elements()
    assert els == ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2))
    for i, x in enumerate(els):
        assert g.index_of(x) == i


def test_invariant_factors():
    assert AbelianGroup([24]).invariants() == (24,)
    assert AbelianGroup([8, 3]).invariants() == (24,)
    assert AbelianGroup([4, 6]).invariants() == (2, 12)
    assert AbelianGroup([2, 2, 3]).invariants() == (2, 6)
    assert AbelianGroup([6, 10, 15]).invariants() == (30, 30)
    assert AbelianGroup([]).invariants() == ()


def test_isomorphism_decisions():
    assert is_isomorphic(AbelianGroup([24]), AbelianGroup([8, 3]))
    assert not is_isomorphic(AbelianGroup([4]), AbelianGroup([2, 2]))
    assert not is_isomorphic(AbelianGroup([12]), AbelianGroup([2, 6]))
    assert is_isomorphic(AbelianGroup([2, 6]), AbelianGroup([6, 2]))


def test_isomorphism_witness_is_bijective_homomorphism():
    pairs = [
        (AbelianGroup([24]), AbelianGroup([8, 3])),
        (AbelianGroup([2, 6]), AbelianGroup([6, 2])),
        (AbelianGroup([5, 5]), AbelianGroup([5, 5])),
        (AbelianGroup([12, 2]), AbelianGroup([4, 6])),
    ]
    for g, h in pairs:
        w = isomorphism_witness(g, h)
        assert len(set(w.values())) == g.order
        for x in g.elements():
            for y in g.elements():
                assert w[g.add(x, y)] == h.add(w[x], w[y])


def test_isomorphism_witness_crt_values():
    w = isomorphism_witness(AbelianGroup([24]), AbelianGroup([8, 3]))
    assert w[(1,)] == (1, 1)
    assert w[(5,)] == (5, 2)
    assert w[(0,)] == (0, 0)


def test_isomorphism_witness_errors():
    with pytest.raises(ValueError):
        isomorphism_witness(AbelianGroup([4]), AbelianGroup([2, 2]))


def test_elementary_abelian_detection():
    assert AbelianGroup([2, 2]).is_elementary_abelian() == (True, 2, 2)
    assert AbelianGroup([5]).is_elementary_abelian() == (True, 5, 1)
    assert AbelianGroup([4]).is_elementary_abelian() == (False, None, None)
    assert AbelianGroup([2, 4]).is_elementary_abelian() == (False, None, None)
    assert AbelianGroup([3, 3, 3]).is_elementary_abelian() == (True, 3, 3)


@pytest.mark.parametrize(
    "factors,count",
    [
        ([5], 4),
        ([2, 2], 6),
        ([4, 5], 8),
        ([24], 8),
        ([2, 2, 2], 168),
        ([3, 3], 48),
        ([6], 2),
        ([2, 4], 8),
    ],
)
def test_automorphism_counts(factors, count):
    assert automorphism_count(AbelianGroup(factors)) == count


def test_cyclic_automorphism_count_is_totient():
    for n in [5, 7, 8, 9, 10, 12]:
        assert automorphism_count(AbelianGroup([n])) == euler_phi(n)


def test_automorphisms_are_bijective_homomorphisms():
    for factors in ([4, 5], [2, 2], [2, 4]):
        g = AbelianGroup(factors)
        seen = set()
        for t in automorphisms(g):
            frozen = frozenset(t.items())
            assert frozen not in seen  # no duplicates in the stream
            seen.add(frozen)
            assert len(set(t.values())) == g.order
            for x in g.elements():
                for y in g.elements():
                    assert t[g.add(x, y)] == g.add(t[x], t[y])


def test_table_composition_helpers():
    g = AbelianGroup([2, 2])
    auts = list(automorphisms(g))
    ident = {x: x for x in g.elements()}
    for t in auts:
        assert compose_tables(invert_table(t), t) == ident


def test_coprime_product_automorphisms_split():
    # gcd(|A|, |B|) = 1: Aut(A x B) is exactly the pairs of factor autos
    a, b, ab = AbelianGroup([4]), AbelianGroup([5]), AbelianGroup([4, 5])
    pairs = set()
    for ta in automorphisms(a):
        for tb in automorphisms(b):
            pairs.add(
                frozenset(((x, y), (ta[(x,)][0], tb[(y,)][0])) for x in range(4) for y in range(5))
            )
    full = {frozenset(t.items()) for t in automorphisms(ab)}
    assert pairs == full


def test_sub_index_table():
    g = AbelianGroup([4, 5])
    t = g.sub_index_table()
    els = g.elements()
    for i, x in enumerate(els):
        for j, y in enumerate(els):
            assert els[t[i][j]] == g.sub(x, y)
