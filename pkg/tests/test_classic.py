"""Costas sequence predicates, the exponential construction, enumeration."""

from itertools import permutations

import pytest

from costaskit.classic import (
    circular_difference_rows,
    difference_triangle,
    enumerate_costas,
    enumerate_costas_parallel,
    has_shifting_property,
    is_circular,
    is_costas,
    is_singly_periodic,
    render_grid,
    welch_family,
    welch_sequence,
)
from costaskit.numbers import euler_phi, is_prime, primitive_roots

# n -> number of Costas sequences, long-established reference values
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 12, 5: 40, 6: 116, 7: 200, 8: 444}


def test_difference_triangle_worked_example():
    assert difference_triangle([2, 4, 3, 1]) == [[2, -1, -2], [1, -3], [-1]]
    assert is_costas([2, 4, 3, 1])


def test_non_costas_sequence():
    assert not is_costas([1, 2, 3])  # row 1 repeats +1
    assert difference_triangle([1, 2, 3]) == [[1, 1], [2]]


def test_validation():
    for bad in ([], [1, 1], [0, 1], [2, 3]):
        with pytest.raises(ValueError):
            is_costas(bad)


def test_length_one_sequence_has_every_property():
    for pred in (is_costas, is_singly_periodic, is_circular, has_shifting_property):
        assert pred([1])


def test_welch_sequence_examples():
    assert welch_sequence(5, 2, 1) == (2, 4, 3, 1)
    assert welch_sequence(5, 2, 0) == (1, 2, 4, 3)
    assert welch_sequence(3, 2, 0) == (1, 2)
    assert welch_sequence(5, 2, -1) == (3, 1, 2, 4)  # negative shifts wrap


def test_welch_sequence_validation():
    with pytest.raises(ValueError):
        welch_sequence(4, 3)
    with pytest.raises(ValueError):
        welch_sequence(2, 1)
    with pytest.raises(ValueError):
        welch_sequence(5, 4)  # order 2, not primitive
    with pytest.raises(ValueError):
        welch_sequence(7, 2)  # 2^3 = 1 mod 7


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_welch_family_has_full_property_chain(p):
    fam = welch_family(p)
    assert len(fam) == euler_phi(p - 1) * (p - 1)
    for seq in fam:
        assert is_costas(seq)
        assert is_singly_periodic(seq)
        assert is_circular(seq)
        assert has_shifting_property(seq)


def test_property_chain_on_full_census():
    # shifting => circular => singly periodic, over every Costas sequence of
    # length <= 7; at these lengths the three classes happen to coincide
    coincide = {}
    for n in range(1, 8):
        counts = [0, 0, 0]
        for seq in enumerate_costas(n):
            shifting, circ, singly = (
                has_shifting_property(seq),
                is_circular(seq),
                is_singly_periodic(seq),
            )
            if shifting:
                assert circ
            if circ:
                assert singly
            counts[0] += shifting
            counts[1] += circ
            counts[2] += singly
        coincide[n] = counts
    assert coincide[4] == [8, 8, 8]
    assert coincide[6] == [12, 12, 12]
    assert coincide[3] == coincide[5] == coincide[7] == [0, 0, 0]


def test_circular_forces_prime_successor():
    for n in range(2, 9):
        circular = [seq for seq in enumerate_costas(n) if is_circular(seq)]
        if not is_prime(n + 1):
            assert circular == []
        else:
            assert circular  # n+1 in {3, 5, 7} all admit circular sequences


@pytest.mark.parametrize("p", [3, 5, 7])
def test_circular_census_equals_welch_family(p):
    n = p - 1
    circular = {seq for seq in enumerate_costas(n) if is_circular(seq)}
    assert circular == welch_family(p)
    assert len(circular) == euler_phi(p - 1) * (p - 1)


def test_costas_census_counts_against_reference():
    for n, expected in KNOWN_COUNTS.items():
        if n <= 7:
            assert sum(1 for _ in enumerate_costas(n)) == expected


def test_census_matches_naive_filter_n4():
    naive = {p for p in permutations(range(1, 5)) if is_costas(p)}
    assert set(enumerate_costas(4)) == naive
    assert len(naive) == 12


def test_census_is_lexicographic_and_capped():
    seqs = list(enumerate_costas(4))
    assert seqs == sorted(seqs)
    with pytest.raises(ValueError):
        list(enumerate_costas(9))
    assert sum(1 for _ in enumerate_costas(9, cap=9)) == 760


def test_parallel_census_matches_serial():
    assert enumerate_costas_parallel(6, threads=2) == list(enumerate_costas(6))


def test_circular_difference_rows_of_welch_are_rotations():
    seq = welch_sequence(7, 3, 0)
    rotations = {tuple(seq[r:] + seq[:r]) for r in range(6)}
    for row in circular_difference_rows(seq):
        assert tuple(row) in rotations


def test_render_grid():
    grid = render_grid([2, 4, 3, 1])
    assert grid.splitlines() == [
        ". 1 . .",
        ". . 1 .",
        "1 . . .",
        ". . . 1",
    ]
