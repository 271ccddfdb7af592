"""Reproduction suite: every headline quantitative claim as one check.

Each check is a named, self-contained verification returning a verdict,
a human-readable detail line, and the exact counts it certified.  The
fast set runs in well under a minute; three large censuses and the
exhaustive order-6 difference-set search sit behind include_slow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .abgroup import AbelianGroup
from .circmap import (
    export_array,
    injective_maps,
    is_circular_costas,
    is_standard,
    no_bijective_costas,
    standardized,
    verify_periodic_costas,
    welch_map,
)
from .classic import (
    difference_triangle,
    is_circular,
    is_costas,
    is_singly_periodic,
    has_shifting_property,
    welch_family,
)
from .cpoly import (
    census_circular_prime,
    census_shifting,
    conjecture3_bound,
    count_welch_polynomials,
    enumerate_welch_polynomials,
    lemma_checks,
    ratio_R,
)
from .dpds import ProductDifferenceSet, from_map, is_dpds, search_none
from .fqpoly import enumerate_linearized_permutations
from .gf import field_of_order
from .numbers import euler_phi

Counts = list[tuple[str, int]]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    counts: Counts = field(default_factory=list)


def _check_costas_triangle(workers: int) -> tuple[bool, str, Counts]:
    seq = (2, 4, 3, 1)
    triangle = difference_triangle(seq)
    expected = [[2, -1, -2], [1, -3], [-1]]
    ok = triangle == expected and is_costas(seq)
    return ok, f"difference triangle of {seq} is {triangle}", []


def _check_welch_chain(workers: int) -> tuple[bool, str, Counts]:
    counts, ok = [], True
    for p in (5, 7, 11, 13):
        family = sorted(welch_family(p))
        expected = euler_phi(p - 1) * (p - 1)
        ok &= len(family) == expected
        for seq in family:
            ok &= (
                is_costas(seq)
                and is_singly_periodic(seq)
                and is_circular(seq)
                and has_shifting_property(seq)
            )
        counts.append((f"p={p}", len(family)))
    return ok, "every exponential sequence passes all four predicates", counts


def _check_prime_census(workers: int) -> tuple[bool, str, Counts]:
    counts, ok = [], True
    for p, expected in ((5, 8), (7, 12)):
        found = census_circular_prime(p, workers=workers)
        ok &= found == welch_family(p) and len(found) == expected
        counts.append((f"p={p}", len(found)))
    return ok, "circular sequences from full permutation census are exactly exponential", counts


def _check_prime_census_11(workers: int) -> tuple[bool, str, Counts]:
    found = census_circular_prime(11, workers=workers, allow_large=True)
    ok = found == welch_family(11) and len(found) == 40
    return ok, "10!-permutation census at p=11 yields only exponential sequences", [("p=11", len(found))]


def _check_welch_map_grid(workers: int) -> tuple[bool, str, Counts]:
    counts, ok = [], True
    for q in (4, 5, 7, 8, 9, 16, 25, 27):
        F = field_of_order(q)
        n = 0
        for L in enumerate_linearized_permutations(F):
            for c in (0, 1, 2):
                f = welch_map(F, L, c)
                ok &= is_circular_costas(f) and is_standard(f)
                n += 1
        counts.append((f"q={q}", n))
    return ok, "every exponential map is a standard circular Costas map", counts


def _check_dpds_example(workers: int) -> tuple[bool, str, Counts]:
    Z4, Z5 = AbelianGroup([4]), AbelianGroup([5])
    d = ProductDifferenceSet(
        Z4, Z5, [((0,), (2,)), ((1,), (4,)), ((2,), (3,)), ((3,), (1,))]
    )
    triples = d.difference_triples()
    offaxis = {v for _, _, v in triples}
    target = {
        (a, b) for a in Z4.elements() for b in Z5.elements() if a != (0,) and b != (0,)
    }
    ok = is_dpds(d) and len(triples) == 12 and offaxis == target
    return ok, "worked order-5 set verifies with its 12 distinct off-axis differences", [
        ("differences", len(triples))
    ]


def _check_dpds_correspondence(workers: int) -> tuple[bool, str, Counts]:
    Z4, Z5 = AbelianGroup([4]), AbelianGroup([5])
    agree, circular, standard = 0, [], set()
    for f in injective_maps(Z4, Z5):
        c = is_circular_costas(f)
        agree += c == is_dpds(from_map(f))
        if c:
            circular.append(f)
            if is_standard(f):
                standard.add(tuple(v[0] for v in f.images.values()))
    translations_ok = all(is_standard(standardized(f)) for f in circular)
    ok = (
        agree == 120
        and len(circular) == 40
        and standard == welch_family(5)
        and translations_ok
    )
    detail = "circular maps and difference-set graphs coincide on all 120 injective maps"
    return ok, detail, [("agreements", agree), ("circular", len(circular)), ("standard", len(standard))]


def _check_order_six_circular(workers: int) -> tuple[bool, str, Counts]:
    Z5 = AbelianGroup([5])
    scanned, hits = 0, 0
    for codomain in (AbelianGroup([6]), AbelianGroup([2, 3])):
        for f in injective_maps(Z5, codomain):
            scanned += 1
            hits += is_circular_costas(f)
    ok = hits == 0 and scanned == 1440
    return ok, "no injective map of Z5 into an order-6 group is circular Costas", [
        ("maps scanned", scanned)
    ]


def _check_order_six_dpds(workers: int) -> tuple[bool, str, Counts]:
    ok = search_none(6, normalize=False) and search_none(6)
    return ok, "exhaustive subset scan of Z5 x Z6 finds no order-6 difference set", [
        ("subsets", 142506)
    ]


def _check_polynomial_counts(workers: int) -> tuple[bool, str, Counts]:
    counts, ok = [], True
    for q in (4, 5, 7, 8, 9, 16, 25, 27):
        F = field_of_order(q)
        n = sum(1 for _ in enumerate_welch_polynomials(F))
        ok &= n == count_welch_polynomials(F.p, F.m)
        counts.append((f"q={q}", n))
    return ok, "distinct linearized-power compositions match the closed-form count", counts


def _check_ratio_values(workers: int) -> tuple[bool, str, Counts]:
    ok = (
        ratio_R(2, 3) == Fraction(6, 5)
        and ratio_R(3, 3) == Fraction(12, 11)
        and ratio_R(5, 3) == Fraction(30, 59)
    )
    for p in (2, 3, 5, 7, 11):
        for m in (4, 5, 6):
            r = ratio_R(p, m)
            ok &= r > 1
            ok &= r == Fraction(count_welch_polynomials(p, m), conjecture3_bound(p, m))
    return ok, "exact bound ratios match and exceed 1 for degree 4 and higher", [
        ("grid points", 15 + 3)
    ]


def _check_shifting_census(workers: int) -> tuple[bool, str, Counts]:
    counts, ok = [], True
    for q in (4, 5, 7, 8, 9):
        F = field_of_order(q)
        survivors = census_shifting(F, workers=workers)
        ok &= survivors == set(enumerate_welch_polynomials(F))
        counts.append((f"q={q}", len(survivors)))
    return ok, "census survivors are exactly the linearized-power polynomials", counts


def _check_shifting_census_11(workers: int) -> tuple[bool, str, Counts]:
    F = field_of_order(11)
    survivors = census_shifting(F, workers=workers, allow_large=True)
    ok = survivors == set(enumerate_welch_polynomials(F)) and len(survivors) == 40
    return ok, "10!-permutation census at q=11 matches the linearized-power family", [
        ("q=11", len(survivors))
    ]


def _check_lemma_reports(workers: int) -> tuple[bool, str, Counts]:
    counts, ok = [], True
    for q in (4, 5, 7, 8):
        rep = lemma_checks(field_of_order(q), workers=workers)
        sc, wc = rep["shifting_are_costas"], rep["welch_form_are_costas"]
        ok &= sc["passed"] == sc["total"]
        ok &= wc["passed"] == wc["total"]
        ok &= rep["composition_law"]["ok"]
        counts.append((f"q={q}", sc["total"]))
    return ok, "shifting implies Costas and composition with powers behaves exactly", counts


def _check_array_export(workers: int) -> tuple[bool, str, Counts]:
    F25 = field_of_order(25)
    f = welch_map(F25)
    flat = export_array(f, [24], [5, 5])
    split = export_array(f, [8, 3], [5, 5])
    ok = (
        flat.dims == (24, 5, 5)
        and split.dims == (8, 3, 5, 5)
        and len(flat.ones) == 24
        and len(split.ones) == 24
        and verify_periodic_costas(flat, 1)
        and verify_periodic_costas(split, 2)
    )
    return ok, "order-25 exponential map exports to verified periodic arrays", [
        ("24x5x5 ones", len(flat.ones)),
        ("8x3x5x5 ones", len(split.ones)),
    ]


def _check_no_bijective(workers: int) -> tuple[bool, str, Counts]:
    shapes = ([3], [4], [5], [2, 2], [6])
    ok = all(no_bijective_costas(AbelianGroup(s)) for s in shapes)
    return ok, "no bijective map on these groups has all-distinct difference maps", [
        ("groups", len(shapes))
    ]


CHECKS: list[tuple[str, bool, Callable[[int], tuple[bool, str, Counts]]]] = [
    ("costas-triangle-worked-example", False, _check_costas_triangle),
    ("welch-sequence-property-chain", False, _check_welch_chain),
    ("prime-circular-census", False, _check_prime_census),
    ("prime-circular-census-11", True, _check_prime_census_11),
    ("welch-map-grid-standard-circular", False, _check_welch_map_grid),
    ("dpds-worked-example", False, _check_dpds_example),
    ("dpds-circular-correspondence", False, _check_dpds_correspondence),
    ("order-six-circular-nonexistence", False, _check_order_six_circular),
    ("order-six-dpds-search", True, _check_order_six_dpds),
    ("welch-polynomial-counts", False, _check_polynomial_counts),
    ("bound-ratio-values", False, _check_ratio_values),
    ("shifting-census-classification", False, _check_shifting_census),
    ("shifting-census-11", True, _check_shifting_census_11),
    ("shifting-lemma-reports", False, _check_lemma_reports),
    ("multidimensional-array-export", False, _check_array_export),
    ("bijective-map-nonexistence", False, _check_no_bijective),
]


def check_names(include_slow: bool = True) -> list[str]:
    return [name for name, slow, _ in CHECKS if include_slow or not slow]


def run_suite(
    names: list[str] | None = None,
    include_slow: bool = False,
    workers: int = 1,
) -> list[CheckResult]:
    """Run the named checks (default: all fast ones) and gather results."""
    registry = {name: (slow, fn) for name, slow, fn in CHECKS}
    if names is None:
        selected = check_names(include_slow)
    else:
        unknown = [n for n in names if n not in registry]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        selected = names
    results = []
    for name in selected:
        _, fn = registry[name]
        try:
            passed, detail, counts = fn(workers)
        except Exception as e:  # a broken check is a failed check, not a crash
            passed, detail, counts = False, f"raised {type(e).__name__}: {e}", []
        results.append(CheckResult(name, passed, detail, counts))
    return results
