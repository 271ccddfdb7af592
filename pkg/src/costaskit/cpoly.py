"""Costas and shifting Costas polynomials over GF(q).

A Costas polynomial satisfies f(0) = 0 and has f(dx) - f(x) a
permutation for every d != 1, including d = 0.  A shifting Costas
polynomial is a permutation polynomial such that every difference
f(dx) - f(x) equals f(ax) for some nonzero a; these are exactly the
reductions of L(x^s) with L a linearized permutation polynomial and
gcd(s, q-1) = 1, and there are phi(q-1)/m * prod_k (q - p^k) of them.

Censuses iterate every permutation of GF(q) fixing 0, decide the
polynomial properties on value tables, and interpolate only the
survivors.  The witness a for a given d is forced by injectivity at
x = 1 (a = f^{-1}(f(d) - f(1))), so each check is quadratic in q.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import permutations
from math import factorial, gcd
from typing import Iterator, Sequence

from .classic import is_circular, welch_family
from .fqpoly import (
    FqPolynomial,
    compose_monomial,
    count_linearized_permutations,
    enumerate_linearized_permutations,
    interpolate,
    interpolate_table,
)
from .gf import FieldElement, FiniteField, make_field
from .numbers import euler_phi, is_prime
from .circmap import GroupMap, is_circular_costas, is_standard

ENUM_CAP = 500_000  # raw (L, s) pairs
CENSUS_DEFAULT_CAP = factorial(8)  # q <= 9 without the flag
CENSUS_HARD_CAP = factorial(10)  # q = 11 with the flag


class CensusMismatchError(RuntimeError):
    """An exhaustive census contradicted the expected classification."""


def is_costas_polynomial(f: FqPolynomial) -> bool:
    """f(0) = 0, f a permutation, f(dx) - f(x) a permutation for d != 1."""
    field = f.field
    q = field.q
    t = field.tables()
    v = f.value_table()
    if v[0] != 0 or len(set(v)) != q:
        return False
    sub, mul = t.sub, t.mul
    for d in range(q):
        if d == field.one.index:
            continue
        md = mul[d]
        seen = bytearray(q)
        for x in range(q):
            val = sub[v[md[x]]][v[x]]
            if seen[val]:
                return False
            seen[val] = 1
    return True


def is_shifting_costas(f: FqPolynomial) -> tuple[bool, dict[FieldElement, FieldElement] | None]:
    """Whether every difference f(dx) - f(x) is some f(ax), with the witnesses.

    On success the returned dict maps each d != 1 to its a; injectivity
    of f forces a single candidate per d, so the search is linear.
    """
    field = f.field
    q = field.q
    t = field.tables()
    v = f.value_table()
    if len(set(v)) != q:
        return False, None
    if v[0] != 0:
        return False, None  # x = 0 forces f(0) = 0 in f(dx) - f(x) = f(ax)
    vinv = [0] * q
    for x, y in enumerate(v):
        vinv[y] = x
    sub, mul = t.sub, t.mul
    one = field.one.index
    els = field.elements
    witness = {}
    for d in range(q):
        if d == one:
            continue
        a = vinv[sub[v[mul[d][one]]][v[one]]]
        if a == 0:
            return False, None
        md, ma = mul[d], mul[a]
        if any(sub[v[md[x]]][v[x]] != v[ma[x]] for x in range(q)):
            return False, None
        witness[els[d]] = els[a]
    return True, witness


def map_to_polynomial(f: GroupMap, beta: FieldElement) -> FqPolynomial:
    """The polynomial g with g(beta^i) = f(i) and g(0) = 0.

    The domain must be cyclic of order q-1 (exponents i run through a
    fixed generator) and the codomain must be the additive group of
    beta's field, coordinates matching.
    """
    field = beta.field
    q = field.q
    order = 1
    acc = beta
    while acc != field.one:
        acc = acc * beta
        order += 1
        if order > q:
            raise ValueError("beta is zero or otherwise non-invertible")
    if order != q - 1:
        raise ValueError(f"beta has order {order}, needs {q - 1}")
    if f.codomain.factors != (field.p,) * field.m:
        raise ValueError(
            f"codomain {f.codomain.descriptor()} is not the additive group of {field.descriptor()}"
        )
    if f.domain.order != q - 1:
        raise ValueError(f"domain order {f.domain.order} does not match q - 1 = {q - 1}")
    invariants = f.domain.invariants()
    if len(invariants) > 1:
        raise ValueError(f"domain {f.domain.descriptor()} is not cyclic")
    if not (is_circular_costas(f) and is_standard(f)):
        raise ValueError("map is not a standard circular Costas map")
    gen = next(x for x in f.domain.elements() if f.domain.element_order(x) == q - 1)
    points = [(field.zero, field.zero)]
    x = field.one
    for i in range(q - 1):
        points.append((x, field.element(f.images[f.domain.scalar(i, gen)])))
        x = x * beta
    return interpolate(field, points)


def welch_polynomial_pairs(field: FiniteField) -> Iterator[FqPolynomial]:
    """Raw compositions L(x^s), in L-lexicographic then s-ascending order."""
    q = field.q
    raw = count_linearized_permutations(field) * euler_phi(q - 1)
    if raw > ENUM_CAP:
        raise ValueError(f"{raw} raw (L, s) pairs exceed cap {ENUM_CAP}")
    exponents = [s for s in range(1, q) if gcd(s, q - 1) == 1]
    for L in enumerate_linearized_permutations(field):
        for s in exponents:
            yield compose_monomial(L, s)


def enumerate_welch_polynomials(field: FiniteField) -> Iterator[FqPolynomial]:
    """Distinct canonical L(x^s), deduplicated across colliding (L, s) pairs."""
    seen = set()
    for f in welch_polynomial_pairs(field):
        key = f.index_tuple()
        if key not in seen:
            seen.add(key)
            yield f


def count_welch_polynomials(p: int, m: int) -> int:
    """phi(p^m - 1)/m times the number of linearized permutations."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("degree must be positive")
    q = p**m
    prod = 1
    for k in range(m):
        prod *= q - p**k
    total = euler_phi(q - 1) * prod
    # m divides phi(q - 1): p generates a subgroup of order m modulo q - 1
    return total // m


def conjecture2_bound(p: int) -> int:
    """Lower bound phi(p^2-1)/2 * (p^2-p)(p^2-1) for degree-2 maps."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = p * p
    return euler_phi(q - 1) * (q - p) * (q - 1) // 2


def conjecture3_bound(p: int, m: int) -> int:
    """Conjectured count phi/m * (phi-1)(p^m-1)(p-1)^(m-1) p^(m-1), m >= 3."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 3:
        raise ValueError("bound is stated for degree at least 3")
    q = p**m
    phi = euler_phi(q - 1)
    return phi * (phi - 1) * (q - 1) * (p - 1) ** (m - 1) * p ** (m - 1) // m


def ratio_R(p: int, m: int) -> Fraction:
    """Exact ratio of the proven count to the conjectured degree-m bound.

    Uses the simplified closed form and cross-checks it against the raw
    quotient of the two counts; the two must agree identically.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 3:
        raise ValueError("ratio is stated for degree at least 3")
    num = p ** ((m - 1) * (m - 2) // 2)
    for k in range(1, m):
        num *= (p ** (m - k) - 1) // (p - 1)
    simplified = Fraction(num, euler_phi(p**m - 1) - 1)
    raw = Fraction(count_welch_polynomials(p, m), conjecture3_bound(p, m))
    if simplified != raw:
        raise ArithmeticError(f"ratio forms disagree at ({p}, {m}): {simplified} vs {raw}")
    return simplified


def ratio_table(p_lo: int, p_hi: int, m_lo: int, m_hi: int) -> list[tuple[int, int, Fraction]]:
    """Rows (p, m, R(p, m)) over primes p_lo..p_hi and degrees m_lo..m_hi."""
    if m_lo < 3:
        raise ValueError("ratio is stated for degree at least 3")
    return [
        (p, m, ratio_R(p, m))
        for p in range(max(2, p_lo), p_hi + 1)
        if is_prime(p)
        for m in range(m_lo, m_hi + 1)
    ]


def _census_cap(candidates: int, allow_large: bool) -> None:
    if candidates > CENSUS_HARD_CAP:
        raise ValueError(f"{candidates} candidates exceed hard cap {CENSUS_HARD_CAP}")
    if candidates > CENSUS_DEFAULT_CAP and not allow_large:
        raise ValueError(
            f"{candidates} candidates exceed default cap {CENSUS_DEFAULT_CAP}; "
            "pass allow_large=True to run"
        )


def _table_is_costas(v: Sequence[int], mul, sub, q: int, one: int) -> bool:
    # v is a permutation fixing 0 by construction, so d = 0 (row -f) holds
    for d in range(1, q):
        if d == one:
            continue
        md = mul[d]
        seen = bytearray(q)
        for x in range(q):
            val = sub[v[md[x]]][v[x]]
            if seen[val]:
                return False
            seen[val] = 1
    return True


def _table_is_shifting(v: Sequence[int], mul, sub, q: int, one: int) -> bool:
    vinv = [0] * q
    for x, y in enumerate(v):
        vinv[y] = x
    for d in range(q):
        if d == one:
            continue
        a = vinv[sub[v[mul[d][one]]][v[one]]]
        if a == 0:
            return False
        md, ma = mul[d], mul[a]
        if any(sub[v[md[x]]][v[x]] != v[ma[x]] for x in range(q)):
            return False
    return True


def _census_worker(args: tuple[int, int, str, int]) -> list[tuple[int, ...]]:
    """Scan all permutations whose first nonzero image is fixed."""
    p, m, kind, first = args
    field = make_field(p, m)
    q = field.q
    t = field.tables()
    mul, sub = t.mul, t.sub
    one = field.one.index
    check = _table_is_shifting if kind == "shifting" else _table_is_costas
    rest = [y for y in range(1, q) if y != first]
    hits = []
    for tail in permutations(rest):
        v = (0, first, *tail)
        if check(v, mul, sub, q, one):
            hits.append(v)
    return hits


def _census_tables(field: FiniteField, kind: str, workers: int, allow_large: bool):
    q = field.q
    _census_cap(factorial(q - 1), allow_large)
    if q == 2:
        v = (0, 1)
        t = field.tables()
        check = _table_is_shifting if kind == "shifting" else _table_is_costas
        return [v] if check(v, t.mul, t.sub, q, field.one.index) else []
    jobs = [(field.p, field.m, kind, first) for first in range(1, q)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_census_worker, jobs))
    else:
        chunks = [_census_worker(job) for job in jobs]
    return sorted(v for chunk in chunks for v in chunk)


def census_shifting(
    field: FiniteField, workers: int = 1, allow_large: bool = False
) -> set[FqPolynomial]:
    """All shifting Costas polynomials, by census of permutations fixing 0."""
    tables = _census_tables(field, "shifting", workers, allow_large)
    return {interpolate_table(field, v) for v in tables}


def census_costas(
    field: FiniteField, workers: int = 1, allow_large: bool = False
) -> set[FqPolynomial]:
    """All Costas polynomials, by census of permutations fixing 0."""
    tables = _census_tables(field, "costas", workers, allow_large)
    return {interpolate_table(field, v) for v in tables}


def _circular_worker(args: tuple[int, int]) -> list[tuple[int, ...]]:
    p, first = args
    rest = [y for y in range(1, p) if y != first]
    return [
        (first, *tail) for tail in permutations(rest) if is_circular((first, *tail))
    ]


def census_circular_prime(
    p: int, workers: int = 1, allow_large: bool = False
) -> set[tuple[int, ...]]:
    """All circular Costas sequences of length p-1; must be the Welch family."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    _census_cap(factorial(p - 1), allow_large)
    jobs = [(p, first) for first in range(1, p)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_circular_worker, jobs))
    else:
        chunks = [_circular_worker(job) for job in jobs]
    found = {seq for chunk in chunks for seq in chunk}
    expected = welch_family(p)
    if found != expected:
        raise CensusMismatchError(
            f"census found {len(found)} circular sequences at p={p}, "
            f"expected the {len(expected)} exponential ones"
        )
    return found


def lemma_checks(field: FiniteField, workers: int = 1, allow_large: bool = False) -> dict:
    """Exhaustive consistency report at one field size.

    Checks that every censused shifting polynomial is Costas, that
    composing with x^s preserves the shifting property exactly when
    gcd(s, q-1) = 1, and that every L(x^s) composition is Costas.
    """
    q = field.q
    shifting = sorted(census_shifting(field, workers, allow_large), key=FqPolynomial.index_tuple)
    costas_ok = sum(1 for f in shifting if is_costas_polynomial(f))
    s_values = list(range(1, q - 1)) or [1]
    law_ok = True
    for f in shifting:
        for s in s_values:
            composed = f.substitute_power(s)
            if is_shifting_costas(composed)[0] != (gcd(s, q - 1) == 1):
                law_ok = False
    welch = list(enumerate_welch_polynomials(field))
    welch_ok = sum(1 for f in welch if is_costas_polynomial(f))
    return {
        "q": q,
        "shifting_are_costas": {"passed": costas_ok, "total": len(shifting)},
        "composition_law": {"s_checked": s_values, "ok": law_ok},
        "welch_form_are_costas": {"passed": welch_ok, "total": len(welch)},
    }
