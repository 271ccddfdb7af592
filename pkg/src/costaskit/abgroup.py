"""Finite abelian groups as explicit products of cyclic factors.

A group is Z_{n1} x ... x Z_{nh}; an element is the tuple of its
coordinates.  Isomorphism is decided on the invariant-factor canonical form
(d1 | d2 | ... ), and an explicit witness isomorphism is assembled by
splitting every cyclic factor into its prime-power components (CRT) and
matching the two component multisets.

Automorphism groups are enumerated exhaustively: for elementary abelian
groups as invertible matrices over Z_p built row by row, otherwise by brute
force over generator images.  Both streams are deterministic.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd, lcm, prod
from typing import Iterator, Sequence

from .numbers import factorize

AUT_ELEMENTARY_CAP = 10**4
AUT_GENERAL_CAP = 10**3
WITNESS_CAP = 10**5
TABLE_CAP = 1024

Coords = tuple[int, ...]


class AbelianGroup:
    """Product of cyclic groups with tuple elements; immutable."""

    __slots__ = ("factors", "order", "_weights")

    def __init__(self, factors: Sequence[int]):
        fac = tuple(int(f) for f in factors)
        if any(f < 2 for f in fac):
            raise ValueError(f"cyclic factors must be >= 2, got {list(fac)}")
        self.factors = fac
        self.order = prod(fac) if fac else 1
        self._weights = tuple(prod(fac[j + 1 :]) for j in range(len(fac)))

    # -- structure -------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.factors)

    def invariants(self) -> tuple[int, ...]:
        """Invariant factor form d1 | d2 | ... | dk, ascending."""
        per_prime: dict[int, list[int]] = {}
        for f in self.factors:
            for p, e in factorize(f).items():
                per_prime.setdefault(p, []).append(p**e)
        for powers in per_prime.values():
            powers.sort(reverse=True)
        depth = max((len(v) for v in per_prime.values()), default=0)
        descending = []
        for j in range(depth):
            d = 1
            for powers in per_prime.values():
                if j < len(powers):
                    d *= powers[j]
            descending.append(d)
        return tuple(reversed(descending))

    def is_elementary_abelian(self) -> tuple[bool, int | None, int | None]:
        """(True, p, m) when the group is Z_p^m, else (False, None, None)."""
        inv = self.invariants()
        if not inv:
            return False, None, None
        p = inv[0]
        fac = factorize(p)
        if len(fac) == 1 and next(iter(fac.values())) == 1 and all(d == p for d in inv):
            return True, p, len(inv)
        return False, None, None

    # -- elements --------------------------------------------------------------

    def zero(self) -> Coords:
        return (0,) * len(self.factors)

    def elements(self) -> tuple[Coords, ...]:
        """All elements, lexicographic; position equals index_of."""
        return _elements_cached(self.factors)

    def index_of(self, x: Coords) -> int:
        return sum(c * w for c, w in zip(x, self._weights))

    def check(self, x: Sequence[int]) -> Coords:
        t = tuple(int(c) for c in x)
        if len(t) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} coordinates, got {len(t)}")
        return tuple(c % f for c, f in zip(t, self.factors))

    def add(self, x: Coords, y: Coords) -> Coords:
        return tuple((a + b) % f for a, b, f in zip(x, y, self.factors))

    def neg(self, x: Coords) -> Coords:
        return tuple((-a) % f for a, f in zip(x, self.factors))

    def sub(self, x: Coords, y: Coords) -> Coords:
        return tuple((a - b) % f for a, b, f in zip(x, y, self.factors))

    def scalar(self, k: int, x: Coords) -> Coords:
        return tuple((k * a) % f for a, f in zip(x, self.factors))

    def element_order(self, x: Coords) -> int:
        return lcm(*(f // gcd(f, a) for a, f in zip(x, self.factors))) if self.factors else 1

    def sub_index_table(self) -> tuple[tuple[int, ...], ...]:
        """table[i][j] = index_of(elements[i] - elements[j]); small groups only."""
        if self.order > TABLE_CAP:
            raise ValueError(f"difference table capped at order {TABLE_CAP}")
        return _sub_table_cached(self.factors)

    # -- plumbing ----------------------------------------------------------------

    def descriptor(self) -> str:
        return "x".join(f"Z{f}" for f in self.factors) if self.factors else "Z1"

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"AbelianGroup({self.descriptor()})"


@lru_cache(maxsize=None)
def _elements_cached(factors: tuple[int, ...]) -> tuple[Coords, ...]:
    return tuple(product(*(range(f) for f in factors)))


@lru_cache(maxsize=None)
def _sub_table_cached(factors: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    g = AbelianGroup(factors)
    els = g.elements()
    return tuple(tuple(g.index_of(g.sub(x, y)) for y in els) for x in els)


def _primary_components(g: AbelianGroup) -> list[tuple[int, int, int]]:
    """(prime, exponent, factor position) for every prime-power component."""
    out = []
    for i, f in enumerate(g.factors):
        for p, e in sorted(factorize(f).items()):
            out.append((p, e, i))
    return out


def is_isomorphic(g: AbelianGroup, h: AbelianGroup) -> bool:
    return g.invariants() == h.invariants()


def isomorphism_witness(g: AbelianGroup, h: AbelianGroup) -> dict[Coords, Coords]:
    """An explicit isomorphism g -> h as an element table.

    Each side is split into prime-power cyclic components; matching
    components (sorted by prime then exponent) are identified, and the
    cyclic pieces are glued back together with the CRT.
    """
    if not is_isomorphic(g, h):
        raise ValueError(f"{g.descriptor()} and {h.descriptor()} are not isomorphic")
    if g.order > WITNESS_CAP:
        raise ValueError(f"witness construction capped at order {WITNESS_CAP}")

    comps_g = sorted(_primary_components(g))
    comps_h = sorted(_primary_components(h))

    def to_primary(group: AbelianGroup, comps, x: Coords) -> tuple[int, ...]:
        return tuple(x[i] % p**e for p, e, i in comps)

    def from_primary(group: AbelianGroup, comps, residues: tuple[int, ...]) -> Coords:
        coords = [0] * len(group.factors)
        mod = [1] * len(group.factors)
        for (p, e, i), r in zip(comps, residues):
            pe = p**e
            if mod[i] == 1:
                coords[i], mod[i] = r % pe, pe
            else:
                from .numbers import crt_pair

                coords[i] = crt_pair(coords[i], mod[i], r, pe)
                mod[i] *= pe
        return tuple(coords)

    table = {}
    for x in g.elements():
        table[x] = from_primary(h, comps_h, to_primary(g, comps_g, x))
    return table


def invert_table(t: dict[Coords, Coords]) -> dict[Coords, Coords]:
    return {v: k for k, v in t.items()}


def compose_tables(outer: dict[Coords, Coords], inner: dict[Coords, Coords]) -> dict[Coords, Coords]:
    """x -> outer(inner(x))."""
    return {x: outer[y] for x, y in inner.items()}


def _gl_matrices(p: int, m: int) -> Iterator[tuple[Coords, ...]]:
    """Invertible m x m matrices over Z_p, rows lexicographic."""
    vectors = list(product(range(p), repeat=m))

    def reduce(v: list[int], basis: list[tuple[int, list[int]]]) -> list[int]:
        for pivot, b in basis:
            c = v[pivot]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, b)]
        return v

    def walk(rows: list[Coords], basis: list[tuple[int, list[int]]]) -> Iterator[tuple[Coords, ...]]:
        if len(rows) == m:
            yield tuple(rows)
            return
        for v in vectors:
            red = reduce(list(v), basis)
            if any(red):
                pivot = next(i for i, x in enumerate(red) if x)
                inv = pow(red[pivot], -1, p)
                norm = [x * inv % p for x in red]
                yield from walk(rows + [v], basis + [(pivot, norm)])

    yield from walk([], [])


def automorphisms(g: AbelianGroup) -> Iterator[dict[Coords, Coords]]:
    """All automorphisms of g as element tables, deterministic order."""
    elem, p, m = g.is_elementary_abelian()
    if elem and g.rank == m:
        if g.order > AUT_ELEMENTARY_CAP:
            raise ValueError(f"automorphism enumeration capped at order {AUT_ELEMENTARY_CAP}")
        els = g.elements()
        for rows in _gl_matrices(p, m):
            table = {}
            for x in els:
                img = [0] * m
                for j, c in enumerate(x):
                    if c:
                        row = rows[j]
                        img = [(a + c * b) % p for a, b in zip(img, row)]
                table[x] = tuple(img)
            yield table
        return

    if g.order > AUT_GENERAL_CAP:
        raise ValueError(f"automorphism enumeration capped at order {AUT_GENERAL_CAP}")
    els = g.elements()
    candidates = []
    for n_i in g.factors:
        # a generator of Z_{n_i} may land on anything of order dividing n_i
        candidates.append([y for y in els if n_i % g.element_order(y) == 0])
    for images in product(*candidates):
        table = {}
        for x in els:
            acc = g.zero()
            for c, y in zip(x, images):
                if c:
                    acc = g.add(acc, g.scalar(c, y))
            table[x] = acc
        if len(set(table.values())) == g.order:
            yield table


def automorphism_count(g: AbelianGroup) -> int:
    return sum(1 for _ in automorphisms(g))
