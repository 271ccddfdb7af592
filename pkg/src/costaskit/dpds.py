"""Direct product difference sets in a product A x B of abelian groups.

With |A| = n-1 and |B| = n, a subset D of A x B is a direct product
difference set of order n when every element outside the two axes
(A x {0}) u ({0} x B) is represented exactly once as a difference of
distinct elements of D and no nonzero axis element is represented at
all.  A counting argument forces |D| = n-1 with pairwise distinct first
and second coordinates, so every such D is the graph of an injective
map A -> B; the map is circular Costas exactly when its graph is a
direct product difference set.

Two sets are equivalent when an automorphism of A x B followed by a
translation carries one onto the other.  |A| and |B| are consecutive,
hence coprime, so every automorphism of the product splits as a pair of
component automorphisms.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .abgroup import AbelianGroup, Coords, automorphisms
from .circmap import GroupMap

Point = tuple[Coords, Coords]

SEARCH_CAP = 200_000


class ProductDifferenceSet:
    """Candidate difference set: points (a, b) with a in A and b in B."""

    __slots__ = ("group_a", "group_b", "points")

    def __init__(
        self,
        group_a: AbelianGroup,
        group_b: AbelianGroup,
        points: Iterable[Sequence],
    ):
        if group_a.order + 1 != group_b.order or group_b.order < 3:
            raise ValueError(
                f"need |A| + 1 = |B| >= 3, got |A| = {group_a.order} and |B| = {group_b.order}"
            )
        cleaned = set()
        for point in points:
            if len(point) != 2:
                raise ValueError(f"point {point} is not an (a, b) pair")
            a, b = point
            cleaned.add((group_a.check(a), group_b.check(b)))
        self.group_a = group_a
        self.group_b = group_b
        self.points = frozenset(cleaned)

    @property
    def order(self) -> int:
        return self.group_b.order

    def sorted_points(self) -> list[Point]:
        return sorted(self.points)

    def difference_triples(self) -> list[tuple[Point, Point, Point]]:
        """All (d, e, d - e) over ordered pairs of distinct points."""
        sub_a, sub_b = self.group_a.sub, self.group_b.sub
        return [
            (d, e, (sub_a(d[0], e[0]), sub_b(d[1], e[1])))
            for d in self.sorted_points()
            for e in self.sorted_points()
            if d != e
        ]

    def translated(self, a: Coords, b: Coords) -> "ProductDifferenceSet":
        a = self.group_a.check(a)
        b = self.group_b.check(b)
        return ProductDifferenceSet(
            self.group_a,
            self.group_b,
            [(self.group_a.add(pa, a), self.group_b.add(pb, b)) for pa, pb in self.points],
        )

    def transformed(
        self, psi_a: dict[Coords, Coords], psi_b: dict[Coords, Coords]
    ) -> "ProductDifferenceSet":
        return ProductDifferenceSet(
            self.group_a, self.group_b, [(psi_a[pa], psi_b[pb]) for pa, pb in self.points]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProductDifferenceSet)
            and self.group_a == other.group_a
            and self.group_b == other.group_b
            and self.points == other.points
        )

    def __hash__(self) -> int:
        return hash((self.group_a, self.group_b, self.points))

    def __repr__(self) -> str:
        pts = ", ".join(str(p) for p in self.sorted_points())
        return f"ProductDifferenceSet({self.group_a.descriptor()}x{self.group_b.descriptor()}, {{{pts}}})"


def _covers_off_axis_once(
    pairs: Sequence[tuple[int, int]], group_a: AbelianGroup, group_b: AbelianGroup
) -> bool:
    """Check the difference condition on index pairs (ia, ib).

    Any repeated first or second coordinate puts a difference on an axis,
    so those candidates fail immediately; the survivors need one dense
    counter sweep with |D|(|D|-1) = (n-1)(n-2) differences landing on the
    (n-1)(n-2) off-axis cells without collision.
    """
    k = len(pairs)
    if k != group_a.order:
        return False
    if len({ia for ia, _ in pairs}) != k or len({ib for _, ib in pairs}) != k:
        return False
    sub_a = group_a.sub_index_table()
    sub_b = group_b.sub_index_table()
    nb = group_b.order
    seen = bytearray(group_a.order * nb)
    for i in range(k):
        ia, ib = pairs[i]
        for j in range(k):
            if i == j:
                continue
            ja, jb = pairs[j]
            cell = sub_a[ia][ja] * nb + sub_b[ib][jb]
            if seen[cell]:
                return False
            seen[cell] = 1
    return True


def is_dpds(d: ProductDifferenceSet) -> bool:
    idx_a, idx_b = d.group_a.index_of, d.group_b.index_of
    pairs = [(idx_a(a), idx_b(b)) for a, b in d.points]
    return _covers_off_axis_once(pairs, d.group_a, d.group_b)


def from_map(f: GroupMap) -> ProductDifferenceSet:
    """The graph {(x, f(x))} of an injective map as a candidate set."""
    if not f.is_injective():
        raise ValueError("map must be injective")
    return ProductDifferenceSet(f.domain, f.codomain, list(f.images.items()))


def to_map(d: ProductDifferenceSet) -> GroupMap:
    """The associated function a -> b, defined when firsts cover A."""
    images = {}
    for a, b in d.points:
        if a in images:
            raise ValueError(f"duplicate first coordinate {a}")
        images[a] = b
    return GroupMap(d.group_a, d.group_b, images)


def dpds_equivalent(d1: ProductDifferenceSet, d2: ProductDifferenceSet) -> bool:
    """Whether an automorphism pair plus a translation carries d1 to d2.

    For each automorphism image of d1 the translation is forced by where
    a fixed base point may land, so the search is exhaustive.
    """
    if d1.group_a != d2.group_a or d1.group_b != d2.group_b:
        raise ValueError("sets live in different ambient groups")
    if len(d1.points) != len(d2.points):
        return False
    if not d1.points:
        return True
    add_a, add_b = d1.group_a.add, d1.group_b.add
    sub_a, sub_b = d1.group_a.sub, d1.group_b.sub
    base = min(d1.points)
    for psi_a in automorphisms(d1.group_a):
        for psi_b in automorphisms(d1.group_b):
            moved = {(psi_a[a], psi_b[b]) for a, b in d1.points}
            base_moved = (psi_a[base[0]], psi_b[base[1]])
            for qa, qb in d2.points:
                ta = sub_a(qa, base_moved[0])
                tb = sub_b(qb, base_moved[1])
                if {(add_a(a, ta), add_b(b, tb)) for a, b in moved} == d2.points:
                    return True
    return False


def search_dpds(
    group_a: AbelianGroup, group_b: AbelianGroup, normalize: bool = False
) -> Iterator[ProductDifferenceSet]:
    """All difference sets in A x B by exhaustive subset scan.

    With normalize=True only candidates containing (0, 0) are scanned;
    translating any difference set moves some point to (0, 0) without
    changing its differences, so an empty normalized scan rules out
    existence entirely.
    """
    n = group_b.order
    cells = [
        (ia, ib) for ia in range(group_a.order) for ib in range(group_b.order)
    ]
    take = n - 1
    origin = cells[0]
    pool = cells[1:] if normalize else cells
    fixed = take - 1 if normalize else take
    total = 1
    for i in range(fixed):
        total = total * (len(pool) - i) // (i + 1)
    if total > SEARCH_CAP:
        raise ValueError(f"search space {total} exceeds cap {SEARCH_CAP}")
    els_a, els_b = group_a.elements(), group_b.elements()
    for chosen in combinations(pool, fixed):
        pairs = ((origin,) + chosen) if normalize else chosen
        if _covers_off_axis_once(pairs, group_a, group_b):
            yield ProductDifferenceSet(
                group_a, group_b, [(els_a[ia], els_b[ib]) for ia, ib in pairs]
            )


def search_none(n: int, normalize: bool = True) -> bool:
    """True when Z_{n-1} x Z_n contains no difference set of order n."""
    if n < 3:
        raise ValueError("order must be at least 3")
    group_a, group_b = AbelianGroup([n - 1]), AbelianGroup([n])
    return not any(search_dpds(group_a, group_b, normalize=normalize))
