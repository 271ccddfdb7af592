"""Maps between finite abelian groups with the circular Costas property.

A GroupMap f: G1 -> G2 with |G1| + 1 = |G2| is circular Costas when f is
injective and, for every nonzero k in G1, the difference map
i -> f(i+k) - f(i) is injective.  It is standard when its image misses
exactly the zero of G2.  The exponential construction i -> L(alpha^(i+c))
(alpha a primitive field element, L a linearized permutation polynomial)
always produces standard circular Costas maps Z_{q-1} -> (GF(q), +).

Equivalence of two maps allows arbitrary isomorphisms on both sides and is
decided by exhaustive search: one fixed base isomorphism per side composed
with every automorphism pair.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .abgroup import (
    AbelianGroup,
    Coords,
    automorphisms,
    compose_tables,
    is_isomorphic,
    isomorphism_witness,
)
from .fqpoly import LinearizedPoly
from .gf import FiniteField

BIJECTIVE_SEARCH_CAP = 7


class GroupMap:
    """Total map between two abelian groups, stored as an element table."""

    __slots__ = ("domain", "codomain", "images")

    def __init__(
        self,
        domain: AbelianGroup,
        codomain: AbelianGroup,
        images: Mapping[Coords, Coords] | Iterable[tuple[Coords, Coords]],
    ):
        table = dict(images.items() if isinstance(images, Mapping) else images)
        normalized = {}
        for x in domain.elements():
            if x not in table:
                raise ValueError(f"map is not total: missing image of {x}")
            normalized[x] = codomain.check(table[x])
        if len(table) != domain.order:
            raise ValueError("map has images for elements outside the domain")
        self.domain = domain
        self.codomain = codomain
        self.images = normalized

    def __call__(self, x: Coords) -> Coords:
        return self.images[self.domain.check(x)]

    def is_injective(self) -> bool:
        return len(set(self.images.values())) == self.domain.order

    def image(self) -> set[Coords]:
        return set(self.images.values())

    def image_indexes(self) -> list[int]:
        """Codomain element indexes in domain element order."""
        idx = self.codomain.index_of
        return [idx(self.images[x]) for x in self.domain.elements()]

    def translated(self, t: Coords) -> "GroupMap":
        """The map x -> f(x) + t."""
        t = self.codomain.check(t)
        return GroupMap(
            self.domain,
            self.codomain,
            {x: self.codomain.add(y, t) for x, y in self.images.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, GroupMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(sorted(self.images.items()))))

    def __repr__(self):
        return f"GroupMap({self.domain.descriptor()} -> {self.codomain.descriptor()}, {len(self.images)} points)"


@lru_cache(maxsize=None)
def _shift_tables(group: AbelianGroup) -> tuple[tuple[int, ...], ...]:
    """For each nonzero k (by index): the index permutation i -> i + k."""
    els = group.elements()
    out = []
    for k in els[1:]:
        out.append(tuple(group.index_of(group.add(x, k)) for x in els))
    return tuple(out)


def _difference_rows_injective(
    images_idx: Sequence[int],
    shifts: Sequence[Sequence[int]],
    sub_t: Sequence[Sequence[int]],
) -> bool:
    n = len(images_idx)
    for shift in shifts:
        seen = set()
        for i in range(n):
            d = sub_t[images_idx[shift[i]]][images_idx[i]]
            if d in seen:
                return False
            seen.add(d)
    return True


def is_circular_costas(f: GroupMap) -> bool:
    """Injectivity of f and of every difference map i -> f(i+k) - f(i)."""
    if f.codomain.order != f.domain.order + 1:
        raise ValueError(
            f"codomain order must exceed domain order by one "
            f"({f.domain.order} vs {f.codomain.order})"
        )
    if not f.is_injective():
        return False
    return _difference_rows_injective(
        f.image_indexes(), _shift_tables(f.domain), f.codomain.sub_index_table()
    )


def is_standard(f: GroupMap) -> bool:
    """True iff the image misses exactly the zero of the codomain."""
    return f.image() == set(f.codomain.elements()) - {f.codomain.zero()}


def standardized(f: GroupMap) -> GroupMap:
    """Translate an injective |G2| = |G1|+1 map so its image misses zero."""
    if f.codomain.order != f.domain.order + 1 or not f.is_injective():
        raise ValueError("only injective maps missing a single element can be standardized")
    (missed,) = set(f.codomain.elements()) - f.image()
    return f.translated(f.codomain.neg(missed))


def welch_map(field: FiniteField, L: LinearizedPoly | None = None, c: int = 0) -> GroupMap:
    """The map i -> L(alpha^(i+c)) from Z_{q-1} into the additive group Z_p^m."""
    if L is None:
        L = LinearizedPoly(field, [1] + [0] * (field.m - 1))
    if L.field is not field:
        raise ValueError("L is defined over a different field")
    ltable = L.value_table()
    if any(ltable[x] == 0 for x in range(1, field.q)):
        raise ValueError("L is not a permutation")
    q = field.q
    domain = AbelianGroup([q - 1]) if q > 2 else AbelianGroup([])
    codomain = AbelianGroup([field.p] * field.m)
    alpha_pow = field.tables().alpha_pow
    els = field.elements
    images = {}
    for i, x in enumerate(domain.elements()):
        images[x] = els[ltable[alpha_pow[(i + c) % (q - 1)]]].coords
    return GroupMap(domain, codomain, images)


def are_equivalent(
    f: GroupMap, g: GroupMap, translate: bool = False
) -> tuple[bool, dict | None]:
    """Search for isomorphisms (psi1, psi2) with g(psi1(x)) = psi2(f(x)).

    With translate=True the images may additionally differ by a constant:
    g(psi1(x)) = psi2(f(x)) + t.  The search composes one base isomorphism
    per side with every automorphism pair, so it is exhaustive.
    """
    if not (is_isomorphic(f.domain, g.domain) and is_isomorphic(f.codomain, g.codomain)):
        return False, None
    base1 = isomorphism_witness(f.domain, g.domain)
    base2 = isomorphism_witness(f.codomain, g.codomain)
    els = f.domain.elements()
    zero2 = g.codomain.zero()
    for a1 in automorphisms(g.domain):
        psi1 = compose_tables(a1, base1)
        for a2 in automorphisms(g.codomain):
            psi2 = compose_tables(a2, base2)
            t = g.codomain.sub(g.images[psi1[els[0]]], psi2[f.images[els[0]]])
            if not translate and t != zero2:
                continue
            if all(
                g.images[psi1[x]] == g.codomain.add(psi2[f.images[x]], t) for x in els
            ):
                witness = {"domain": psi1, "codomain": psi2}
                if translate:
                    witness["shift"] = t
                return True, witness
    return False, None


class MdArray:
    """Multidimensional periodic binary array given by its set of ones."""

    __slots__ = ("dims", "ones")

    def __init__(self, dims: Sequence[int], ones: Iterable[Sequence[int]]):
        self.dims = tuple(int(d) for d in dims)
        if any(d < 1 for d in self.dims):
            raise ValueError("dimensions must be positive")
        cleaned = set()
        for coord in ones:
            c = tuple(int(v) for v in coord)
            if len(c) != len(self.dims) or any(not 0 <= v < d for v, d in zip(c, self.dims)):
                raise ValueError(f"coordinate {c} outside array of dims {self.dims}")
            cleaned.add(c)
        self.ones = frozenset(cleaned)

    def sorted_ones(self) -> list[tuple[int, ...]]:
        return sorted(self.ones)

    def render(self) -> str:
        """Dot raster; 2-D directly, 3-D as slices along the first axis."""
        if len(self.dims) == 2:
            return self._render_plane(self.ones, self.dims)
        if len(self.dims) == 3:
            blocks = []
            for s in range(self.dims[0]):
                plane = {c[1:] for c in self.ones if c[0] == s}
                blocks.append(f"[{s}]\n" + self._render_plane(plane, self.dims[1:]))
            return "\n\n".join(blocks)
        raise ValueError("raster rendering only supports 2 or 3 dimensions")

    @staticmethod
    def _render_plane(ones: set[tuple[int, ...]], dims: tuple[int, ...]) -> str:
        n1, n2 = dims
        lines = []
        for v in range(n2 - 1, -1, -1):
            lines.append(" ".join("1" if (i, v) in ones else "." for i in range(n1)))
        return "\n".join(lines)

    def __eq__(self, other):
        if not isinstance(other, MdArray):
            return NotImplemented
        return self.dims == other.dims and self.ones == other.ones

    def __repr__(self):
        return f"MdArray(dims={list(self.dims)}, {len(self.ones)} ones)"


def export_array(
    f: GroupMap, domain_split: Sequence[int], codomain_split: Sequence[int]
) -> MdArray:
    """Realize a map as a periodic array over factored coordinate axes.

    The splits must present groups isomorphic to the domain and codomain;
    the ones are the graph points carried through witness isomorphisms.
    """
    gd, gc = AbelianGroup(domain_split), AbelianGroup(codomain_split)
    w1 = isomorphism_witness(f.domain, gd)
    w2 = isomorphism_witness(f.codomain, gc)
    dims = tuple(gd.factors) + tuple(gc.factors)
    ones = [w1[x] + w2[y] for x, y in f.images.items()]
    return MdArray(dims, ones)


def verify_periodic_costas(arr: MdArray, h: int) -> bool:
    """Distinct-difference check for the array split after axis h.

    The first h axes form the domain group, the rest the codomain group;
    the array must place exactly one 1 in every domain column, and for every
    nonzero domain shift k the codomain differences must all be distinct.
    """
    if not 1 <= h < len(arr.dims):
        raise ValueError(f"split position {h} outside 1..{len(arr.dims) - 1}")
    gd, gc = AbelianGroup(arr.dims[:h]), AbelianGroup(arr.dims[h:])
    images: dict[Coords, Coords] = {}
    for c in arr.ones:
        a, b = c[:h], c[h:]
        if a in images:
            return False
        images[a] = b
    if len(images) != gd.order:
        return False
    els = gd.elements()
    for k in els[1:]:
        seen = set()
        for a in els:
            d = gc.sub(images[gd.add(a, k)], images[a])
            if d in seen:
                return False
            seen.add(d)
    return True


def no_bijective_costas(g: AbelianGroup, cap: int = BIJECTIVE_SEARCH_CAP) -> bool:
    """Exhaustively confirm no bijection g -> g has all difference maps injective."""
    if g.order < 2:
        raise ValueError("the search needs |g| >= 2")
    if g.order > cap:
        raise ValueError(f"bijective search capped at order {cap}")
    shifts = _shift_tables(g)
    sub_t = g.sub_index_table()
    for perm in permutations(range(g.order)):
        if _difference_rows_injective(perm, shifts, sub_t):
            return False
    return True


def injective_maps(domain: AbelianGroup, codomain: AbelianGroup) -> Iterable[GroupMap]:
    """All injective maps domain -> codomain (exhaustive, lexicographic)."""
    els_d = domain.elements()
    els_c = codomain.elements()
    for chosen in permutations(els_c, domain.order):
        yield GroupMap(domain, codomain, dict(zip(els_d, chosen)))
