"""Polynomials over GF(q) reduced as functions on the field.

Every polynomial is kept in the canonical form of degree < q obtained by
folding exponents e >= q down with x^e = x^(e-(q-1)).  The fold is only
applied while e >= q, never to the constant term, so the represented
function (including its value at 0) is preserved and two canonical
polynomials are equal iff they agree pointwise on GF(q).

Also hosts linearized polynomials sum(c_j * x^(p^j)), whose bijectivity is
decided by exhaustive evaluation; the permutation ones are enumerated in
lexicographic coefficient order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .gf import TABLE_CAP, FieldElement, FiniteField


def _fold_exponent(e: int, q: int) -> int:
    while e >= q:
        e -= q - 1
    return e


class FqPolynomial:
    """Canonical reduced polynomial over one finite field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[FieldElement | int]):
        raw = [field.element(c) for c in coeffs]
        folded = [field.zero] * min(len(raw), field.q)
        for e, c in enumerate(raw):
            if c.index:
                folded[_fold_exponent(e, field.q)] += c
        while folded and folded[-1].index == 0:
            folded.pop()
        self.field = field
        self.coeffs = tuple(folded)

    @classmethod
    def from_terms(cls, field: FiniteField, terms: Iterable[tuple[int, FieldElement | int]]) -> "FqPolynomial":
        """Polynomial from sparse (exponent, coefficient) pairs."""
        acc: dict[int, FieldElement] = {}
        for e, c in terms:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            e = _fold_exponent(e, field.q)
            acc[e] = acc.get(e, field.zero) + field.element(c)
        coeffs = [field.zero] * (max(acc) + 1 if acc else 0)
        for e, c in acc.items():
            coeffs[e] = c
        return cls(field, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __call__(self, x: FieldElement) -> FieldElement:
        x = self.field.element(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def value_table(self) -> list[int]:
        """Values on all of GF(q) as element indexes, position = argument index."""
        F = self.field
        cidx = [c.index for c in self.coeffs]
        if F.q <= TABLE_CAP:
            t = F.tables()
            return [t.eval_poly(cidx, x) for x in range(F.q)]
        return [self(x).index for x in F.elements]

    def is_permutation(self) -> bool:
        return len(set(self.value_table())) == self.field.q

    def substitute_power(self, s: int) -> "FqPolynomial":
        """The canonical form of x -> f(x^s), 1 <= s <= q-1."""
        if not 1 <= s <= self.field.q - 1:
            raise ValueError(f"power {s} outside [1, {self.field.q - 1}]")
        return FqPolynomial.from_terms(
            self.field,
            [(e * s if e else 0, c) for e, c in enumerate(self.coeffs) if c.index],
        )

    def index_tuple(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, FqPolynomial):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.index_tuple()))

    def text(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c.index:
                continue
            if e == 0:
                terms.append(c.text())
            else:
                xe = "x" if e == 1 else f"x^{e}"
                terms.append(f"{c.text()}*{xe}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"FqPolynomial({self.field.descriptor()}: {self.text()})"


@lru_cache(maxsize=None)
def _cardinal_basis(field: FiniteField) -> list[list[int]]:
    """basis[u][j]: coefficient j of the polynomial that is 1 at u, 0 elsewhere.

    Over GF(q) the product of (x - v) over all v is x^q - x, whose derivative
    is the constant -1, so the basis polynomial at u is -(x^q - x)/(x - u);
    synthetic division gives each quotient in O(q).
    """
    t = field.tables()
    q = field.q
    one = field.one.index
    neg_one = t.neg[one]
    basis = []
    for u in range(q):
        b = [0] * q
        b[q - 1] = one
        for i in range(q - 1, 0, -1):
            acc = t.mul[u][b[i]]
            if i == 1:
                acc = t.add[acc][neg_one]
            b[i - 1] = acc
        basis.append([t.neg[c] for c in b])
    return basis


def interpolate(
    field: FiniteField,
    points: Sequence[tuple[FieldElement, FieldElement]],
    pad_missing: bool = False,
) -> FqPolynomial:
    """The canonical polynomial through the given (x, y) points.

    By default exactly q points (one per field element) are required; with
    pad_missing=True absent arguments are pinned to value 0.
    """
    t = field.tables()
    q = field.q
    values: list[int | None] = [None] * q
    for x, y in points:
        x, y = field.element(x), field.element(y)
        if values[x.index] is not None:
            raise ValueError(f"duplicate interpolation point at {x!r}")
        values[x.index] = y.index
    if pad_missing:
        values = [0 if v is None else v for v in values]
    elif any(v is None for v in values):
        raise ValueError(f"need exactly {q} points, got {len(points)}")
    basis = _cardinal_basis(field)
    coeffs = [0] * q
    add = t.add
    for u, y in enumerate(values):
        if y:
            row = basis[u]
            mul_y = t.mul[y]
            for j in range(q):
                coeffs[j] = add[coeffs[j]][mul_y[row[j]]]
    return FqPolynomial(field, [field.elements[c] for c in coeffs])


def interpolate_table(field: FiniteField, table: Sequence[int]) -> FqPolynomial:
    """Interpolate from a full value table given as element indexes."""
    els = field.elements
    return interpolate(field, [(els[x], els[v]) for x, v in enumerate(table)])


class LinearizedPoly:
    """L(x) = sum of c_j * x^(p^j) for j < m; always additive on GF(p^m)."""

    __slots__ = ("field", "lcoeffs")

    def __init__(self, field: FiniteField, lcoeffs: Iterable[FieldElement | int]):
        coeffs = tuple(field.element(c) for c in lcoeffs)
        if len(coeffs) != field.m:
            raise ValueError(f"expected {field.m} coefficients, got {len(coeffs)}")
        self.field = field
        self.lcoeffs = coeffs

    def __call__(self, x: FieldElement) -> FieldElement:
        x = self.field.element(x)
        acc = self.field.zero
        xp = x
        for j, c in enumerate(self.lcoeffs):
            if j:
                xp = xp**self.field.p
            if c.index:
                acc = acc + c * xp
        return acc

    def value_table(self) -> list[int]:
        return _linearized_table(self.field, tuple(c.index for c in self.lcoeffs))

    def is_permutation(self) -> bool:
        # additive maps are bijective iff the kernel is trivial
        table = self.value_table()
        return all(table[x] for x in range(1, self.field.q))

    def to_polynomial(self) -> FqPolynomial:
        return FqPolynomial.from_terms(
            self.field, [(self.field.p**j, c) for j, c in enumerate(self.lcoeffs) if c.index]
        )

    def __eq__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self.field is other.field and self.lcoeffs == other.lcoeffs

    def __hash__(self):
        return hash((id(self.field), tuple(c.index for c in self.lcoeffs)))

    def __repr__(self):
        return f"LinearizedPoly({self.field.descriptor()}: {self.to_polynomial().text()})"


def _linearized_table(field: FiniteField, lidx: tuple[int, ...]) -> list[int]:
    t = field.tables()
    add, mul, frob = t.add, t.mul, t.frob
    out = [0] * field.q
    for j, c in enumerate(lidx):
        if c:
            mc, fj = mul[c], frob[j]
            out = [add[v][mc[fj[x]]] for x, v in enumerate(out)]
    return out


@lru_cache(maxsize=None)
def _linearized_permutation_tables(field: FiniteField) -> list[tuple[tuple[int, ...], list[int]]]:
    """All bijective linearized coefficient tuples with their value tables.

    Candidates are scanned in lexicographic coefficient order; each is kept
    iff exhaustive evaluation shows a trivial kernel.
    """
    from itertools import product

    q = field.q
    t = field.tables()
    add, mul, frob = t.add, t.mul, t.frob
    out = []
    for lidx in product(range(q), repeat=field.m):
        table = [0] * q
        ok = True
        for x in range(1, q):
            v = 0
            for j, c in enumerate(lidx):
                if c:
                    v = add[v][mul[c][frob[j][x]]]
            if not v:
                ok = False
                break
            table[x] = v
        if ok:
            out.append((lidx, table))
    return out


def enumerate_linearized_permutations(field: FiniteField) -> Iterator[LinearizedPoly]:
    """All linearized permutation polynomials, lexicographic by coefficients."""
    els = field.elements
    for lidx, _ in _linearized_permutation_tables(field):
        yield LinearizedPoly(field, [els[c] for c in lidx])


def count_linearized_permutations(field: FiniteField) -> int:
    """Formula count: product over k < m of (p^m - p^k)."""
    total = 1
    for k in range(field.m):
        total *= field.q - field.p**k
    return total


def compose_monomial(L: LinearizedPoly, s: int) -> FqPolynomial:
    """Canonical form of L(x^s)."""
    return L.to_polynomial().substitute_power(s)
