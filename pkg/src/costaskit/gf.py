"""Finite fields GF(p^m) in polynomial coordinates.

An element is an m-tuple (c0, ..., c_{m-1}) of Z_p coordinates meaning
c0 + c1*a + ... + c_{m-1}*a^(m-1), where a is the class of x modulo a monic
irreducible polynomial of degree m.  When no modulus is supplied we take the
lexicographically smallest monic irreducible (coefficients compared from the
constant term up); for m == 1 the modulus is x and arithmetic is plain mod p.

Fields are immutable after construction.  Elements are interned, so identity
comparisons are safe within one field instance.  Heavy callers can grab the
integer-indexed operation tables via FiniteField.tables() and work on element
indexes directly; index order equals lexicographic coordinate order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .numbers import factorize, is_prime

# Full q x q operation tables are only built for fields this small.
TABLE_CAP = 1024
# The discrete log table is refused beyond this order.
DLOG_CAP = 2**20


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_divmod(a: tuple[int, ...], b: tuple[int, ...], p: int):
    """Quotient and remainder of a by monic-leading b over Z_p."""
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    inv_lead = pow(lead, -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        coef = a[i + db] * inv_lead % p
        if coef:
            q[i] = coef
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - coef * bj) % p
    return _poly_trim(tuple(q)), _poly_trim(tuple(a))


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive divisor check; fine for the desk-scale degrees used here."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = low + (1,)
            if not _poly_divmod(poly, divisor, p)[1]:
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over Z_p."""
    if m == 1:
        return (0, 1)
    for low in product(range(p), repeat=m):
        cand = low + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible of degree {m} over Z_{p}")  # unreachable


class FieldElement:
    """Immutable element of a FiniteField; arithmetic via operators."""

    __slots__ = ("field", "coords", "index")

    def __init__(self, field: "FiniteField", coords: tuple[int, ...], index: int):
        self.field = field
        self.coords = coords
        self.index = index

    def _peer(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.field.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented  # type: ignore[return-value]
        if other.field is not self.field:
            raise ValueError("operands come from different fields")
        return other

    def __add__(self, other):
        o = self._peer(other)
        if o is NotImplemented:
            return o
        f = self.field
        return f.elements[f._add_idx(self.index, o.index)]

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return f.elements[f._neg_idx(self.index)]

    def __sub__(self, other):
        o = self._peer(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._peer(other)
        if o is NotImplemented:
            return o
        f = self.field
        return f.elements[f._mul_idx(self.index, o.index)]

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.index == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        o = self._peer(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, e: int):
        f = self.field
        if self.index == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return f.one if e == 0 else f.zero
        e %= f.q - 1
        acc, base = f.one, self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.index == other.index
        if isinstance(other, int):
            return self == self.field.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.index))

    def __lt__(self, other):
        o = self._peer(other)
        return self.coords < o.coords

    def __bool__(self):
        return self.index != 0

    def text(self) -> str:
        return ",".join(str(c) for c in self.coords)

    def __repr__(self):
        return f"<{self.text()} in {self.field.descriptor()}>"


class FieldTables:
    """Integer-indexed operation tables for one small field."""

    __slots__ = ("add", "sub", "mul", "neg", "inv", "frob", "alpha_pow")

    def __init__(self, field: "FiniteField"):
        q, els = field.q, field.elements
        self.add = [[(a + b).index for b in els] for a in els]
        self.sub = [[(a - b).index for b in els] for a in els]
        self.mul = [[(a * b).index for b in els] for a in els]
        self.neg = [(-a).index for a in els]
        self.inv = [None] + [els[i].inverse().index for i in range(1, q)]
        # frob[j][x] = x**(p**j)
        frobp = [(x**field.p).index for x in els]
        self.frob = [list(range(q))]
        for _ in range(1, field.m):
            self.frob.append([frobp[i] for i in self.frob[-1]])
        alpha = field.primitive_element()
        self.alpha_pow = [field.one.index]
        for _ in range(q - 2):
            self.alpha_pow.append(self.mul[self.alpha_pow[-1]][alpha.index])

    def eval_poly(self, coeffs_idx: Sequence[int], x_idx: int) -> int:
        """Horner evaluation of an index-coefficient polynomial."""
        acc = 0
        mul_x = self.mul
        for c in reversed(coeffs_idx):
            acc = self.add[mul_x[acc][x_idx]][c]
        return acc


class FiniteField:
    """GF(p^m) with a fixed monic irreducible modulus."""

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.q = p**m
        if modulus is None:
            self.modulus = default_modulus(p, m)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if m > 1 and not _is_irreducible(mod, p):
                raise ValueError("modulus is not irreducible")
            self.modulus = mod

        # Index = lexicographic rank of the coordinate tuple (c0 weighs most).
        weights = [p ** (m - 1 - j) for j in range(m)]
        self._weights = weights
        coords_list = [None] * self.q
        for coords in product(range(p), repeat=m):
            idx = sum(c * w for c, w in zip(coords, weights))
            coords_list[idx] = coords
        self.elements: tuple[FieldElement, ...] = tuple(
            FieldElement(self, coords_list[i], i) for i in range(self.q)
        )
        self.zero = self.elements[0]
        self.one = self.elements[self._index_of((1,) + (0,) * (m - 1))]
        self._alpha: FieldElement | None = None
        self._tables: FieldTables | None = None
        self._dlog: list[int | None] | None = None

    # -- construction helpers -------------------------------------------------

    def _index_of(self, coords: tuple[int, ...]) -> int:
        return sum(c * w for c, w in zip(coords, self._weights))

    def element(self, value: int | Iterable[int] | FieldElement) -> FieldElement:
        """Element from coordinates (length m) or an integer multiple of 1."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coords = (value % self.p,) + (0,) * (self.m - 1)
        else:
            raw = tuple(int(c) for c in value)
            if len(raw) != self.m:
                raise ValueError(f"expected {self.m} coordinates, got {len(raw)}")
            coords = tuple(c % self.p for c in raw)
        return self.elements[self._index_of(coords)]

    # -- raw index arithmetic (used by operators; tables take over when built) -

    def _add_idx(self, i: int, j: int) -> int:
        if self._tables is not None:
            return self._tables.add[i][j]
        a, b = self.elements[i].coords, self.elements[j].coords
        return self._index_of(tuple((x + y) % self.p for x, y in zip(a, b)))

    def _neg_idx(self, i: int) -> int:
        if self._tables is not None:
            return self._tables.neg[i]
        return self._index_of(tuple((-x) % self.p for x in self.elements[i].coords))

    def _mul_idx(self, i: int, j: int) -> int:
        if self._tables is not None:
            return self._tables.mul[i][j]
        prod = _poly_mul(_poly_trim(self.elements[i].coords), _poly_trim(self.elements[j].coords), self.p)
        if len(prod) > self.m:
            prod = _poly_divmod(prod, self.modulus, self.p)[1]
        return self._index_of(tuple(prod) + (0,) * (self.m - len(prod)))

    # -- public API ------------------------------------------------------------

    def primitive_element(self) -> FieldElement:
        """Smallest generator of the multiplicative group, in coordinate order."""
        if self._alpha is None:
            n = self.q - 1
            checks = [n // r for r in factorize(n)] if n > 1 else []
            for x in self.elements[1:]:
                if all((x**c).index != self.one.index for c in checks):
                    self._alpha = x
                    break
        return self._alpha

    def dlog(self, x: FieldElement) -> int:
        """Exponent i in [0, q-1) with primitive_element()**i == x."""
        if isinstance(x, FieldElement) and x.field is not self:
            raise ValueError("element belongs to a different field")
        if x.index == 0:
            raise ValueError("discrete log of zero is undefined")
        if self._dlog is None:
            if self.q > DLOG_CAP:
                raise ValueError(f"discrete log table capped at field order {DLOG_CAP}")
            table: list[int | None] = [None] * self.q
            acc = self.one
            alpha = self.primitive_element()
            for i in range(self.q - 1):
                table[acc.index] = i
                acc = acc * alpha
            self._dlog = table
        return self._dlog[x.index]

    def tables(self) -> FieldTables:
        """Build (once) and return the integer-indexed operation tables."""
        if self._tables is None:
            if self.q > TABLE_CAP:
                raise ValueError(f"operation tables capped at field order {TABLE_CAP}")
            self._tables = FieldTables(self)
        return self._tables

    def nonzero_indices(self) -> list[int]:
        return list(range(1, self.q))  # index 0 is zero; order is lexicographic

    def modulus_text(self) -> str:
        terms = []
        for e in range(self.m, -1, -1):
            c = self.modulus[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                xe = "x" if e == 1 else f"x^{e}"
                terms.append(xe if c == 1 else f"{c}{xe}")
        return "+".join(terms) if terms else "0"

    def descriptor(self) -> str:
        return f"{self.p}^{self.m}/{self.modulus_text()}"

    def __repr__(self):
        return f"FiniteField({self.descriptor()})"

    def __reduce__(self):
        return (make_field, (self.p, self.m, self.modulus))


@lru_cache(maxsize=None)
def _field_cache(p: int, m: int, modulus: tuple[int, ...] | None) -> FiniteField:
    return FiniteField(p, m, modulus)


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """Cached field constructor; identical parameters share one instance."""
    return _field_cache(p, m, tuple(modulus) if modulus is not None else None)


def field_of_order(q: int, modulus: Sequence[int] | None = None) -> FiniteField:
    """make_field from a prime-power order q."""
    from .numbers import prime_power

    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(pm[0], pm[1], modulus)
