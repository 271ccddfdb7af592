"""Text and JSON forms for sequences, groups, maps, arrays, sets, polynomials.

Conventions: group descriptors look like "Z4xZ5" ("Z1" is trivial);
sequence text is comma-separated; element coordinates serialize as a
scalar for rank-1 groups and as a list otherwise, except codomain
values in map images, which are always lists.  Polynomial coefficients
serialize as uniform coordinate lists; scalars are accepted on input.
Difference-set elements are flat coordinate vectors over A x B, with
the split position recovered from |A| + 1 = |B|.
"""

from __future__ import annotations

from typing import Any, Sequence

from .abgroup import AbelianGroup, Coords
from .circmap import GroupMap, MdArray
from .dpds import ProductDifferenceSet
from .fqpoly import FqPolynomial
from .gf import FiniteField, make_field
from .numbers import prime_power


def parse_sequence(text: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(text, str):
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if not parts:
            raise ValueError("empty sequence")
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"sequence {text!r} is not comma-separated integers") from None
    return tuple(int(v) for v in text)


def format_sequence(seq: Sequence[int]) -> str:
    return ",".join(str(v) for v in seq)


def parse_group(text: str | AbelianGroup) -> AbelianGroup:
    if isinstance(text, AbelianGroup):
        return text
    body = text.strip()
    if body in ("Z1", "1"):
        return AbelianGroup([])
    factors = []
    for part in body.split("x"):
        part = part.strip()
        if not part.startswith("Z") or not part[1:].isdigit():
            raise ValueError(f"group descriptor {text!r} is not of the form Z4xZ5")
        factors.append(int(part[1:]))
    return AbelianGroup(factors)


def parse_field(text: str | int | FiniteField) -> FiniteField:
    if isinstance(text, FiniteField):
        return text
    if isinstance(text, str):
        body = text.strip()
        if "^" in body:
            p, m = body.split("^", 1)
            return make_field(int(p), int(m))
        text = int(body)
    pm = prime_power(text)
    if pm is None:
        raise ValueError(f"{text} is not a prime power")
    return make_field(*pm)


def field_label(field: FiniteField) -> str:
    return str(field.p) if field.m == 1 else f"{field.p}^{field.m}"


def parse_element(value: Any, group: AbelianGroup) -> Coords:
    """Scalar, list, or "(3,1)" / "3,1" text into reduced coordinates."""
    if isinstance(value, str):
        body = value.strip().strip("()")
        value = [int(p) for p in body.replace(" ", "").split(",") if p]
    if isinstance(value, int):
        value = [value]
    coords = tuple(int(v) for v in value)
    if len(coords) != group.rank:
        raise ValueError(f"element {value} has wrong rank for {group.descriptor()}")
    return group.check(coords)


def element_json(coords: Coords, *, scalar_ok: bool = True) -> Any:
    if scalar_ok and len(coords) == 1:
        return coords[0]
    return list(coords)


def map_to_json(f: GroupMap) -> dict:
    images = [
        [element_json(x), list(f.images[x])]
        for x in f.domain.elements()
    ]
    return {
        "domain": f.domain.descriptor(),
        "codomain": f.codomain.descriptor(),
        "images": images,
    }


def map_from_json(obj: dict) -> GroupMap:
    domain = parse_group(obj["domain"])
    codomain = parse_group(obj["codomain"])
    images = {}
    for pair in obj["images"]:
        if len(pair) != 2:
            raise ValueError(f"image entry {pair} is not an [x, y] pair")
        x, y = pair
        images[parse_element(x, domain)] = parse_element(y, codomain)
    return GroupMap(domain, codomain, images)


def sequence_as_map(seq: Sequence[int]) -> GroupMap:
    """A length-n sequence read as the map i -> a_i from Z_n to Z_{n+1}."""
    n = len(seq)
    return GroupMap(
        AbelianGroup([n]),
        AbelianGroup([n + 1]),
        {(i,): (v % (n + 1),) for i, v in enumerate(seq)},
    )


def array_to_json(arr: MdArray) -> dict:
    return {"dims": list(arr.dims), "ones": [list(c) for c in arr.sorted_ones()]}


def array_from_json(obj: dict) -> MdArray:
    return MdArray(obj["dims"], obj["ones"])


def split_product_group(group: AbelianGroup) -> tuple[AbelianGroup, AbelianGroup]:
    """Split flat factors into A x B with |A| + 1 = |B|; the cut is unique."""
    factors = group.factors
    left = 1
    for k in range(len(factors) + 1):
        if left + 1 == group.order // left and group.order % left == 0:
            return AbelianGroup(factors[:k]), AbelianGroup(factors[k:])
        if k < len(factors):
            left *= factors[k]
    raise ValueError(f"{group.descriptor()} does not split as A x B with |A| + 1 = |B|")


def dpds_to_json(d: ProductDifferenceSet) -> dict:
    ambient = AbelianGroup(d.group_a.factors + d.group_b.factors)
    elements = sorted(list(a + b) for a, b in d.points)
    return {"group": ambient.descriptor(), "elements": elements}


def dpds_from_json(obj: dict) -> ProductDifferenceSet:
    ambient = parse_group(obj["group"])
    group_a, group_b = split_product_group(ambient)
    cut = group_a.rank
    points = []
    for flat in obj["elements"]:
        coords = parse_element(flat, ambient)
        points.append((coords[:cut], coords[cut:]))
    return ProductDifferenceSet(group_a, group_b, points)


def poly_to_json(f: FqPolynomial) -> dict:
    return {
        "field": field_label(f.field),
        "coeffs": [list(c.coords) for c in f.coeffs],
    }


def poly_from_json(obj: dict) -> FqPolynomial:
    field = parse_field(obj["field"])
    coeffs = []
    for c in obj["coeffs"]:
        coeffs.append(field.element(c if isinstance(c, int) else tuple(c)))
    return FqPolynomial(field, coeffs)


def table_to_json(table: dict[Coords, Coords]) -> list[list]:
    """An element table as sorted [x, y] coordinate pairs."""
    return [[list(x), list(y)] for x, y in sorted(table.items())]
