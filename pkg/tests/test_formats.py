"""Text and JSON serialization round trips for every object kind."""

import pytest

from costaskit.abgroup import AbelianGroup
from costaskit.circmap import export_array, welch_map
from costaskit.dpds import ProductDifferenceSet
from costaskit.formats import (
    array_from_json,
    array_to_json,
    dpds_from_json,
    dpds_to_json,
    element_json,
    field_label,
    format_sequence,
    map_from_json,
    map_to_json,
    parse_element,
    parse_field,
    parse_group,
    parse_sequence,
    poly_from_json,
    poly_to_json,
    sequence_as_map,
    split_product_group,
    table_to_json,
)
from costaskit.fqpoly import interpolate_table
from costaskit.gf import field_of_order, make_field

EXAMPLE_DPDS_JSON = {"group": "Z4xZ5", "elements": [[0, 2], [1, 4], [2, 3], [3, 1]]}


def test_parse_sequence_text_and_list():
    assert parse_sequence("2,4,3,1") == (2, 4, 3, 1)
    assert parse_sequence(" 2, 4 ,3,1 ") == (2, 4, 3, 1)
    assert parse_sequence([2, 4, 3, 1]) == (2, 4, 3, 1)
    assert format_sequence((2, 4, 3, 1)) == "2,4,3,1"


def test_parse_sequence_rejects_garbage():
    with pytest.raises(ValueError):
        parse_sequence("")
    with pytest.raises(ValueError):
        parse_sequence("2,x,1")


def test_parse_group_descriptors():
    assert parse_group("Z4xZ5").factors == (4, 5)
    assert parse_group("Z20").factors == (20,)
    assert parse_group("Z1") == AbelianGroup([])
    assert parse_group("1") == AbelianGroup([])
    g = AbelianGroup([3, 3])
    assert parse_group(g) is g
    assert parse_group(g.descriptor()) == g


@pytest.mark.parametrize("bad", ["", "4x5", "Zx", "Z4*Z5", "Z-3"])
def test_parse_group_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_group(bad)


def test_parse_field_forms():
    assert parse_field("2^3").q == 8
    assert parse_field("8").q == 8
    assert parse_field(9).q == 9
    f = make_field(5, 1)
    assert parse_field(f) is f
    assert parse_field(field_label(f)).q == 5
    assert field_label(make_field(3, 2)) == "3^2"


def test_parse_field_rejects_non_prime_power():
    with pytest.raises(ValueError):
        parse_field(6)
    with pytest.raises(ValueError):
        parse_field("12")


def test_parse_element_forms_and_reduction():
    g = AbelianGroup([4, 5])
    assert parse_element("(3,1)", g) == (3, 1)
    assert parse_element("3,1", g) == (3, 1)
    assert parse_element([7, -1], g) == (3, 4)
    z = AbelianGroup([7])
    assert parse_element(3, z) == (3,)
    assert parse_element("10", z) == (3,)
    with pytest.raises(ValueError):
        parse_element([1, 2, 3], g)


def test_element_json_scalar_rule():
    assert element_json((3,)) == 3
    assert element_json((3,), scalar_ok=False) == [3]
    assert element_json((3, 1)) == [3, 1]


def test_map_json_round_trip_and_shape():
    f = welch_map(field_of_order(4))
    obj = map_to_json(f)
    assert obj == {
        "domain": "Z3",
        "codomain": "Z2xZ2",
        "images": [[0, [1, 0]], [1, [0, 1]], [2, [1, 1]]],
    }
    assert map_from_json(obj) == f


def test_map_from_json_rejects_malformed_entry():
    with pytest.raises(ValueError):
        map_from_json({"domain": "Z2", "codomain": "Z3", "images": [[0, 1, 2]]})


def test_sequence_as_map():
    f = sequence_as_map((2, 4, 3, 1))
    assert f.domain == AbelianGroup([4])
    assert f.codomain == AbelianGroup([5])
    assert f.images == {(0,): (2,), (1,): (4,), (2,): (3,), (3,): (1,)}


def test_array_json_round_trip():
    arr = export_array(welch_map(field_of_order(5)), [4], [5])
    obj = array_to_json(arr)
    assert obj["dims"] == [4, 5]
    assert obj["ones"] == sorted(obj["ones"])
    assert array_from_json(obj) == arr


def test_split_product_group():
    a, b = split_product_group(AbelianGroup([4, 5]))
    assert (a.factors, b.factors) == ((4,), (5,))
    a, b = split_product_group(AbelianGroup([2, 3, 7]))
    assert (a.factors, b.factors) == ((2, 3), (7,))
    a, b = split_product_group(AbelianGroup([2]))
    assert (a.factors, b.factors) == ((), (2,))
    with pytest.raises(ValueError):
        split_product_group(AbelianGroup([20]))
    with pytest.raises(ValueError):
        split_product_group(AbelianGroup([4, 6]))


def test_dpds_json_round_trip():
    d = dpds_from_json(EXAMPLE_DPDS_JSON)
    assert d.group_a == AbelianGroup([4])
    assert d.group_b == AbelianGroup([5])
    assert dpds_to_json(d) == EXAMPLE_DPDS_JSON


def test_dpds_from_json_reduces_coordinates():
    obj = {"group": "Z4xZ5", "elements": [[4, 7], [1, 4], [2, 3], [3, 1]]}
    assert dpds_from_json(obj) == dpds_from_json(EXAMPLE_DPDS_JSON)


def test_poly_json_round_trip_scalar_shorthand():
    field = make_field(5, 1)
    f = interpolate_table(field, [0, 2, 4, 1, 3])
    obj = poly_to_json(f)
    assert obj == {"field": "5", "coeffs": [[0], [2]]}
    assert poly_from_json(obj) == f
    assert poly_from_json({"field": "5", "coeffs": [0, 2]}) == f


def test_poly_json_extension_field():
    field = make_field(2, 3)
    f = interpolate_table(field, [e.index for e in field.elements])
    obj = poly_to_json(f)
    assert obj["field"] == "2^3"
    assert all(isinstance(c, list) and len(c) == 3 for c in obj["coeffs"])
    assert poly_from_json(obj) == f


def test_table_json_is_sorted():
    table = {(2,): (1, 0), (0,): (0, 1), (1,): (1, 1)}
    assert table_to_json(table) == [[[0], [0, 1]], [[1], [1, 1]], [[2], [1, 0]]]
