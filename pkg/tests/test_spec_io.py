from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorhom.color_lie import validate_color_lie
from colorhom.fixtures import NAMES, fixture_text, load_fixture
from colorhom.gmodules import validate_module
from colorhom.grading import validate_bicharacter
from colorhom.spec_io import SpecError, dump_spec, parse_spec, parse_window, serialize_spec


def heis3_doc():
    return json.loads(fixture_text("heis3"))


def test_heis3_parses_and_validates():
    spec = parse_spec(fixture_text("heis3"))
    assert spec.lie.names == ("x", "y", "z")
    assert validate_bicharacter(spec.bicharacter).passed
    assert validate_color_lie(spec.lie).passed
    for m in spec.modules:
        assert validate_module(spec.module(m)).passed


def test_undefined_bracket_name_located():
    doc = heis3_doc()
    doc["lie"]["brackets"][0]["value"] = {"w": "1"}
    text = json.dumps(doc, indent=2)
    with pytest.raises(SpecError) as err:
        parse_spec(text)
    e = err.value
    assert "'w'" in str(e)
    assert e.line is not None and e.column is not None
    # the reported line holds the offending key
    assert '"w"' in text.splitlines()[e.line - 1]


def test_empty_problem():
    text = json.dumps({"name": "empty", "group": {"orders": []},
                       "bicharacter": {"root_order": 1, "exponents": []},
                       "lie": {"basis": [], "brackets": []}, "modules": {"k": {"kind": "trivial"}}})
    spec = parse_spec(text)
    from colorhom.ce_cohomology import lie_cohomology_dims
    dims = lie_cohomology_dims(spec.lie, spec.module("k"), 3)
    assert dims == {(0, ()): 1, (1, ()): 0, (2, ()): 0, (3, ()): 0}


@pytest.mark.parametrize("mutate,needle", [
    (lambda d: d.update(extra=1), "unknown key"),
    (lambda d: d["lie"]["brackets"][0]["value"].update(z="1/0"), "malformed scalar"),
    (lambda d: d["lie"]["brackets"][0].update(left="q"), "unknown basis name"),
    (lambda d: d["modules"]["step2"]["left"].update(q=[["0", "0"], ["0", "0"]]), "unknown generator"),
    (lambda d: d["group"].update(orders=[-1]), None),
    (lambda d: d["lie"]["basis"][0].update(degree=[0, 1]), None),
])
def test_rejections(mutate, needle):
    doc = heis3_doc()
    mutate(doc)
    with pytest.raises(SpecError, match=needle):
        parse_spec(json.dumps(doc, indent=2))


def test_syntax_error_has_position():
    with pytest.raises(SpecError) as err:
        parse_spec('{"name": "x",\n  "group": }')
    assert err.value.line == 2


@pytest.mark.parametrize("name", NAMES)
def test_roundtrip(name):
    spec = load_fixture(name)
    once = serialize_spec(spec)
    again = serialize_spec(parse_spec(json.dumps(once)))
    assert once == again
    assert dump_spec(parse_spec(dump_spec(spec))) == dump_spec(spec)


def test_roundtrip_preserves_window():
    doc = heis3_doc()
    doc["options"]["degree_window"] = [[1]]
    spec = parse_spec(json.dumps(doc))
    assert spec.options["degree_window"] == [(1,)]
    assert serialize_spec(parse_spec(dump_spec(spec)))["options"]["degree_window"] == [[1]]


def test_parse_window():
    spec = load_fixture("heis_z3")
    assert parse_window("all", spec.group) == "all"
    assert parse_window("[[1, 4]]", spec.group) == [(1, 1)]
    with pytest.raises(SpecError):
        parse_window("[[1]]", spec.group)
    with pytest.raises(SpecError):
        parse_window("nope", spec.group)


coeff = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@settings(max_examples=30, deadline=None)
@given(coeff, coeff)
def test_roundtrip_random_module_entries(a, b):
    from colorhom.scalars import Scalar, format_scalar
    doc = heis3_doc()
    # any scalar is fine for the parser; validation is a separate step
    doc["modules"]["step2"]["left"]["x"] = [["0", "0"], [format_scalar(Scalar(2, [a])), "0"]]
    doc["modules"]["step2"]["left"]["y"] = [["0", "0"], [format_scalar(Scalar(2, [b])), "0"]]
    spec = parse_spec(json.dumps(doc))
    assert serialize_spec(parse_spec(dump_spec(spec))) == serialize_spec(spec)
