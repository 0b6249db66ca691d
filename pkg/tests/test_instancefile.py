"""JSON instance format: round trips, canonical form, schema errors."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import lierinehart as lr
from lierinehart import InstanceFormatError, emit_instance, parse_instance


@pytest.fixture(scope="module")
def sl2_doc():
    return emit_instance(lr.fixture("F_SL2"))


def test_round_trip_every_fixture(any_instance):
    text = emit_instance(any_instance)
    again = parse_instance(text)
    assert again == any_instance
    assert emit_instance(again) == text


def test_round_trip_scrambled(any_instance):
    s = lr.scramble(any_instance, 5)
    assert parse_instance(emit_instance(s)) == s


def test_parse_emit_identity_on_canonical_text(sl2):
    text = emit_instance(sl2)
    assert emit_instance(parse_instance(text)) == text


def test_emitted_scalars_are_lowest_terms(trunc4):
    doc = json.loads(emit_instance(trunc4))
    for table in ("bracket", "assoc_mul", "action", "anchor"):
        for *_, c in doc[table]:
            assert "/" not in c or all(part.lstrip("-").isdigit() for part in c.split("/"))


def test_fraction_scalars_survive(sl2):
    doc = json.loads(emit_instance(sl2))
    doc["bracket"] = [e if e[:3] != [1, 2, 0] else [1, 2, 0, "1/2"] for e in doc["bracket"]]
    doc["bracket"] = [e if e[:3] != [2, 1, 0] else [2, 1, 0, "-1/2"] for e in doc["bracket"]]
    inst = parse_instance(json.dumps(doc))
    assert lr.validate(inst).valid  # scaled [e,f] = h/2 is still a Lie algebra
    assert "1/2" in emit_instance(inst)


def duplicate_entry_doc(sl2):
    doc = json.loads(emit_instance(sl2))
    doc["bracket"].append([1, 2, 0, "3"])
    return json.dumps(doc)


def test_duplicate_key_rejected_with_location(sl2):
    with pytest.raises(InstanceFormatError) as err:
        parse_instance(duplicate_entry_doc(sl2))
    assert "(1,2,0)" in str(err.value)


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda d: d.pop("anchor"), "missing fields: anchor"),
        (lambda d: d.update(extra=1), "unknown fields: extra"),
        (lambda d: d.update(cartan_dim=-1), "cartan_dim"),
        (lambda d: d["lie_sectors"][0].update(label=["1"]), "zero-label sector"),
        (lambda d: d["bracket"].append([0, 0, 0, "0"]), "zero coefficients"),
        (lambda d: d["bracket"].append([0, 0, 99, "1"]), "out of range"),
        (lambda d: d["lie_sectors"][1].update(label=["2", "2"]), "expected 1 scalars"),
        (lambda d: d["assoc_sectors"][0].update(dim="x"), "nonnegative integer"),
    ],
)
def test_schema_violations_name_their_location(sl2, mutate, fragment):
    doc = json.loads(emit_instance(sl2))
    mutate(doc)
    with pytest.raises(InstanceFormatError) as err:
        parse_instance(json.dumps(doc))
    assert fragment in str(err.value)


def test_not_json_at_all():
    with pytest.raises(InstanceFormatError) as err:
        parse_instance("{")
    assert "not valid JSON" in str(err.value)


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=200))
def test_parser_total_on_garbage(text):
    # arbitrary input either parses or raises the format error, never crashes
    try:
        parse_instance(text)
    except InstanceFormatError:
        pass


@settings(max_examples=120, deadline=None)
@given(
    st.lists(
        st.sampled_from(["name", "cartan_dim", "lie_sectors", "assoc_sectors",
                         "bracket", "assoc_mul", "action", "anchor"]),
        min_size=1, max_size=3, unique=True,
    ),
    st.sampled_from([None, 0, -1, "x", [], {}, [[0, 0, 0, "1"], [0, 0, 0, "1"]]]),
)
def test_parser_total_on_corrupted_documents(sl2_doc, fields, junk):
    doc = json.loads(sl2_doc)
    for f in fields:
        doc[f] = junk
    try:
        parse_instance(json.dumps(doc))
    except InstanceFormatError:
        pass


def test_parse_then_validate_fixture_files(any_instance):
    inst = parse_instance(emit_instance(any_instance))
    assert lr.validate(inst).valid
