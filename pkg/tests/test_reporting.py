"""Every report renders as text and as serializable JSON on every fixture."""

from __future__ import annotations

import json

import lierinehart as lr
from lierinehart.reporting import (
    classes_json,
    classes_text,
    decomposition_json,
    decomposition_text,
    fine_json,
    fine_text,
    tightness_json,
    tightness_text,
    validation_json,
    validation_text,
)

from conftest import with_extra_entries


def test_all_reports_render(any_instance):
    inst = any_instance
    vrep = lr.validate(inst)
    assert json.dumps(validation_json(vrep))
    assert validation_text(vrep).endswith("\n")

    roots, weights = lr.root_classes(inst), lr.weight_classes(inst)
    assert json.dumps(classes_json(roots, weights))
    assert classes_text(roots, weights)

    lrep, arep = lr.combined_decomposition(inst)
    for rep in (lrep, arep):
        assert json.dumps(decomposition_json(rep))
        assert decomposition_text(rep)

    record = lr.is_tight(inst)
    assert json.dumps(tightness_json(record))
    assert tightness_text(record)

    fine = lr.fine_decomposition(inst)
    assert json.dumps(fine_json(fine))
    assert fine_text(fine)


def test_failed_validation_renders_witness(sl2):
    broken = with_extra_entries(sl2, "bracket_table", [(1, 2, 0, 2)])
    rep = lr.validate(broken)
    doc = validation_json(rep)
    assert json.dumps(doc)
    v1 = next(c for c in doc["checks"] if c["id"] == "V1")
    assert v1["witness"]["indices"] == [1, 2]
    text = validation_text(rep)
    assert "witness at basis indices (1, 2)" in text


def test_nontrivial_verdict_renders(gl2n):
    fine = lr.fine_decomposition(gl2n)
    doc = fine_json(fine)
    assert json.dumps(doc)
    assert doc["lie_components"][0]["verdict"]["simple"] is False
    text = fine_text(fine)
    assert "not simple" in text and "NOT TIGHT" not in text  # tight line says no
    assert "tight: no" in text
