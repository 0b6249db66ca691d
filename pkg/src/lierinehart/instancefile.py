"""On-disk JSON format for instances.

A single JSON document with fields ``name``, ``cartan_dim``,
``lie_sectors`` and ``assoc_sectors`` (lists of ``{"label": [scalars],
"dim": n}`` with the zero-label sector first, mandatory even when its dim
is 0), and the four tables ``bracket``, ``assoc_mul``, ``action``,
``anchor`` as lists of ``[i, j, k, scalar]`` with 0-based global indices.
Scalars are strings, integers rendered bare and proper fractions as
``"p/q"`` in lowest terms.  ``emit_instance`` is canonical: sector order
is preserved, table entries are sorted by (i, j, k), and the document is
pretty-printed with two-space indentation, so parse followed by emit is
the identity on canonical files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .model import (
    Functional,
    GradedBasis,
    SparseTrilinearTable,
    SplitLieRinehartInstance,
    StructureError,
)


class InstanceFormatError(ValueError):
    """The file does not follow the instance schema; message says where."""


def scalar_to_str(q: Fraction) -> str:
    return str(q)


def _parse_scalar(raw, where: str) -> Fraction:
    if not isinstance(raw, str):
        raise InstanceFormatError(f"{where}: scalar must be a string, got {type(raw).__name__}")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceFormatError(f"{where}: bad scalar {raw!r} ({exc})")


def _parse_sectors(raw, m: int, where: str) -> GradedBasis:
    if not isinstance(raw, list) or not raw:
        raise InstanceFormatError(f"{where}: expected a nonempty list of sectors")
    dims = []
    for idx, sec in enumerate(raw):
        loc = f"{where}[{idx}]"
        if not isinstance(sec, dict) or set(sec) != {"label", "dim"}:
            raise InstanceFormatError(f"{loc}: expected an object with keys 'label' and 'dim'")
        label_raw, dim = sec["label"], sec["dim"]
        if not isinstance(label_raw, list) or len(label_raw) != m:
            raise InstanceFormatError(f"{loc}.label: expected {m} scalars")
        if not isinstance(dim, int) or dim < 0:
            raise InstanceFormatError(f"{loc}.dim: expected a nonnegative integer")
        label = Functional(
            tuple(_parse_scalar(v, f"{loc}.label[{i}]") for i, v in enumerate(label_raw))
        )
        dims.append((label, dim))
    try:
        return GradedBasis.from_dims(dims)
    except StructureError as exc:
        raise InstanceFormatError(f"{where}: {exc}")


def _parse_table(raw, where: str) -> SparseTrilinearTable:
    if not isinstance(raw, list):
        raise InstanceFormatError(f"{where}: expected a list of [i, j, k, scalar] entries")
    entries = []
    seen = set()
    for idx, ent in enumerate(raw):
        loc = f"{where}[{idx}]"
        if not (isinstance(ent, list) and len(ent) == 4):
            raise InstanceFormatError(f"{loc}: expected [i, j, k, scalar]")
        i, j, k, c = ent
        if not all(isinstance(v, int) and v >= 0 for v in (i, j, k)):
            raise InstanceFormatError(f"{loc}: indices must be nonnegative integers")
        if (i, j, k) in seen:
            raise InstanceFormatError(f"{where}: duplicate entry for key ({i},{j},{k})")
        seen.add((i, j, k))
        q = _parse_scalar(c, loc)
        if q == 0:
            raise InstanceFormatError(f"{loc}: zero coefficients must be omitted")
        entries.append((i, j, k, q))
    return SparseTrilinearTable(tuple(entries))


def parse_instance(text: str) -> SplitLieRinehartInstance:
    """Parse and structurally validate an instance document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise InstanceFormatError("top level: expected a JSON object")
    required = {"name", "cartan_dim", "lie_sectors", "assoc_sectors",
                "bracket", "assoc_mul", "action", "anchor"}
    missing = required - set(doc)
    if missing:
        raise InstanceFormatError(f"missing fields: {', '.join(sorted(missing))}")
    extra = set(doc) - required
    if extra:
        raise InstanceFormatError(f"unknown fields: {', '.join(sorted(extra))}")
    if not isinstance(doc["name"], str):
        raise InstanceFormatError("name: expected a string")
    m = doc["cartan_dim"]
    if not isinstance(m, int) or m < 0:
        raise InstanceFormatError("cartan_dim: expected a nonnegative integer")
    lie = _parse_sectors(doc["lie_sectors"], m, "lie_sectors")
    assoc = _parse_sectors(doc["assoc_sectors"], m, "assoc_sectors")
    tables = {
        name: _parse_table(doc[name], name)
        for name in ("bracket", "assoc_mul", "action", "anchor")
    }
    try:
        return SplitLieRinehartInstance(
            name=doc["name"],
            cartan_dim=m,
            lie=lie,
            assoc=assoc,
            bracket_table=tables["bracket"],
            assoc_mul_table=tables["assoc_mul"],
            action_table=tables["action"],
            anchor_table=tables["anchor"],
        )
    except StructureError as exc:
        raise InstanceFormatError(str(exc))


def emit_instance(inst: SplitLieRinehartInstance) -> str:
    """Canonical text for an instance; parse(emit(x)) == x."""

    def sectors(gb: GradedBasis) -> list[dict]:
        return [
            {"label": [scalar_to_str(v) for v in s.label.values], "dim": s.dim}
            for s in gb.sectors
        ]

    def table(t: SparseTrilinearTable) -> list[list]:
        return [[i, j, k, scalar_to_str(c)] for i, j, k, c in sorted(t.entries)]

    doc = {
        "name": inst.name,
        "cartan_dim": inst.cartan_dim,
        "lie_sectors": sectors(inst.lie),
        "assoc_sectors": sectors(inst.assoc),
        "bracket": table(inst.bracket_table),
        "assoc_mul": table(inst.assoc_mul_table),
        "action": table(inst.action_table),
        "anchor": table(inst.anchor_table),
    }
    return json.dumps(doc, indent=2) + "\n"


def load_instance(path: str | Path) -> SplitLieRinehartInstance:
    return parse_instance(Path(path).read_text())


def save_instance(inst: SplitLieRinehartInstance, path: str | Path) -> None:
    Path(path).write_text(emit_instance(inst))
