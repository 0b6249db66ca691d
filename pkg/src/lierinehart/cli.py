"""Command-line interface.

Commands: ``validate``, ``classes``, ``decompose``, ``tight``, ``simple``
operate on an instance file; ``fixtures list`` and ``fixtures emit NAME``
expose the built-in instances.  Every analysis command validates the
instance first.  Exit codes: 0 on success, 1 on validation failure, 2 on
parse/schema errors (and unknown fixtures).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .connect import root_classes, weight_classes
from .decomp import combined_decomposition, is_tight
from .fixtures import fixture, fixture_names
from .instancefile import InstanceFormatError, emit_instance, parse_instance
from .model import SplitLieRinehartInstance, validate
from .reporting import (
    classes_json,
    classes_text,
    decomposition_json,
    decomposition_text,
    fine_json,
    fine_text,
    tightness_json,
    tightness_text,
    to_json_text,
    validation_json,
    validation_text,
)
from .simple import fine_decomposition

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FORMAT = 2


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> SplitLieRinehartInstance:
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}")
    return parse_instance(raw)


def _cmd_validate(args) -> int:
    inst = _load(args.file)
    report = validate(inst)
    text = to_json_text(validation_json(report)) if args.format == "json" else validation_text(report)
    _write(text, args.output)
    return EXIT_OK if report.valid else EXIT_INVALID


def _require_valid(inst: SplitLieRinehartInstance) -> int | None:
    report = validate(inst)
    if not report.valid:
        sys.stderr.write(f"instance {inst.name} fails validation:\n")
        sys.stderr.write(validation_text(report))
        return EXIT_INVALID
    return None


def _cmd_classes(args) -> int:
    inst = _load(args.file)
    bad = _require_valid(inst)
    if bad is not None:
        return bad
    roots, weights = root_classes(inst), weight_classes(inst)
    if args.format == "json":
        _write(to_json_text(classes_json(roots, weights)), args.output)
    else:
        _write(classes_text(roots, weights), args.output)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    inst = _load(args.file)
    bad = _require_valid(inst)
    if bad is not None:
        return bad
    lrep, arep = combined_decomposition(inst)
    if args.format == "json":
        doc = {"lie": decomposition_json(lrep), "assoc": decomposition_json(arep)}
        _write(to_json_text(doc), args.output)
    else:
        _write(decomposition_text(lrep) + decomposition_text(arep), args.output)
    return EXIT_OK


def _cmd_tight(args) -> int:
    inst = _load(args.file)
    bad = _require_valid(inst)
    if bad is not None:
        return bad
    record = is_tight(inst)
    if args.format == "json":
        _write(to_json_text(tightness_json(record)), args.output)
    else:
        _write(tightness_text(record), args.output)
    return EXIT_OK


def _cmd_simple(args) -> int:
    inst = _load(args.file)
    bad = _require_valid(inst)
    if bad is not None:
        return bad
    rep = fine_decomposition(inst)
    if args.format == "json":
        _write(to_json_text(fine_json(rep)), args.output)
    else:
        _write(fine_text(rep), args.output)
    return EXIT_OK


def _cmd_fixtures(args) -> int:
    if args.action == "list":
        _write("\n".join(fixture_names()) + "\n", args.output)
        return EXIT_OK
    try:
        inst = fixture(args.name)
    except KeyError as exc:
        sys.stderr.write(f"{exc.args[0]}\n")
        return EXIT_FORMAT
    _write(emit_instance(inst), args.output)
    return EXIT_OK


def _add_common(sub) -> None:
    sub.add_argument("file", help="instance file (JSON)")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--output", default=None, help="write the report to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lierinehart",
        description="validate and decompose finite-dimensional split Lie-Rinehart algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("validate", _cmd_validate, "run the axiom checks and report them"),
        ("classes", _cmd_classes, "root and weight connection classes with witnesses"),
        ("decompose", _cmd_decompose, "class ideals, complements, pairing, tightness"),
        ("tight", _cmd_tight, "evaluate the tightness conditions"),
        ("simple", _cmd_simple, "fine decomposition with simplicity verdicts"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_common(p)
        p.set_defaults(fn=fn)

    pf = sub.add_parser("fixtures", help="list built-in instances or emit one as a file")
    pf.add_argument("action", choices=("list", "emit"))
    pf.add_argument("name", nargs="?", default=None)
    pf.add_argument("--output", default=None)
    pf.set_defaults(fn=_cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "action", None) == "emit" and not args.name:
        sys.stderr.write("fixtures emit requires a fixture name\n")
        return EXIT_FORMAT
    try:
        return args.fn(args)
    except InstanceFormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
