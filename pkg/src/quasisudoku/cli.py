"""Command-line entry point.

Exit status: 0 when every verification in the invoked command passed,
1 when some verification failed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import fixtures, serialize
from .errors import (
    ColumnOutOfRange,
    DesignError,
    KindMismatch,
    ParseError,
    SliceOutOfRange,
    UnknownFixture,
)
from .mols import MolsSet, are_orthogonal, fixture_catalog, generate_mols, validate_latin
from .pipeline import RunConfig, construct_from_config, design_from_config
from .product import ProductSquare, QuasiSudokuSquare, verify_quasi_sudoku
from .projection import ProjectedOverlay, verify_double_orthogonality
from .report import VerificationReport, combine
from .sfd import verify_design
from .sliced_oa import OrthogonalArray, verify_oa_strength, verify_sliced_oa

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

VERIFY_KINDS = ("latin-square", "mols", "quasi-sudoku", "overlay", "oa", "sliced-oa", "design")


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _write_artifact(obj, output, fmt) -> None:
    if output is None:
        if fmt == "csv":
            text, _ = serialize.csv_text(obj)
            sys.stdout.write(text)
        else:
            sys.stdout.write(serialize.json_text(obj))
    else:
        serialize.write(obj, output, fmt)


def _print_reports(reports) -> bool:
    ok = True
    for r in reports:
        print(r.summary(), file=sys.stderr)
        ok &= r.passed
    return ok


def _config(args) -> RunConfig:
    if args.squares:
        source, files = "files", tuple(Path(p) for p in args.squares)
    else:
        source, files = ("fixture" if args.fixture else "generated"), ()
    return RunConfig(
        m=args.m,
        n=args.n,
        projection=args.projection,
        source=source,
        square_files=files,
        seed=getattr(args, "seed", None),
        output=args.output,
        format=args.format,
    )


# -- commands -----------------------------------------------------------------


def cmd_mols(args) -> int:
    if args.fixture:
        name = {3: "fig2-order3", 4: "fig2-order4"}.get(args.order)
        if name is None:
            raise UnknownFixture(f"no printed squares of order {args.order}")
        mols = fixture_catalog(name)
    else:
        mols = generate_mols(args.order)
    if args.count is not None:
        if not 1 <= args.count <= len(mols):
            raise DesignError(
                f"order {args.order} offers {len(mols)} squares, {args.count} requested"
            )
        mols = MolsSet(mols.order, mols.squares[: args.count])
    _write_artifact(mols, args.output, args.format)
    return EXIT_OK


def _bundle(c, config: RunConfig) -> dict:
    names = ("A1", "B1", "A2", "B2")
    return {
        "kind": "bundle",
        "config": {
            "m": config.m,
            "n": config.n,
            "projection": config.projection,
            "source": config.source,
        },
        "squares": {k: serialize.to_dict(s) for k, s in zip(names, c.components)},
        "products": [serialize.to_dict(p) for p in c.products],
        "quasi_sudoku": [serialize.to_dict(q) for q in c.quasi],
        "overlay": serialize.to_dict(c.overlay),
        "sliced_oa": serialize.to_dict(c.sliced),
        "collapsed_slices": [serialize.to_dict(o) for o in c.sliced.collapsed],
        "reports": {k: r.to_dict() for k, r in c.reports.items()},
    }


def cmd_construct(args) -> int:
    config = _config(args)
    c = construct_from_config(config)
    if config.format == "json":
        _emit(serialize.json_text(_bundle(c, config)), config.output)
    else:
        _write_artifact(c.sliced, config.output, "csv")
        if config.output is not None:
            side = serialize.sidecar_path(Path(config.output))
            meta = json.loads(side.read_text())
            meta["reports"] = {k: r.to_dict() for k, r in c.reports.items()}
            side.write_text(json.dumps(meta, indent=1) + "\n")
    ok = _print_reports(c.reports.values())
    return EXIT_OK if ok else EXIT_FAIL


def cmd_sfd(args) -> int:
    config = _config(args)
    c, d, report = design_from_config(config)
    _write_artifact(d, config.output, config.format)
    ok = _print_reports(list(c.reports.values()) + [report])
    return EXIT_OK if ok else EXIT_FAIL


def _latin_report(rows) -> VerificationReport:
    try:
        validate_latin(rows)
    except DesignError as exc:
        return VerificationReport("latin", False, [str(exc)])
    return VerificationReport("latin", True)


def verify_file(path, kind: str, strength: int = 2, levels=None) -> VerificationReport:
    if kind in ("latin-square", "mols"):
        d = serialize.load_document(path)
        if d["kind"] != kind:
            raise KindMismatch(f"file holds {d['kind']!r}, expected {kind!r}")
        body = d.get("rows" if kind == "latin-square" else "squares")
        if not isinstance(body, list):
            raise ParseError(f"{path}: {kind} document has no grid data")
        if kind == "latin-square":
            return _latin_report(body)
        parts = [_latin_report(sq) for sq in body]
        if all(p.passed for p in parts):
            sqs = [validate_latin(sq) for sq in body]
            for i in range(len(sqs)):
                for j in range(i + 1, len(sqs)):
                    ok = are_orthogonal(sqs[i], sqs[j])
                    parts.append(
                        VerificationReport(
                            f"orthogonal {i},{j}", ok, [] if ok else [f"squares {i}, {j}"]
                        )
                    )
        return combine("mols", parts)
    obj = serialize.read(path, kind)
    if kind == "quasi-sudoku":
        return verify_quasi_sudoku(obj)
    if kind == "overlay":
        return verify_double_orthogonality(obj)
    if kind == "oa":
        if levels is not None:
            obj = OrthogonalArray(obj.rows, tuple(levels), obj.strength)
        return verify_oa_strength(obj, strength)
    if kind == "sliced-oa":
        return verify_sliced_oa(obj, strength)
    return verify_design(obj)


def cmd_verify(args) -> int:
    levels = [int(x) for x in args.levels.split(",")] if args.levels else None
    report = verify_file(args.file, args.kind, args.strength, levels)
    print(report.summary())
    for f in report.failures:
        print(f"  {f}")
    if args.output:
        Path(args.output).write_text(json.dumps(report.to_dict(), indent=1) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def plot_data(design, columns, slice_filter=None) -> np.ndarray:
    """Rows ``(x, y, slice_label)`` of one 2D projection."""
    i, j = columns
    for c in (i, j):
        if not 0 <= c < design.k:
            raise ColumnOutOfRange(f"column {c} outside 0..{design.k - 1}")
    rows = np.arange(design.N)
    if slice_filter is not None:
        rows = design.slice_rows(slice_filter)
        if len(rows) == 0:
            raise SliceOutOfRange(
                f"no slice {slice_filter}; labels are {sorted(set(design.slice_labels.tolist()))}"
            )
    return np.column_stack(
        [design.points[rows, i], design.points[rows, j], design.slice_labels[rows]]
    )


def cmd_plot_data(args) -> int:
    design = serialize.read(args.file, "design")
    try:
        cols = tuple(int(x) for x in args.columns.split(","))
    except ValueError:
        raise ColumnOutOfRange(f"--columns expects 'i,j', got {args.columns!r}") from None
    if len(cols) != 2:
        raise ColumnOutOfRange(f"--columns expects two indices, got {args.columns!r}")
    data = plot_data(design, cols, args.slice)
    text = "".join(f"{x!r},{y!r},{int(q)}\n" for x, y, q in data.tolist())
    _emit(text, args.output)
    return EXIT_OK


FIXTURE_ARTIFACTS = {
    "fig2-order3": lambda: fixture_catalog("fig2-order3"),
    "fig2-order4": lambda: fixture_catalog("fig2-order4"),
    "fig3-a": lambda: _table_square(fixtures.PRODUCT_A, ProductSquare),
    "fig3-b": lambda: _table_square(fixtures.PRODUCT_B, ProductSquare),
    "fig4-a": lambda: _table_square(fixtures.REORDERED_A, QuasiSudokuSquare),
    "fig4-b": lambda: _table_square(fixtures.REORDERED_B, QuasiSudokuSquare),
    "fig6": lambda: _table_overlay(fixtures.OVERLAY_MODULAR),
    "fig7": lambda: OrthogonalArray(fixtures.slice0_modular(), (3, 3, 4, 3), 2),
    "fig8": lambda: _table_overlay(fixtures.OVERLAY_COORDINATE),
}


def _table_square(text, cls):
    labels, grid = fixtures.parse_table(text)
    grid.setflags(write=False)
    return cls(4, 3, grid, tuple(labels), tuple(fixtures.COLUMN_LABELS))


def _table_overlay(text):
    _, grid = fixtures.parse_table(text)
    grid.setflags(write=False)
    return ProjectedOverlay(4, 3, grid)


def cmd_fixture(args) -> int:
    obj = FIXTURE_ARTIFACTS[args.name]()
    _write_artifact(obj, args.output, args.format)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _add_construction_flags(p) -> None:
    p.add_argument("--m", type=int, required=True, help="order of the first component squares")
    p.add_argument("--n", type=int, required=True, help="order of the second component squares")
    p.add_argument("--projection", choices=("coordinate", "modular"), default="coordinate")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--fixture", action="store_true", help="use the printed order-3/4 squares")
    src.add_argument(
        "--squares",
        nargs=4,
        metavar=("A1", "B1", "A2", "B2"),
        help="latin-square files: an orthogonal pair of order m, then of order n",
    )
    p.add_argument("--output", type=Path)
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasisudoku",
        description="Doubly orthogonal quasi-Sudoku squares, quasi-sliced "
        "orthogonal arrays and sliced space-filling designs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mols", help="emit a set of mutually orthogonal Latin squares")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count", type=int)
    p.add_argument("--fixture", action="store_true")
    p.add_argument("--output", type=Path)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_mols)

    p = sub.add_parser("construct", help="build and verify the squares, overlay and sliced array")
    _add_construction_flags(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sfd", help="generate a sliced space-filling design")
    _add_construction_flags(p)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_sfd)

    p = sub.add_parser("verify", help="re-run a verifier on a file")
    p.add_argument("file", type=Path)
    p.add_argument("--kind", choices=VERIFY_KINDS, required=True)
    p.add_argument("--strength", type=int, default=2)
    p.add_argument("--levels", help="override OA level counts, e.g. 3,3,4,3")
    p.add_argument("--output", type=Path, help="write the report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot-data", help="emit (x, y, slice) rows of a 2D projection")
    p.add_argument("file", type=Path)
    p.add_argument("--columns", required=True, help="column pair, e.g. 2,3")
    p.add_argument("--slice", type=int)
    p.add_argument("--output", type=Path)
    p.set_defaults(func=cmd_plot_data)

    p = sub.add_parser("fixture", help="write a built-in worked-example artifact")
    p.add_argument("name", choices=sorted(FIXTURE_ARTIFACTS))
    p.add_argument("--output", type=Path)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_fixture)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DesignError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
