"""JSON and CSV formats for every artifact kind.

JSON documents carry a ``"kind"`` field.  CSV files are headerless numeric
tables; everything that is not a number in the table lives in a sidecar
``<file>.meta.json`` with the same ``"kind"`` field.

Kinds and their table layout in CSV:

=============== ==========================================================
latin-square    the ``v x v`` grid
mols            squares stacked vertically (``len(squares) * v`` lines)
quasi-sudoku    the grid with symbols flattened to ``n*a + b``
overlay         ``mn`` lines of ``2*mn`` values ``x0, y0, x1, y1, ...``
oa              the ``N x k`` array
sliced-oa       the ``N x k`` array followed by the slice label
design          the ``N x k`` coordinates followed by the slice label
=============== ==========================================================
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any

import numpy as np

from .errors import DesignError, KindMismatch, ParseError
from .mols import LatinSquare, MolsSet, make_mols, validate_latin
from .product import ProductSquare, QuasiSudokuSquare
from .projection import ProjectedOverlay, ProjectionKind, ProjectionSpec
from .sfd import SpaceFillingDesign
from .sliced_oa import OrthogonalArray, SlicedOA, apply_projections

KINDS = (
    "latin-square",
    "mols",
    "product-square",
    "quasi-sudoku",
    "overlay",
    "oa",
    "sliced-oa",
    "design",
)

SYMBOL_ENCODING = "pair (a, b) flattened to n*a + b"


def kind_of(obj) -> str:
    if isinstance(obj, LatinSquare):
        return "latin-square"
    if isinstance(obj, MolsSet):
        return "mols"
    if isinstance(obj, QuasiSudokuSquare):
        return "quasi-sudoku"
    if isinstance(obj, ProductSquare):
        return "product-square"
    if isinstance(obj, ProjectedOverlay):
        return "overlay"
    if isinstance(obj, SlicedOA):
        return "sliced-oa"
    if isinstance(obj, OrthogonalArray):
        return "oa"
    if isinstance(obj, SpaceFillingDesign):
        return "design"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


# -- to / from plain dicts --------------------------------------------------


def to_dict(obj) -> dict[str, Any]:
    kind = kind_of(obj)
    if kind == "latin-square":
        return {"kind": kind, "order": obj.order, "rows": obj.grid.tolist()}
    if kind == "mols":
        return {
            "kind": kind,
            "order": obj.order,
            "squares": [s.grid.tolist() for s in obj.squares],
        }
    if kind in ("quasi-sudoku", "product-square"):
        return {
            "kind": kind,
            "m": obj.m,
            "n": obj.n,
            "symbol_encoding": SYMBOL_ENCODING,
            "rows": obj.flat().tolist(),
            "row_labels": [list(x) for x in obj.row_labels],
            "col_labels": [list(x) for x in obj.col_labels],
        }
    if kind == "overlay":
        return {"kind": kind, "m": obj.m, "n": obj.n, "rows": obj.grid.tolist()}
    if kind == "oa":
        return {
            "kind": kind,
            "levels": list(obj.levels),
            "strength": obj.strength,
            "rows": obj.rows.tolist(),
        }
    if kind == "sliced-oa":
        d = {
            "kind": kind,
            "m": obj.m,
            "n": obj.n,
            "levels": list(obj.full.levels),
            "strength": obj.full.strength,
            "rows": obj.full.rows.tolist(),
            "slice_labels": obj.slice_labels().tolist(),
            "projection": obj.spec.kind.value if obj.spec else None,
            "projections": [t.tolist() for t in obj.projections] if obj.projections else None,
            "collapsed_levels": list(obj.collapsed_levels) if obj.collapsed_levels else None,
        }
        return d
    # design
    return {
        "kind": kind,
        "seed": obj.seed,
        "points": obj.points.tolist(),
        "slice_labels": obj.slice_labels.tolist(),
        "provenance": obj.provenance,
    }


def _pairs_grid(rows, n: int) -> np.ndarray:
    flat = np.asarray(rows, dtype=np.int64)
    return np.stack(np.divmod(flat, n), axis=-1)


def from_dict(d: dict[str, Any], kind: str | None = None):
    """Rebuild an artifact; structural errors become :class:`ParseError`."""
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError("document has no 'kind' field")
    if kind is not None and d["kind"] != kind:
        raise KindMismatch(f"file holds {d['kind']!r}, expected {kind!r}")
    try:
        return _from_dict(d)
    except DesignError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed {d.get('kind')!r} document: {exc}") from exc


def _from_dict(d):
    kind = d["kind"]
    if kind == "latin-square":
        return validate_latin(d["rows"])
    if kind == "mols":
        return make_mols(d["squares"])
    if kind in ("quasi-sudoku", "product-square"):
        m, n = int(d["m"]), int(d["n"])
        grid = _pairs_grid(d["rows"], n)
        if grid.shape != (m * n, m * n, 2):
            raise ParseError(f"grid shape {grid.shape[:2]} does not match m*n = {m * n}")
        grid.setflags(write=False)
        cls = QuasiSudokuSquare if kind == "quasi-sudoku" else ProductSquare
        return cls(
            m,
            n,
            grid,
            tuple(tuple(x) for x in d["row_labels"]),
            tuple(tuple(x) for x in d["col_labels"]),
        )
    if kind == "overlay":
        m, n = int(d["m"]), int(d["n"])
        grid = np.asarray(d["rows"], dtype=np.int64)
        if grid.shape != (m * n, m * n, 2):
            raise ParseError(f"overlay shape {grid.shape} does not match m*n = {m * n}")
        grid.setflags(write=False)
        return ProjectedOverlay(m, n, grid)
    if kind == "oa":
        return OrthogonalArray(d["rows"], tuple(d["levels"]), int(d.get("strength", 2)))
    if kind == "sliced-oa":
        full = OrthogonalArray(d["rows"], tuple(d["levels"]), int(d.get("strength", 2)))
        labels = np.asarray(d["slice_labels"], dtype=np.int64)
        if labels.shape != (full.N,):
            raise ParseError("one slice label per run is required")
        slices = tuple(np.flatnonzero(labels == q) for q in range(int(labels.max()) + 1))
        m, n = int(d["m"]), int(d["n"])
        sliced = SlicedOA(full, m, n, slices)
        if d.get("projections"):
            spec = None
            if d.get("projection"):
                spec = ProjectionSpec(ProjectionKind(d["projection"]), m, n)
            sliced = apply_projections(sliced, d["projections"], d["collapsed_levels"], spec)
        return sliced
    if kind == "design":
        points = np.asarray(d["points"], dtype=np.float64)
        labels = np.asarray(d["slice_labels"], dtype=np.int64)
        if points.ndim != 2 or labels.shape != (points.shape[0],):
            raise ParseError("design needs an N x k point matrix and N slice labels")
        points.setflags(write=False)
        labels.setflags(write=False)
        return SpaceFillingDesign(points, labels, int(d["seed"]), dict(d.get("provenance", {})))
    raise ParseError(f"unknown kind {kind!r}")


# -- CSV ---------------------------------------------------------------------


def _table(obj) -> tuple[np.ndarray, dict[str, Any]]:
    """Numeric table plus the metadata that goes to the sidecar."""
    d = to_dict(obj)
    kind = d["kind"]
    meta = {k: v for k, v in d.items() if k not in ("rows", "squares", "points")}
    if kind == "latin-square":
        table = obj.grid
    elif kind == "mols":
        table = np.vstack([s.grid for s in obj.squares])
        meta["count"] = len(obj.squares)
    elif kind in ("quasi-sudoku", "product-square"):
        table = obj.flat()
    elif kind == "overlay":
        table = obj.grid.reshape(obj.grid.shape[0], -1)
    elif kind == "oa":
        table = obj.rows
    elif kind == "sliced-oa":
        table = np.column_stack([obj.full.rows, obj.slice_labels()])
        meta.pop("slice_labels")
    else:
        table = obj.points
        meta.pop("slice_labels")
        meta["k"] = obj.k
    return table, meta


def csv_text(obj) -> tuple[str, dict[str, Any]]:
    table, meta = _table(obj)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if meta["kind"] == "design":
        for row, label in zip(obj.points, obj.slice_labels):
            writer.writerow([repr(float(x)) for x in row] + [int(label)])
    else:
        for row in np.asarray(table):
            writer.writerow([int(x) for x in row])
    return buf.getvalue(), meta


def sidecar_path(path: Path) -> Path:
    return path.with_name(path.name + ".meta.json")


def json_text(obj_or_dict) -> str:
    d = obj_or_dict if isinstance(obj_or_dict, dict) else to_dict(obj_or_dict)
    return json.dumps(d, indent=1) + "\n"


def write(obj, path, fmt: str = "json") -> list[Path]:
    """Write ``obj``; returns the files written (CSV adds a sidecar)."""
    path = Path(path)
    if fmt == "json":
        path.write_text(json_text(obj))
        return [path]
    if fmt == "csv":
        text, meta = csv_text(obj)
        path.write_text(text)
        side = sidecar_path(path)
        side.write_text(json.dumps(meta, indent=1) + "\n")
        return [path, side]
    raise ValueError(f"unknown format {fmt!r}")


def _parse_csv(path: Path, meta: dict[str, Any]):
    rows = list(csv.reader(path.read_text().splitlines()))
    kind = meta["kind"]
    d = dict(meta)
    try:
        if kind == "design":
            d["points"] = [[float(x) for x in r[:-1]] for r in rows]
            d["slice_labels"] = [int(r[-1]) for r in rows]
            return d
        table = [[int(x) for x in r] for r in rows]
    except (ValueError, IndexError) as exc:
        raise ParseError(f"{path}: non-numeric or ragged CSV: {exc}") from exc
    if kind == "mols":
        v = int(meta["order"])
        d["squares"] = [table[i : i + v] for i in range(0, len(table), v)]
    elif kind == "overlay":
        d["rows"] = [[r[i : i + 2] for i in range(0, len(r), 2)] for r in table]
    elif kind == "sliced-oa":
        d["rows"] = [r[:-1] for r in table]
        d["slice_labels"] = [r[-1] for r in table]
    else:
        d["rows"] = table
    return d


def load_document(path) -> dict[str, Any]:
    """Load ``.json`` or ``.csv`` (+ sidecar) into a plain dict, unvalidated."""
    path = Path(path)
    if not path.exists():
        raise ParseError(f"{path} does not exist")
    if path.suffix == ".csv":
        side = sidecar_path(path)
        if not side.exists():
            raise ParseError(f"{path} has no sidecar {side.name}")
        try:
            meta = json.loads(side.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{side}: {exc}") from exc
        if not isinstance(meta, dict) or "kind" not in meta:
            raise ParseError(f"{side} has no 'kind' field")
        return _parse_csv(path, meta)
    try:
        d = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError(f"{path} has no 'kind' field")
    return d


def read(path, kind: str | None = None):
    """Load an artifact; ``kind`` (if given) must match the file's kind."""
    return from_dict(load_document(path), kind)
