"""Unstacking quasi-Sudoku squares into orthogonal arrays, slicing, collapsing.

Array conventions for squares of component orders ``m`` and ``n``:

* column 0 is the physical (reordered) row index ``m*s + p``;
* column 1 is the column index ``n*q + t``;
* column ``2 + j`` is square ``j``'s symbol flattened as ``n*a + b``.

Runs are listed row-major over the reordered grid.  Slice ``q`` holds the runs
whose column index lies in ``[n*q, n*q + n)`` and keeps full-array order.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from math import prod
from typing import Sequence

import numpy as np

from .errors import LabelMismatch, MalformedArray, NotOrthogonal, SpecViolation
from .mols import are_orthogonal
from .product import QuasiSudokuSquare
from .projection import ProjectionSpec
from .report import VerificationReport, combine


@dataclass(frozen=True, eq=False)
class OrthogonalArray:
    rows: np.ndarray
    levels: tuple[int, ...]
    strength: int = 2

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=np.int64)
        if rows.ndim != 2 or rows.shape[1] != len(self.levels):
            raise MalformedArray(
                f"rows of shape {rows.shape} do not match {len(self.levels)} levels"
            )
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "levels", tuple(int(s) for s in self.levels))

    @property
    def N(self) -> int:
        return self.rows.shape[0]

    @property
    def k(self) -> int:
        return self.rows.shape[1]

    def __eq__(self, other):
        if not isinstance(other, OrthogonalArray):
            return NotImplemented
        return (
            self.levels == other.levels
            and self.strength == other.strength
            and np.array_equal(self.rows, other.rows)
        )


@dataclass(frozen=True, eq=False)
class SlicedOA:
    full: OrthogonalArray
    m: int
    n: int
    slices: tuple[np.ndarray, ...]
    spec: ProjectionSpec | None = None
    projections: tuple[np.ndarray, ...] | None = None
    collapsed_levels: tuple[int, ...] | None = None
    collapsed: tuple[OrthogonalArray, ...] | None = field(default=None, repr=False)

    @property
    def nu(self) -> int:
        return len(self.slices)

    @property
    def n0(self) -> int:
        return len(self.slices[0])

    def slice_labels(self) -> np.ndarray:
        labels = np.empty(self.full.N, dtype=np.int64)
        for q, idx in enumerate(self.slices):
            labels[idx] = q
        return labels


def unstack(squares: Sequence[QuasiSudokuSquare], check: bool = True) -> OrthogonalArray:
    """Turn ``K >= 2`` superimposed squares into an ``(mn)^2 x (2+K)`` array."""
    if len(squares) < 2:
        raise ValueError("unstacking needs at least two squares")
    first = squares[0]
    for sq in squares[1:]:
        if (sq.m, sq.n) != (first.m, first.n):
            raise LabelMismatch("squares have different component orders")
        if sq.row_labels != first.row_labels or sq.col_labels != first.col_labels:
            raise LabelMismatch("squares do not share row/column labels")
    flats = [sq.flat() for sq in squares]
    if check:
        latins = [sq.as_latin() for sq in squares]
        for i, j in combinations(range(len(latins)), 2):
            if not are_orthogonal(latins[i], latins[j]):
                raise NotOrthogonal(f"squares {i} and {j} are not orthogonal")
    v = first.order
    r, c = np.divmod(np.arange(v * v), v)
    cols = [r, c] + [f.ravel() for f in flats]
    return OrthogonalArray(np.stack(cols, axis=1), (v,) * (2 + len(squares)), 2)


def verify_oa_strength(oa: OrthogonalArray, t: int) -> VerificationReport:
    """Exhaustively count every ``t``-column tuple.

    Passes iff, for every ``t``-subset of columns, each level combination
    occurs the same positive integer number of times.
    """
    if not 1 <= t <= oa.k:
        raise ValueError(f"strength {t} outside 1..{oa.k}")
    failures, lambdas = [], {}
    rows, levels = oa.rows, oa.levels
    for j, s in enumerate(levels):
        col = rows[:, j]
        if len(col) and (col.min() < 0 or col.max() >= s):
            failures.append(f"column {j} has entries outside [0, {s})")
    if failures:
        return VerificationReport("oa-strength", False, failures, {"strength": t})
    for cols in combinations(range(oa.k), t):
        sizes = [levels[j] for j in cols]
        cells = prod(sizes)
        lam, rem = divmod(oa.N, cells)
        if rem or lam == 0:
            failures.append(
                f"columns {cols}: {oa.N} runs cannot cover {cells} combinations evenly"
            )
            continue
        code = np.ravel_multi_index(tuple(rows[:, j] for j in cols), sizes)
        counts = np.bincount(code, minlength=cells)
        bad = np.flatnonzero(counts != lam)
        if len(bad):
            tup = tuple(int(x) for x in np.unravel_index(bad[0], sizes))
            failures.append(
                f"columns {cols}: tuple {tup} occurs {int(counts[bad[0]])} times, "
                f"expected {lam}"
            )
        else:
            lambdas[cols] = lam
    return VerificationReport(
        "oa-strength",
        not failures,
        failures,
        {"strength": t, "N": oa.N, "levels": list(levels), "lambda": lambdas},
    )


def partition_slices(oa: OrthogonalArray, m: int, n: int) -> SlicedOA:
    v = m * n
    if oa.N != v * v or oa.k < 3 or any(s != v for s in oa.levels):
        raise MalformedArray(
            f"expected a {v * v}-run array with all levels {v}, got N={oa.N}, "
            f"levels={oa.levels}"
        )
    q_of_run = oa.rows[:, 1] // n
    slices = tuple(np.flatnonzero(q_of_run == q) for q in range(m))
    for idx in slices:
        idx.setflags(write=False)
    if any(len(idx) != m * n * n for idx in slices):
        raise MalformedArray("column 1 does not split into equal slices")
    return SlicedOA(oa, m, n, slices)


def projection_tables(m: int, n: int, k: int, spec: ProjectionSpec) -> tuple[np.ndarray, ...]:
    """Per-column lookup tables from ``[mn]`` onto the collapsed levels."""
    idx = np.arange(m * n)
    tables = [idx // m, idx % n, spec.table_m()]
    tables += [spec.table_n()] * (k - 3)
    return tuple(np.asarray(t, dtype=np.int64) for t in tables)


def collapse_slices(sliced: SlicedOA, spec: ProjectionSpec) -> SlicedOA:
    """Collapse every slice with the standard per-column projections.

    Rows ``m*s + p -> s``, columns ``n*q + t -> t``, the first square's
    symbols through the ``m``-valued map and all later squares' symbols
    through the ``n``-valued map; collapsed levels ``(n, n, m, n, ...)``.
    """
    m, n = sliced.m, sliced.n
    if (spec.m, spec.n) != (m, n):
        raise SpecViolation(f"projection is for ({spec.m}, {spec.n}), array for ({m}, {n})")
    k = sliced.full.k
    tables = projection_tables(m, n, k, spec)
    return apply_projections(sliced, tables, (n, n, m) + (n,) * (k - 3), spec)


def apply_projections(sliced: SlicedOA, tables, collapsed_levels, spec=None) -> SlicedOA:
    """Materialise collapsed slices from explicit lookup tables."""
    v = sliced.m * sliced.n
    k = sliced.full.k
    tables = tuple(np.array(t, dtype=np.int64) for t in tables)
    collapsed_levels = tuple(int(s) for s in collapsed_levels)
    if len(tables) != k or len(collapsed_levels) != k:
        raise MalformedArray(f"need {k} projections and collapsed level counts")
    for j, (table, s) in enumerate(zip(tables, collapsed_levels)):
        if table.shape != (v,):
            raise MalformedArray(f"projection for column {j} must map {v} levels")
        if set(table.tolist()) != set(range(s)):
            raise SpecViolation(f"projection for column {j} is not onto [{s}]")
        if s >= v:
            raise SpecViolation(
                f"projection for column {j} is one-to-one; need m, n >= 2"
            )
        table.setflags(write=False)
    collapsed = []
    for idx in sliced.slices:
        block = sliced.full.rows[idx]
        proj = np.stack([tables[j][block[:, j]] for j in range(k)], axis=1)
        collapsed.append(OrthogonalArray(proj, collapsed_levels, 2))
    return replace(
        sliced,
        spec=spec,
        projections=tables,
        collapsed_levels=collapsed_levels,
        collapsed=tuple(collapsed),
    )


def verify_sliced_oa(sliced: SlicedOA, t: int = 2) -> VerificationReport:
    """Strength of the full array plus strength of every collapsed slice."""
    reports = [verify_oa_strength(sliced.full, t)]
    reports[0].check = "full array strength"
    if sliced.collapsed is None:
        raise ValueError("slices have not been collapsed")
    for q, oa in enumerate(sliced.collapsed):
        r = verify_oa_strength(oa, t)
        r.check = f"slice {q} strength"
        reports.append(r)
    return combine("sliced-oa", reports)
