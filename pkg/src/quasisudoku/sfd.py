"""Sliced space-filling designs from a collapsed quasi-sliced array.

Per column the construction is

1. relabel the ``mn`` levels so that levels sharing a collapsed symbol get
   consecutive labels (class order and within-class order both random);
2. expand: the runs carrying relabeled symbol ``k`` (0-based) get the ranks
   ``k*mn + 1 .. k*mn + mn`` in random order, so the column is a
   permutation of ``1..N``;
3. jitter: ``(rank - u) / N`` with ``u`` uniform on ``(0, 1)``.

Randomness is keyed by ``(seed, column, stage)`` through
``numpy.random.SeedSequence`` spawn keys, so each column's draws are
independent of how many other columns exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from itertools import combinations
from typing import Any

import numpy as np

from .errors import CountMismatch, IndivisibleGrid, SpecViolation, UnevenClasses
from .report import VerificationReport, combine
from .sliced_oa import SlicedOA

# keeps u away from the endpoints so floor(x * g) is exact for every g | N
_U_MARGIN = 1e-12


class Stage(IntEnum):
    RELABEL = 0
    EXPAND = 1
    JITTER = 2


def stream(seed: int, column: int, stage: Stage) -> np.random.Generator:
    if seed < 0:
        raise ValueError("seed must be a non-negative integer")
    return np.random.default_rng(
        np.random.SeedSequence(seed, spawn_key=(column, int(stage)))
    )


@dataclass(frozen=True, eq=False)
class ColumnRelabeling:
    """``mapping[level]`` is the new 0-based label of an original level.

    ``class_order[g]`` is the collapsed symbol whose labels form the
    ``g``-th block of ``class_size`` consecutive labels.
    """

    mapping: np.ndarray
    class_order: np.ndarray
    class_size: int

    def coarse_bin(self, symbol: int) -> int:
        """Position of a collapsed symbol in the class order."""
        return int(np.flatnonzero(self.class_order == symbol)[0])


@dataclass(frozen=True)
class RelabelingPlan:
    columns: tuple[ColumnRelabeling, ...]


def plan_relabeling(sliced: SlicedOA, column: int, rng: np.random.Generator) -> ColumnRelabeling:
    if sliced.projections is None:
        raise SpecViolation("slices have no projections; collapse them first")
    table = sliced.projections[column]
    n_classes = sliced.collapsed_levels[column]
    v = len(table)
    members = [np.flatnonzero(table == g) for g in range(n_classes)]
    sizes = {len(x) for x in members}
    if len(sizes) != 1 or v % n_classes:
        raise UnevenClasses(
            f"column {column}: projected classes have sizes {sorted(len(x) for x in members)}"
        )
    size = v // n_classes
    class_order = rng.permutation(n_classes)
    mapping = np.empty(v, dtype=np.int64)
    for pos, g in enumerate(class_order):
        mapping[rng.permutation(members[g])] = pos * size + np.arange(size)
    mapping.setflags(write=False)
    class_order.setflags(write=False)
    return ColumnRelabeling(mapping, class_order, size)


def expand_levels(column: np.ndarray, levels: int, rng: np.random.Generator) -> np.ndarray:
    """Spread each relabeled symbol over its own run of consecutive ranks.

    ``column`` holds symbols in ``0..levels-1``, each exactly
    ``len(column) / levels`` times.  Returns ranks ``1..len(column)``.
    """
    column = np.asarray(column)
    N = len(column)
    per, rem = divmod(N, levels)
    ranks = np.empty(N, dtype=np.int64)
    for k in range(levels):
        where = np.flatnonzero(column == k)
        if rem or len(where) != per:
            raise CountMismatch(
                f"symbol {k} occurs {len(where)} times, expected {N / levels:g}"
            )
        ranks[where] = k * per + 1 + rng.permutation(per)
    return ranks


def _jitter(N: int, rng: np.random.Generator) -> np.ndarray:
    u = rng.random(N)
    bad = (u < _U_MARGIN) | (u > 1 - _U_MARGIN)
    while bad.any():
        u[bad] = rng.random(int(bad.sum()))
        bad = (u < _U_MARGIN) | (u > 1 - _U_MARGIN)
    return u


@dataclass(frozen=True, eq=False)
class SpaceFillingDesign:
    points: np.ndarray
    slice_labels: np.ndarray
    seed: int
    provenance: dict[str, Any] = field(default_factory=dict)
    plan: RelabelingPlan | None = field(default=None, repr=False)

    @property
    def N(self) -> int:
        return self.points.shape[0]

    @property
    def k(self) -> int:
        return self.points.shape[1]

    def slice_rows(self, q: int) -> np.ndarray:
        return np.flatnonzero(self.slice_labels == q)


def build_sfd(sliced: SlicedOA, seed: int) -> SpaceFillingDesign:
    if sliced.projections is None or sliced.collapsed is None:
        raise SpecViolation("slices have no projections; collapse them first")
    oa = sliced.full
    N, v = oa.N, sliced.m * sliced.n
    points = np.empty((N, oa.k))
    plans = []
    for j in range(oa.k):
        relabel = plan_relabeling(sliced, j, stream(seed, j, Stage.RELABEL))
        ranks = expand_levels(relabel.mapping[oa.rows[:, j]], v, stream(seed, j, Stage.EXPAND))
        u = _jitter(N, stream(seed, j, Stage.JITTER))
        points[:, j] = (ranks - u) / N
        plans.append(relabel)
    points.setflags(write=False)
    labels = sliced.slice_labels()
    labels.setflags(write=False)
    provenance = {
        "m": sliced.m,
        "n": sliced.n,
        "projection": sliced.spec.kind.value,
        "levels": list(oa.levels),
        "collapsed_levels": list(sliced.collapsed_levels),
    }
    return SpaceFillingDesign(points, labels, seed, provenance, RelabelingPlan(tuple(plans)))


def _rows(d: SpaceFillingDesign, rows) -> np.ndarray:
    return np.arange(d.N) if rows is None else np.asarray(rows, dtype=np.int64)


def verify_1d_stratification(
    d: SpaceFillingDesign, rows, bins: int, column: int
) -> VerificationReport:
    """Each of ``bins`` equal intervals of one column holds ``|rows|/bins`` points."""
    idx = _rows(d, rows)
    per, rem = divmod(len(idx), bins)
    if rem:
        raise IndivisibleGrid(f"{bins} bins do not divide {len(idx)} points")
    x = d.points[idx, column]
    failures = []
    if len(x) and (x.min() < 0 or x.max() >= 1):
        failures.append(f"column {column} has coordinates outside [0, 1)")
    else:
        counts = np.bincount(np.floor(x * bins).astype(np.int64), minlength=bins)
        for b in np.flatnonzero(counts != per):
            failures.append(
                f"column {column} bin {b} holds {counts[b]} points, expected {per}"
            )
    return VerificationReport(
        f"1d column {column} on {bins} bins",
        not failures,
        failures,
        {"per_bin": per},
    )


def verify_lhd(d: SpaceFillingDesign) -> VerificationReport:
    """One point per ``1/N`` interval in every column."""
    return combine("latin-hypercube", [verify_1d_stratification(d, None, d.N, j) for j in range(d.k)])


def verify_2d_stratification(
    d: SpaceFillingDesign, rows, grid: tuple[int, int], columns: tuple[int, int]
) -> VerificationReport:
    idx = _rows(d, rows)
    g1, g2 = grid
    i, j = columns
    per, rem = divmod(len(idx), g1 * g2)
    if rem:
        raise IndivisibleGrid(f"a {g1}x{g2} grid does not divide {len(idx)} points")
    failures = []
    xy = d.points[np.ix_(idx, [i, j])]
    if len(xy) and (xy.min() < 0 or xy.max() >= 1):
        failures.append("coordinates outside [0, 1)")
    else:
        cell = np.floor(xy[:, 0] * g1).astype(np.int64) * g2 + np.floor(
            xy[:, 1] * g2
        ).astype(np.int64)
        counts = np.bincount(cell, minlength=g1 * g2)
        for c in np.flatnonzero(counts != per):
            failures.append(
                f"cell {divmod(int(c), g2)} holds {counts[c]} points, expected {per}"
            )
    return VerificationReport(
        f"2d columns {columns} on {g1}x{g2}", not failures, failures, {"per_cell": per}
    )


def verify_design(d: SpaceFillingDesign, levels=None, collapsed_levels=None) -> VerificationReport:
    """Every uniformity property the construction guarantees.

    Full design: Latin hypercube, and exactly one point per cell of the
    ``levels[i] x levels[j]`` grid for every column pair.  Each slice: equal
    counts on the collapsed 1D bins and on every collapsed 2D grid.  Level
    counts default to those recorded in ``d.provenance``.
    """
    levels = levels or d.provenance.get("levels")
    collapsed_levels = collapsed_levels or d.provenance.get("collapsed_levels")
    if levels is None or collapsed_levels is None:
        raise ValueError("design records no level counts; pass them explicitly")
    levels, collapsed_levels = list(levels), list(collapsed_levels)
    if len(levels) != d.k or len(collapsed_levels) != d.k:
        raise ValueError(f"need {d.k} level counts per list")
    reports = [verify_lhd(d)]
    for i, j in combinations(range(d.k), 2):
        reports.append(verify_2d_stratification(d, None, (levels[i], levels[j]), (i, j)))
    for q in np.unique(d.slice_labels):
        rows = d.slice_rows(q)
        parts = [
            verify_1d_stratification(d, rows, collapsed_levels[j], j) for j in range(d.k)
        ]
        for i, j in combinations(range(d.k), 2):
            parts.append(
                verify_2d_stratification(
                    d, rows, (collapsed_levels[i], collapsed_levels[j]), (i, j)
                )
            )
        reports.append(combine(f"slice {q}", parts))
    return combine("space-filling design", reports)
