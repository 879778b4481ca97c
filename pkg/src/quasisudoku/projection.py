"""Symbol-collapsing projections and the double-orthogonality check.

Two families are supported.  ``coordinate`` keeps one coordinate of the pair
symbol ``(a, b)``: the first for the ``m``-valued map, the second for the
``n``-valued map.  ``modular`` (requires ``gcd(m, n) == 1`` and ``m > n``)
maps ``(a, b)`` to ``(n*a + b) mod m`` and ``(n*a + b) mod n`` respectively.

With ``m == n`` this also covers the square-order case where a single
projection onto ``[m]`` is applied to both squares.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import gcd

import numpy as np

from .errors import LabelMismatch, SpecViolation
from .product import QuasiSudokuSquare
from .report import VerificationReport


class ProjectionKind(str, Enum):
    COORDINATE = "coordinate"
    MODULAR = "modular"


@dataclass(frozen=True)
class ProjectionSpec:
    kind: ProjectionKind
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", ProjectionKind(self.kind))
        if self.m < 1 or self.n < 1:
            raise SpecViolation(f"orders must be positive, got m={self.m}, n={self.n}")
        if self.kind is ProjectionKind.MODULAR:
            if self.m <= self.n:
                raise SpecViolation(
                    f"modular projection needs m > n; got m={self.m}, n={self.n}"
                )
            if gcd(self.m, self.n) != 1:
                raise SpecViolation(
                    f"modular projection needs coprime orders; gcd({self.m}, {self.n}) "
                    f"= {gcd(self.m, self.n)}"
                )

    @classmethod
    def coordinate(cls, m: int, n: int) -> ProjectionSpec:
        return cls(ProjectionKind.COORDINATE, m, n)

    @classmethod
    def modular(cls, m: int, n: int) -> ProjectionSpec:
        return cls(ProjectionKind.MODULAR, m, n)

    def table_m(self) -> np.ndarray:
        """Lookup ``table[n*a + b]`` of the ``m``-valued map."""
        a, b = np.divmod(np.arange(self.m * self.n), self.n)
        return project_symbol_m((a, b), self)

    def table_n(self) -> np.ndarray:
        a, b = np.divmod(np.arange(self.m * self.n), self.n)
        return project_symbol_n((a, b), self)


def _split(sym):
    if isinstance(sym, np.ndarray) and sym.ndim >= 1 and sym.shape[-1] == 2:
        return sym[..., 0], sym[..., 1]
    a, b = sym
    return a, b


def project_symbol_m(sym, spec: ProjectionSpec):
    """Collapse a pair symbol onto ``[m]``.

    ``sym`` is ``(a, b)`` or an array whose last axis holds pairs; the result
    has the matching shape.
    """
    a, b = _split(sym)
    if spec.kind is ProjectionKind.COORDINATE:
        return a
    return (spec.n * a + b) % spec.m


def project_symbol_n(sym, spec: ProjectionSpec):
    """Collapse a pair symbol onto ``[n]``."""
    a, b = _split(sym)
    if spec.kind is ProjectionKind.COORDINATE:
        return b
    # equals b for b < n; computed literally on purpose
    return (spec.n * a + b) % spec.n


@dataclass(frozen=True, eq=False)
class ProjectedOverlay:
    """Superimposed projections; ``grid[i, j] = (x, y)`` with ``x < m``, ``y < n``."""

    m: int
    n: int
    grid: np.ndarray

    def block(self, s: int, q: int) -> np.ndarray:
        m, n = self.m, self.n
        return self.grid[m * s : m * s + m, n * q : n * q + n]

    def __eq__(self, other):
        if not isinstance(other, ProjectedOverlay):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and np.array_equal(
            self.grid, other.grid
        )


def project_square_m(sq: QuasiSudokuSquare, spec: ProjectionSpec) -> np.ndarray:
    return np.asarray(project_symbol_m(sq.grid, spec))


def project_square_n(sq: QuasiSudokuSquare, spec: ProjectionSpec) -> np.ndarray:
    return np.asarray(project_symbol_n(sq.grid, spec))


def superimpose(
    first: QuasiSudokuSquare, second: QuasiSudokuSquare, spec: ProjectionSpec
) -> ProjectedOverlay:
    if (first.m, first.n) != (second.m, second.n) or (first.m, first.n) != (
        spec.m,
        spec.n,
    ):
        raise LabelMismatch(
            f"orders differ: first ({first.m}, {first.n}), second "
            f"({second.m}, {second.n}), projection ({spec.m}, {spec.n})"
        )
    if first.row_labels != second.row_labels or first.col_labels != second.col_labels:
        raise LabelMismatch("squares do not share row/column labels")
    grid = np.stack([project_square_m(first, spec), project_square_n(second, spec)], -1)
    grid.setflags(write=False)
    return ProjectedOverlay(first.m, first.n, grid)


def verify_double_orthogonality(overlay: ProjectedOverlay) -> VerificationReport:
    """Pass iff every ``m x n`` block contains each pair of ``[m] x [n]`` once."""
    m, n = overlay.m, overlay.n
    wanted = Counter((x, y) for x in range(m) for y in range(n))
    failures, blocks = [], {}
    for s in range(n):
        for q in range(m):
            got = Counter(map(tuple, overlay.block(s, q).reshape(-1, 2).tolist()))
            missing, excess = sorted(wanted - got), sorted(got - wanted)
            blocks[(s, q)] = {"missing": missing, "excess": excess}
            if missing or excess:
                failures.append(f"block (s={s}, q={q}) missing {missing} excess {excess}")
    return VerificationReport(
        "double-orthogonality", not failures, failures, {"m": m, "n": n, "blocks": blocks}
    )


def block_row_sets(overlay: ProjectedOverlay, s: int, q: int) -> list[frozenset]:
    """Setwise content of each row of block ``(s, q)``."""
    return [frozenset(map(tuple, row.tolist())) for row in overlay.block(s, q)]
