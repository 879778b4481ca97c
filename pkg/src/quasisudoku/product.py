"""Direct products of Latin squares and their quasi-Sudoku row order.

A product square of orders ``m`` and ``n`` carries pair symbols ``(a, b)``
with ``a < m`` and ``b < n``; ``grid`` has shape ``(mn, mn, 2)``.  Row labels
are pairs ``(p, s)`` and column labels pairs ``(q, t)``.

Flattening convention, used everywhere a single integer is needed:
symbol ``(a, b) -> n*a + b``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .mols import LatinSquare, validate_latin
from .report import VerificationReport


@dataclass(frozen=True, eq=False)
class ProductSquare:
    m: int
    n: int
    grid: np.ndarray
    row_labels: tuple[tuple[int, int], ...]
    col_labels: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return self.m * self.n

    def flat(self) -> np.ndarray:
        """Symbols as integers ``n*a + b``."""
        return self.n * self.grid[..., 0] + self.grid[..., 1]

    def as_latin(self) -> LatinSquare:
        return validate_latin(self.flat())

    def cell(self, row_label, col_label) -> tuple[int, int]:
        i = self.row_labels.index(tuple(row_label))
        j = self.col_labels.index(tuple(col_label))
        return int(self.grid[i, j, 0]), int(self.grid[i, j, 1])

    def __eq__(self, other):
        if not isinstance(other, ProductSquare):
            return NotImplemented
        return (
            (self.m, self.n, self.row_labels, self.col_labels)
            == (other.m, other.n, other.row_labels, other.col_labels)
            and np.array_equal(self.grid, other.grid)
        )


@dataclass(frozen=True, eq=False)
class QuasiSudokuSquare(ProductSquare):
    """A product square in quasi-Sudoku row order.

    Physical row ``m*s + p`` holds label ``(p, s)``; columns keep ``n*q + t``.
    Block ``(s, q)`` is rows ``m*s .. m*s+m-1`` by columns ``n*q .. n*q+n-1``.
    """

    def block(self, s: int, q: int) -> np.ndarray:
        m, n = self.m, self.n
        return self.grid[m * s : m * s + m, n * q : n * q + n]


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def direct_product(a1: LatinSquare, a2: LatinSquare) -> ProductSquare:
    """``(a1[p, q], a2[s, t])`` at row ``n*p + s``, column ``n*q + t``."""
    m, n = a1.order, a2.order
    g1 = np.repeat(np.repeat(a1.grid, n, axis=0), n, axis=1)
    g2 = np.tile(a2.grid, (m, m))
    grid = _freeze(np.stack([g1, g2], axis=-1))
    labels = tuple((p, s) for p in range(m) for s in range(n))
    return ProductSquare(m, n, grid, labels, labels)


def reorder_permutation(m: int, n: int) -> np.ndarray:
    """``perm[m*s + p] = n*p + s``: the source row for each reordered row."""
    perm = np.empty(m * n, dtype=np.int64)
    for p in range(m):
        for s in range(n):
            perm[m * s + p] = n * p + s
    return perm


def quasi_sudoku_reorder(sq: ProductSquare) -> QuasiSudokuSquare:
    perm = reorder_permutation(sq.m, sq.n)
    return QuasiSudokuSquare(
        sq.m,
        sq.n,
        _freeze(sq.grid[perm].copy()),
        tuple(sq.row_labels[i] for i in perm),
        sq.col_labels,
    )


def undo_reorder(sq: QuasiSudokuSquare) -> ProductSquare:
    perm = reorder_permutation(sq.m, sq.n)
    inv = np.argsort(perm)
    return ProductSquare(
        sq.m,
        sq.n,
        _freeze(sq.grid[inv].copy()),
        tuple(sq.row_labels[i] for i in inv),
        sq.col_labels,
    )


def verify_quasi_sudoku(sq: QuasiSudokuSquare) -> VerificationReport:
    """Check every ``m x n`` block holds each pair symbol exactly once.

    The Latin property of the flattened square is re-checked as well.
    """
    m, n = sq.m, sq.n
    failures = []
    blocks = {}
    flat = sq.flat()
    for label, arr in (("row", flat), ("column", flat.T)):
        for i, line in enumerate(arr):
            if len(set(line.tolist())) != m * n:
                failures.append(f"{label} {i} repeats a symbol")
    wanted = Counter((a, b) for a in range(m) for b in range(n))
    for s in range(n):
        for q in range(m):
            got = Counter(map(tuple, sq.block(s, q).reshape(-1, 2).tolist()))
            missing = sorted(wanted - got)
            excess = sorted(got - wanted)
            blocks[(s, q)] = {"missing": missing, "excess": excess}
            if missing or excess:
                failures.append(
                    f"block (s={s}, q={q}) missing {missing} excess {excess}"
                )
    return VerificationReport(
        "quasi-sudoku",
        not failures,
        failures,
        {"m": m, "n": n, "blocks": blocks},
    )
