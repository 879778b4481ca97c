"""Latin squares and sets of mutually orthogonal Latin squares (MOLS)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from . import fixtures
from .errors import (
    NotOrthogonal,
    NotPrime,
    NotPrimePower,
    NotSquare,
    OrderMismatch,
    OrderTooSmall,
    RepeatInColumn,
    RepeatInRow,
    SymbolOutOfRange,
    UnknownFixture,
)
from .gf import GaloisField, is_prime, prime_power


@dataclass(frozen=True, eq=False)
class LatinSquare:
    """An order-``v`` Latin square over the symbols ``0..v-1``.

    Build through :func:`validate_latin`; the constructor itself does not check.
    """

    order: int
    grid: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, LatinSquare):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.grid, other.grid)

    def __hash__(self):
        return hash((self.order, self.grid.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.grid.tolist()


@dataclass(frozen=True)
class MolsSet:
    order: int
    squares: tuple[LatinSquare, ...]

    def __len__(self):
        return len(self.squares)

    def __getitem__(self, i):
        return self.squares[i]


def validate_latin(grid) -> LatinSquare:
    """Check the row/column Latin property and wrap the grid.

    Raises the first violation found, scanning rows before columns.
    """
    try:
        arr = np.array(grid, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise NotSquare(f"grid is not a rectangular integer array: {exc}") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotSquare(f"grid of shape {arr.shape} is not square")
    v = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= v))
    if len(bad):
        i, j = map(int, bad[0])
        raise SymbolOutOfRange((i, j), int(arr[i, j]), v)
    for i in range(v):
        seen = set()
        for x in arr[i]:
            if int(x) in seen:
                raise RepeatInRow(i, int(x))
            seen.add(int(x))
    for j in range(v):
        seen = set()
        for x in arr[:, j]:
            if int(x) in seen:
                raise RepeatInColumn(j, int(x))
            seen.add(int(x))
    arr.setflags(write=False)
    return LatinSquare(v, arr)


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    """True iff superimposing ``a`` on ``b`` yields every ordered pair once."""
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    v = a.order
    counts = np.zeros((v, v), dtype=np.int64)
    np.add.at(counts, (a.grid.ravel(), b.grid.ravel()), 1)
    return bool(np.all(counts == 1))


def make_mols(squares: Sequence) -> MolsSet:
    """Validate a list of grids and check pairwise orthogonality."""
    sqs = tuple(s if isinstance(s, LatinSquare) else validate_latin(s) for s in squares)
    if not sqs:
        raise ValueError("a MOLS set needs at least one square")
    order = sqs[0].order
    for s in sqs[1:]:
        if s.order != order:
            raise OrderMismatch(f"orders differ: {order} vs {s.order}")
    for (i, a), (j, b) in combinations(enumerate(sqs), 2):
        if not are_orthogonal(a, b):
            raise NotOrthogonal(f"squares {i} and {j} are not orthogonal")
    return MolsSet(order, sqs)


def cyclic_mols(p: int) -> MolsSet:
    """The ``p - 1`` squares ``L_k(i, j) = (k*i + j) mod p`` for prime ``p >= 3``."""
    if p < 3:
        raise OrderTooSmall(f"no orthogonal pair of Latin squares of order {p}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    r = np.arange(p)
    return MolsSet(
        p, tuple(validate_latin((k * r[:, None] + r[None, :]) % p) for k in range(1, p))
    )


def galois_mols(q: int) -> MolsSet:
    """The ``q - 1`` squares ``L_a(x, y) = a*x + y`` over GF(q), a = 1..q-1."""
    if q == 6:
        raise NotPrimePower("no orthogonal pair of Latin squares of order 6 exists")
    p, _ = prime_power(q)
    if q < 3:
        raise OrderTooSmall(f"no orthogonal pair of Latin squares of order {q}")
    field = GaloisField.of_order(q)
    x = np.arange(q)
    squares = []
    for a in range(1, q):
        ax = field.mul[a, x]
        squares.append(validate_latin(field.add[ax[:, None], x[None, :]]))
    return MolsSet(q, tuple(squares))


def generate_mols(order: int) -> MolsSet:
    """Pick a construction by order: cyclic for primes, field-based otherwise."""
    if order in (2, 6):
        raise OrderTooSmall(
            f"no pair of orthogonal Latin squares of order {order} exists"
        )
    if is_prime(order):
        return cyclic_mols(order)
    return galois_mols(order)


_FIXTURES = {
    "fig2-order4": fixtures.ORDER4,
    "fig2-order3": fixtures.ORDER3,
}


def fixture_catalog(name: str) -> MolsSet:
    """The printed order-3 and order-4 squares of the worked example.

    ``fig2-order4`` holds three squares in printed order; the worked example
    uses the first and the last of them.
    """
    try:
        text = _FIXTURES[name]
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture {name!r}; known: {sorted(_FIXTURES)}"
        ) from None
    return make_mols(fixtures.parse_squares(text))


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)
