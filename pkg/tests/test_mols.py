from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasisudoku.errors import (
    NotPrime,
    NotPrimePower,
    NotSquare,
    OrderMismatch,
    OrderTooSmall,
    RepeatInColumn,
    RepeatInRow,
    SymbolOutOfRange,
    UnknownFixture,
    UnsupportedOrder,
)
from quasisudoku.mols import (
    are_orthogonal,
    cyclic_mols,
    fixture_catalog,
    galois_mols,
    generate_mols,
    make_mols,
    validate_latin,
)

ORDER3_A = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
ORDER3_B = [[0, 1, 2], [2, 0, 1], [1, 2, 0]]


class TestValidateLatin:
    def test_order3(self):
        sq = validate_latin(ORDER3_A)
        assert sq.order == 3
        assert sq.tolist() == ORDER3_A

    def test_order1(self):
        assert validate_latin([[0]]).order == 1

    def test_repeat_in_column(self):
        with pytest.raises(RepeatInColumn) as exc:
            validate_latin([[0, 1], [0, 1]])
        assert (exc.value.col, exc.value.symbol) == (0, 0)

    def test_repeat_in_row(self):
        with pytest.raises(RepeatInRow) as exc:
            validate_latin([[0, 1, 2], [1, 1, 0], [2, 0, 1]])
        assert (exc.value.row, exc.value.symbol) == (1, 1)

    def test_symbol_out_of_range(self):
        with pytest.raises(SymbolOutOfRange) as exc:
            validate_latin([[0, 1], [1, 2]])
        assert exc.value.cell == (1, 1)

    @pytest.mark.parametrize("grid", [[[0, 1]], [], [[0, 1], [1]], [0, 1]])
    def test_not_square(self, grid):
        with pytest.raises(NotSquare):
            validate_latin(grid)

    def test_grid_is_read_only(self):
        sq = validate_latin(ORDER3_A)
        with pytest.raises(ValueError):
            sq.grid[0, 0] = 2


class TestOrthogonality:
    def test_printed_order3_pair(self):
        assert are_orthogonal(validate_latin(ORDER3_A), validate_latin(ORDER3_B))

    def test_printed_order4_selected_pair(self):
        o4 = fixture_catalog("fig2-order4")
        assert are_orthogonal(o4[0], o4[-1])

    @pytest.mark.parametrize("v", [2, 3, 4, 5, 7])
    def test_self_not_orthogonal(self, v):
        r = np.arange(v)
        sq = validate_latin((r[:, None] + r[None, :]) % v)
        assert not are_orthogonal(sq, sq)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            are_orthogonal(validate_latin(ORDER3_A), validate_latin([[0]]))


class TestCyclic:
    def test_order3_matches_printed(self):
        m = cyclic_mols(3)
        assert m[0].tolist() == ORDER3_A
        assert m[1].tolist() == ORDER3_B

    def test_order5_all_pairs(self):
        m = cyclic_mols(5)
        assert len(m) == 4
        pairs = list(combinations(m.squares, 2))
        assert len(pairs) == 6
        assert all(are_orthogonal(a, b) for a, b in pairs)

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            cyclic_mols(9)

    def test_too_small(self):
        with pytest.raises(OrderTooSmall):
            cyclic_mols(2)


class TestGalois:
    def test_order4(self):
        m = galois_mols(4)
        assert len(m) == 3
        assert all(are_orthogonal(a, b) for a, b in combinations(m.squares, 2))

    def test_order4_each_latin(self):
        for sq in galois_mols(4).squares:
            assert validate_latin(sq.grid) == sq

    def test_order9(self):
        m = galois_mols(9)
        pairs = list(combinations(m.squares, 2))
        assert len(m) == 8 and len(pairs) == 28
        assert all(are_orthogonal(a, b) for a, b in pairs)

    @pytest.mark.parametrize("q", [8, 16, 25, 27])
    def test_other_bundled_orders(self, q):
        m = galois_mols(q)
        assert len(m) == q - 1
        assert all(are_orthogonal(a, b) for a, b in combinations(m.squares, 2))

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_agrees_with_cyclic_for_primes(self, p):
        assert galois_mols(p).squares == cyclic_mols(p).squares

    def test_unsupported(self):
        with pytest.raises(UnsupportedOrder):
            galois_mols(32)

    @pytest.mark.parametrize("q", [6, 10, 12])
    def test_not_prime_power(self, q):
        with pytest.raises(NotPrimePower):
            galois_mols(q)


class TestGenerate:
    @pytest.mark.parametrize("v", [2, 6])
    def test_refuses_orders_without_pairs(self, v):
        with pytest.raises(OrderTooSmall, match="no pair"):
            generate_mols(v)

    @pytest.mark.parametrize("v", [3, 4, 5, 7, 8, 9])
    def test_every_generated_set_is_mols(self, v):
        m = generate_mols(v)
        for sq in m.squares:
            validate_latin(sq.grid)
        assert all(are_orthogonal(a, b) for a, b in combinations(m.squares, 2))


class TestFixtures:
    def test_order3(self):
        m = fixture_catalog("fig2-order3")
        assert [s.tolist() for s in m.squares] == [ORDER3_A, ORDER3_B]

    def test_order4_row1(self):
        assert fixture_catalog("fig2-order4")[0].tolist()[1] == [1, 0, 3, 2]

    def test_order4_pairwise(self):
        m = fixture_catalog("fig2-order4")
        assert len(m) == 3
        assert all(are_orthogonal(a, b) for a, b in combinations(m.squares, 2))

    def test_unknown(self):
        with pytest.raises(UnknownFixture):
            fixture_catalog("order5")


def test_make_mols_rejects_non_orthogonal():
    from quasisudoku.errors import NotOrthogonal

    with pytest.raises(NotOrthogonal):
        make_mols([ORDER3_A, ORDER3_A])


@st.composite
def isotopic_squares(draw, v):
    """A random Latin square: permute rows, columns and symbols of the cyclic one."""
    rp = draw(st.permutations(range(v)))
    cp = draw(st.permutations(range(v)))
    sp = np.array(draw(st.permutations(range(v))))
    r = np.arange(v)
    base = (r[:, None] + r[None, :]) % v
    return validate_latin(sp[base[np.ix_(rp, cp)]])


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda v: st.tuples(isotopic_squares(v), isotopic_squares(v))))
def test_orthogonality_is_symmetric(pair):
    a, b = pair
    assert are_orthogonal(a, b) == are_orthogonal(b, a)
