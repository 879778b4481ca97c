import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SWEEP, example_pairs
from quasisudoku import fixtures
from quasisudoku.mols import are_orthogonal, generate_mols, validate_latin
from quasisudoku.product import (
    QuasiSudokuSquare,
    direct_product,
    quasi_sudoku_reorder,
    reorder_permutation,
    undo_reorder,
    verify_quasi_sudoku,
)


def _printed(text):
    return fixtures.parse_table(text)


class TestDirectProduct:
    def test_matches_printed_tables(self, worked):
        for key, text in (("PA", fixtures.PRODUCT_A), ("PB", fixtures.PRODUCT_B)):
            labels, grid = _printed(text)
            assert list(worked[key].row_labels) == labels
            assert list(worked[key].col_labels) == fixtures.COLUMN_LABELS
            assert np.array_equal(worked[key].grid, grid)

    def test_cell_lookup(self, worked):
        assert worked["PA"].cell((0, 0), (1, 0)) == (1, 0)
        assert worked["PB"].cell((0, 1), (0, 0)) == (0, 2)

    def test_shape_and_dtype(self, worked):
        pa = worked["PA"]
        assert pa.grid.shape == (12, 12, 2) and pa.order == 12
        assert np.issubdtype(pa.grid.dtype, np.integer)

    def test_flatten(self, worked):
        flat = worked["PA"].flat()
        assert flat[0, 3] == 3 * 1 + 0
        assert sorted(flat[5].tolist()) == list(range(12))

    def test_products_latin_and_orthogonal(self, worked):
        la, lb = worked["PA"].as_latin(), worked["PB"].as_latin()
        assert are_orthogonal(la, lb)

    @pytest.mark.parametrize("m,n", SWEEP)
    def test_sweep_orthogonal(self, m, n):
        gm, gn = generate_mols(m), generate_mols(n)
        pa = direct_product(gm[0], gn[0])
        pb = direct_product(gm[1], gn[1])
        assert are_orthogonal(pa.as_latin(), pb.as_latin())

    def test_trivial_factor(self):
        one = validate_latin([[0]])
        a = generate_mols(3)[0]
        p = direct_product(a, one)
        assert np.array_equal(p.grid[..., 0], a.grid)
        assert not p.grid[..., 1].any()


class TestReorder:
    def test_matches_printed_tables(self, worked):
        for key, text in (("QA", fixtures.REORDERED_A), ("QB", fixtures.REORDERED_B)):
            labels, grid = _printed(text)
            assert list(worked[key].row_labels) == labels
            assert np.array_equal(worked[key].grid, grid)

    def test_row_label_order(self, worked):
        labels = worked["QA"].row_labels
        assert labels[:5] == ((0, 0), (1, 0), (2, 0), (3, 0), (0, 1))

    def test_permutation_formula(self):
        perm = reorder_permutation(4, 3)
        assert sorted(perm.tolist()) == list(range(12))
        assert perm[4 * 2 + 1] == 3 * 1 + 2

    @pytest.mark.parametrize("m,n", [(1, 5), (5, 1), (1, 1)])
    def test_identity_when_a_factor_is_trivial(self, m, n):
        assert reorder_permutation(m, n).tolist() == list(range(m * n))

    def test_undo_round_trip(self, worked):
        assert undo_reorder(worked["QA"]) == worked["PA"]
        assert undo_reorder(worked["QB"]) == worked["PB"]

    def test_reordered_is_still_latin(self, worked):
        worked["QA"].as_latin()
        assert isinstance(worked["QA"], QuasiSudokuSquare)

    def test_frozen(self, worked):
        with pytest.raises(ValueError):
            worked["QA"].grid[0, 0, 0] = 1


class TestQuasiSudoku:
    def test_worked_example(self, worked):
        for key in ("QA", "QB"):
            r = verify_quasi_sudoku(worked[key])
            assert r.passed, r.summary()
            assert len(r.details["blocks"]) == 12

    def test_block_content(self, worked):
        qa = worked["QA"]
        for s in range(3):
            for q in range(4):
                cells = {tuple(c) for c in qa.block(s, q).reshape(-1, 2).tolist()}
                assert cells == {(a, b) for a in range(4) for b in range(3)}

    @pytest.mark.parametrize("m,n", SWEEP)
    def test_sweep(self, m, n):
        gm, gn = generate_mols(m), generate_mols(n)
        for i in range(2):
            q = quasi_sudoku_reorder(direct_product(gm[i], gn[i]))
            assert verify_quasi_sudoku(q).passed

    def test_printed_pairs_both_ways(self):
        (a1, b1), (a2, b2) = example_pairs()
        for x, y in ((a1, a2), (b1, b2), (a1, b2)):
            assert verify_quasi_sudoku(quasi_sudoku_reorder(direct_product(x, y))).passed

    def test_unreordered_fails_every_block(self, worked):
        pa = worked["PA"]
        as_blocks = QuasiSudokuSquare(pa.m, pa.n, pa.grid, pa.row_labels, pa.col_labels)
        r = verify_quasi_sudoku(as_blocks)
        assert not r.passed
        bad = [k for k, v in r.details["blocks"].items() if v["missing"] or v["excess"]]
        assert len(bad) == 12

    def test_reports_missing_and_excess(self, worked):
        qa = worked["QA"]
        g = qa.grid.copy()
        # swap two cells of row 0 lying in different blocks
        g[0, [0, 3]] = g[0, [3, 0]]
        r = verify_quasi_sudoku(
            QuasiSudokuSquare(qa.m, qa.n, g, qa.row_labels, qa.col_labels)
        )
        assert not r.passed
        blk = r.details["blocks"][(0, 0)]
        assert blk["missing"] == [(0, 0)] and blk["excess"] == [tuple(qa.grid[0, 3])]


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([3, 4, 5, 7]),
    st.sampled_from([3, 4, 5]),
    st.integers(0, 1),
    st.permutations(range(3)),
)
def test_block_property_under_symbol_permutation(m, n, which, symbols):
    """Permuting symbols of a component keeps the block property."""
    gm, gn = generate_mols(m), generate_mols(n)
    a2 = gn[which].grid.copy()
    if n == 3:
        a2 = np.asarray(symbols)[a2]
    q = quasi_sudoku_reorder(direct_product(gm[which], validate_latin(a2)))
    assert verify_quasi_sudoku(q).passed
