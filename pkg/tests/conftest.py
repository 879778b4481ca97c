from collections import Counter
from itertools import combinations, product

import numpy as np
import pytest

from quasisudoku import fixtures
from quasisudoku.mols import fixture_catalog, generate_mols
from quasisudoku.product import direct_product, quasi_sudoku_reorder
from quasisudoku.projection import ProjectionSpec
from quasisudoku.sliced_oa import collapse_slices, partition_slices, unstack

# (m, n) pairs exercised by the property sweeps
SWEEP = [(4, 3), (5, 3), (5, 4), (7, 3), (3, 4), (3, 5), (4, 5)]


def specs_for(m, n):
    out = [ProjectionSpec.coordinate(m, n)]
    if m > n and np.gcd(m, n) == 1:
        out.append(ProjectionSpec.modular(m, n))
    return out


def brute_force_lambdas(rows, levels, t=2):
    """Independent tuple counter: {columns: lambda} or None if not constant."""
    rows = [tuple(int(x) for x in r) for r in rows]
    out = {}
    for cols in combinations(range(len(levels)), t):
        c = Counter(tuple(r[j] for j in cols) for r in rows)
        counts = {c[tup] for tup in product(*(range(levels[j]) for j in cols))}
        if len(counts) != 1 or 0 in counts or sum(c.values()) != len(rows):
            out[cols] = None
        else:
            out[cols] = counts.pop()
    return out


def example_pairs():
    o4 = fixture_catalog("fig2-order4")
    o3 = fixture_catalog("fig2-order3")
    return (o4[0], o4[-1]), (o3[0], o3[1])


def build(m, n, spec=None, pairs=None):
    """Quasi-Sudoku squares and the collapsed sliced array for (m, n)."""
    if pairs is None:
        gm, gn = generate_mols(m), generate_mols(n)
        pairs = (gm[0], gm[1]), (gn[0], gn[1])
    (a1, b1), (a2, b2) = pairs
    qa = quasi_sudoku_reorder(direct_product(a1, a2))
    qb = quasi_sudoku_reorder(direct_product(b1, b2))
    spec = spec or ProjectionSpec.coordinate(m, n)
    sliced = collapse_slices(partition_slices(unstack([qa, qb]), m, n), spec)
    return qa, qb, sliced


@pytest.fixture(scope="session")
def worked():
    """The 12x12 worked example: component squares and reordered products."""
    (a1, b1), (a2, b2) = example_pairs()
    pa, pb = direct_product(a1, a2), direct_product(b1, b2)
    return {
        "A1": a1,
        "B1": b1,
        "A2": a2,
        "B2": b2,
        "PA": pa,
        "PB": pb,
        "QA": quasi_sudoku_reorder(pa),
        "QB": quasi_sudoku_reorder(pb),
    }


@pytest.fixture(scope="session")
def worked_sliced(worked):
    spec = ProjectionSpec.modular(4, 3)
    oa = unstack([worked["QA"], worked["QB"]])
    return collapse_slices(partition_slices(oa, 4, 3), spec)


@pytest.fixture
def printed_slice():
    return fixtures.slice0_modular()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(f"criterion {number}: {mod.RESULTS[number]}")
