"""Worked 12x12 example (m=4, n=3) transcribed in its printed notation.

Pair symbols ``(x, y)`` print as ``xy`` in the product and reordered squares
and as ``x,y`` in the superimposed overlays.  Each 12x12 table line is
``<row label> | <12 cells>``; column labels are always ``00 01 02 10 ... 32``.
The projected slice ``O_0`` is printed transposed, one line per array column.
"""

from __future__ import annotations

import numpy as np

ORDER3 = """
0 1 2
1 2 0
2 0 1

0 1 2
2 0 1
1 2 0
"""

ORDER4 = """
0 1 2 3
1 0 3 2
2 3 0 1
3 2 1 0

0 1 2 3
3 2 1 0
1 0 3 2
2 3 0 1

0 1 2 3
2 3 0 1
3 2 1 0
1 0 3 2
"""

PRODUCT_A = """
00 | 00 01 02 10 11 12 20 21 22 30 31 32
01 | 01 02 00 11 12 10 21 22 20 31 32 30
02 | 02 00 01 12 10 11 22 20 21 32 30 31
10 | 10 11 12 00 01 02 30 31 32 20 21 22
11 | 11 12 10 01 02 00 31 32 30 21 22 20
12 | 12 10 11 02 00 01 32 30 31 22 20 21
20 | 20 21 22 30 31 32 00 01 02 10 11 12
21 | 21 22 20 31 32 30 01 02 00 11 12 10
22 | 22 20 21 32 30 31 02 00 01 12 10 11
30 | 30 31 32 20 21 22 10 11 12 00 01 02
31 | 31 32 30 21 22 20 11 12 10 01 02 00
32 | 32 30 31 22 20 21 12 10 11 02 00 01
"""

PRODUCT_B = """
00 | 00 01 02 10 11 12 20 21 22 30 31 32
01 | 02 00 01 12 10 11 22 20 21 32 30 31
02 | 01 02 00 11 12 10 21 22 20 31 32 30
10 | 20 21 22 30 31 32 00 01 02 10 11 12
11 | 22 20 21 32 30 31 02 00 01 12 10 11
12 | 21 22 20 31 32 30 01 02 00 11 12 10
20 | 30 31 32 20 21 22 10 11 12 00 01 02
21 | 32 30 31 22 20 21 12 10 11 02 00 01
22 | 31 32 30 21 22 20 11 12 10 01 02 00
30 | 10 11 12 00 01 02 30 31 32 20 21 22
31 | 12 10 11 02 00 01 32 30 31 22 20 21
32 | 11 12 10 01 02 00 31 32 30 21 22 20
"""

REORDERED_A = """
00 | 00 01 02 10 11 12 20 21 22 30 31 32
10 | 10 11 12 00 01 02 30 31 32 20 21 22
20 | 20 21 22 30 31 32 00 01 02 10 11 12
30 | 30 31 32 20 21 22 10 11 12 00 01 02
01 | 01 02 00 11 12 10 21 22 20 31 32 30
11 | 11 12 10 01 02 00 31 32 30 21 22 20
21 | 21 22 20 31 32 30 01 02 00 11 12 10
31 | 31 32 30 21 22 20 11 12 10 01 02 00
02 | 02 00 01 12 10 11 22 20 21 32 30 31
12 | 12 10 11 02 00 01 32 30 31 22 20 21
22 | 22 20 21 32 30 31 02 00 01 12 10 11
32 | 32 30 31 22 20 21 12 10 11 02 00 01
"""

REORDERED_B = """
00 | 00 01 02 10 11 12 20 21 22 30 31 32
10 | 20 21 22 30 31 32 00 01 02 10 11 12
20 | 30 31 32 20 21 22 10 11 12 00 01 02
30 | 10 11 12 00 01 02 30 31 32 20 21 22
01 | 02 00 01 12 10 11 22 20 21 32 30 31
11 | 22 20 21 32 30 31 02 00 01 12 10 11
21 | 32 30 31 22 20 21 12 10 11 02 00 01
31 | 12 10 11 02 00 01 32 30 31 22 20 21
02 | 01 02 00 11 12 10 21 22 20 31 32 30
12 | 21 22 20 31 32 30 01 02 00 11 12 10
22 | 31 32 30 21 22 20 11 12 10 01 02 00
32 | 11 12 10 01 02 00 31 32 30 21 22 20
"""

PROJECTED_A_MODULAR = """
00 | 0 1 2 3 0 1 2 3 0 1 2 3
10 | 3 0 1 0 1 2 1 2 3 2 3 0
20 | 2 3 0 1 2 3 0 1 2 3 0 1
30 | 1 2 3 2 3 0 3 0 1 0 1 2
01 | 1 2 0 0 1 3 3 0 2 2 3 1
11 | 0 1 3 1 2 0 2 3 1 3 0 2
21 | 3 0 2 2 3 1 1 2 0 0 1 3
31 | 2 3 1 3 0 2 0 1 3 1 2 0
02 | 2 0 1 1 3 0 0 2 3 3 1 2
12 | 1 3 0 2 0 1 3 1 2 0 2 3
22 | 0 2 3 3 1 2 2 0 1 1 3 0
32 | 3 1 2 0 2 3 1 3 0 2 0 1
"""

PROJECTED_B_MODULAR = """
00 | 0 1 2 0 1 2 0 1 2 0 1 2
10 | 0 1 2 0 1 2 0 1 2 0 1 2
20 | 0 1 2 0 1 2 0 1 2 0 1 2
30 | 0 1 2 0 1 2 0 1 2 0 1 2
01 | 2 0 1 2 0 1 2 0 1 2 0 1
11 | 2 0 1 2 0 1 2 0 1 2 0 1
21 | 2 0 1 2 0 1 2 0 1 2 0 1
31 | 2 0 1 2 0 1 2 0 1 2 0 1
02 | 1 2 0 1 2 0 1 2 0 1 2 0
12 | 1 2 0 1 2 0 1 2 0 1 2 0
22 | 1 2 0 1 2 0 1 2 0 1 2 0
32 | 1 2 0 1 2 0 1 2 0 1 2 0
"""

OVERLAY_MODULAR = """
00 | 0,0 1,1 2,2 3,0 0,1 1,2 2,0 3,1 0,2 1,0 2,1 3,2
10 | 3,0 0,1 1,2 0,0 1,1 2,2 1,0 2,1 3,2 2,0 3,1 0,2
20 | 2,0 3,1 0,2 1,0 2,1 3,2 0,0 1,1 2,2 3,0 0,1 1,2
30 | 1,0 2,1 3,2 2,0 3,1 0,2 3,0 0,1 1,2 0,0 1,1 2,2
01 | 1,2 2,0 0,1 0,2 1,0 3,1 3,2 0,0 2,1 2,2 3,0 1,1
11 | 0,2 1,0 3,1 1,2 2,0 0,1 2,2 3,0 1,1 3,2 0,0 2,1
21 | 3,2 0,0 2,1 2,2 3,0 1,1 1,2 2,0 0,1 0,2 1,0 3,1
31 | 2,2 3,0 1,1 3,2 0,0 2,1 0,2 1,0 3,1 1,2 2,0 0,1
02 | 2,1 0,2 1,0 1,1 3,2 0,0 0,1 2,2 3,0 3,1 1,2 2,0
12 | 1,1 3,2 0,0 2,1 0,2 1,0 3,1 1,2 2,0 0,1 2,2 3,0
22 | 0,1 2,2 3,0 3,1 1,2 2,0 2,1 0,2 1,0 1,1 3,2 0,0
32 | 3,1 1,2 2,0 0,1 2,2 3,0 1,1 3,2 0,0 2,1 0,2 1,0
"""

OVERLAY_COORDINATE = """
00 | 0,0 0,1 0,2 1,0 1,1 1,2 2,0 2,1 2,2 3,0 3,1 3,2
10 | 1,0 1,1 1,2 0,0 0,1 0,2 3,0 3,1 3,2 2,0 2,1 2,2
20 | 2,0 2,1 2,2 3,0 3,1 3,2 0,0 0,1 0,2 1,0 1,1 1,2
30 | 3,0 3,1 3,2 2,0 2,1 2,2 1,0 1,1 1,2 0,0 0,1 0,2
01 | 0,2 0,0 0,1 1,2 1,0 1,1 2,2 2,0 2,1 3,2 3,0 3,1
11 | 1,2 1,0 1,1 0,2 0,0 0,1 3,2 3,0 3,1 2,2 2,0 2,1
21 | 2,2 2,0 2,1 3,2 3,0 3,1 0,2 0,0 0,1 1,2 1,0 1,1
31 | 3,2 3,0 3,1 2,2 2,0 2,1 1,2 1,0 1,1 0,2 0,0 0,1
02 | 0,1 0,2 0,0 1,1 1,2 1,0 2,1 2,2 2,0 3,1 3,2 3,0
12 | 1,1 1,2 1,0 0,1 0,2 0,0 3,1 3,2 3,0 2,1 2,2 2,0
22 | 2,1 2,2 2,0 3,1 3,2 3,0 0,1 0,2 0,0 1,1 1,2 1,0
32 | 3,1 3,2 3,0 2,1 2,2 2,0 1,1 1,2 1,0 0,1 0,2 0,0
"""


SLICE0_MODULAR = """
0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 1 1 2 2 2 2 2 2 2 2 2 2 2 2
0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2 0 1 2
0 1 2 3 0 1 2 3 0 1 2 3 1 2 0 0 1 3 3 0 2 2 3 1 2 0 1 1 3 0 0 2 3 3 1 2
0 1 2 0 1 2 0 1 2 0 1 2 2 0 1 2 0 1 2 0 1 2 0 1 1 2 0 1 2 0 1 2 0 1 2 0
"""


COLUMN_LABELS = [(q, t) for q in range(4) for t in range(3)]


def _cell(tok: str):
    if "," in tok:
        x, y = tok.split(",")
        return int(x), int(y)
    if len(tok) == 2:
        return int(tok[0]), int(tok[1])
    return int(tok)


def parse_table(text: str):
    """Parse a labelled 12x12 table into ``(row_labels, grid)``.

    ``grid`` has shape (12, 12, 2) for pair-valued tables and (12, 12) for
    single-valued ones.
    """
    labels, rows = [], []
    for line in text.strip().splitlines():
        label, cells = line.split("|")
        label = label.strip()
        labels.append((int(label[0]), int(label[1])))
        rows.append([_cell(tok) for tok in cells.split()])
    return labels, np.array(rows, dtype=np.int64)


def parse_squares(text: str) -> list[np.ndarray]:
    blocks = [b for b in text.strip().split("\n\n") if b.strip()]
    return [np.array([[int(x) for x in ln.split()] for ln in b.splitlines()]) for b in blocks]


def slice0_modular() -> np.ndarray:
    """The printed projected slice as a 36x4 run-by-column array."""
    cols = [[int(x) for x in ln.split()] for ln in SLICE0_MODULAR.strip().splitlines()]
    return np.array(cols, dtype=np.int64).T
