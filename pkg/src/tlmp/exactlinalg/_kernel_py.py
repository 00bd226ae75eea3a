"""Pure-Python elimination kernel.

Fraction-free Gauss-Jordan over arbitrary-precision integers: rows are scaled
cross-multiplied instead of divided, and every updated row is reduced by its
gcd so entries stay small.  The caller divides each row by its pivot to obtain
the unique reduced row echelon form over the rationals.
"""

from __future__ import annotations

from math import gcd

BACKEND = "python"


def _reduce_row(row: list[int]) -> None:
    g = 0
    for a in row:
        if a:
            g = gcd(g, a)
            if g == 1:
                return
    if g > 1:
        for i, a in enumerate(row):
            if a:
                row[i] = a // g


def gauss_jordan_int(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduce integer rows in place to an (integer-scaled) Gauss-Jordan form.

    Returns the reduced rows and the list of pivot columns.  Pivot choice is
    plain left-to-right, first nonzero row below the current one.  After the
    call, each pivot column is zero except at its pivot row, every row is
    gcd-reduced, and pivot entries are positive.
    """
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        src = -1
        for i in range(r, nrows):
            if rows[i][c]:
                src = i
                break
        if src < 0:
            continue
        if src != r:
            rows[r], rows[src] = rows[src], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        _reduce_row(rows[r])
        p = rows[r][c]
        for i in range(nrows):
            if i == r:
                continue
            q = rows[i][c]
            if q == 0:
                continue
            pivot_row = rows[r]
            row = rows[i]
            rows[i] = [p * row[k] - q * pivot_row[k] for k in range(ncols)]
            _reduce_row(rows[i])
        pivots.append(c)
        r += 1
    return rows, pivots
