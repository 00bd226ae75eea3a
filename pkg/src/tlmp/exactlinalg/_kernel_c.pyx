# cython: language_level=3
"""Compiled elimination kernel.

Same fraction-free Gauss-Jordan as the pure-Python kernel; entries are Python
ints (arbitrary precision), so the speedup comes from compiled loop and index
handling rather than from machine arithmetic.
"""

from math import gcd

BACKEND = "cython"


cdef void _reduce_row(list row):
    cdef Py_ssize_t i, n = len(row)
    g = 0
    for i in range(n):
        a = row[i]
        if a:
            g = gcd(g, a)
            if g == 1:
                return
    if g > 1:
        for i in range(n):
            a = row[i]
            if a:
                row[i] = a // g


def gauss_jordan_int(list rows, Py_ssize_t ncols):
    """Reduce integer rows in place; see the pure-Python kernel for the contract."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, i, k, src
    cdef list pivots = []
    cdef list row, pivot_row, new_row
    for c in range(ncols):
        if r == nrows:
            break
        src = -1
        for i in range(r, nrows):
            if (<list>rows[i])[c]:
                src = i
                break
        if src < 0:
            continue
        if src != r:
            rows[r], rows[src] = rows[src], rows[r]
        row = <list>rows[r]
        if row[c] < 0:
            rows[r] = row = [-a for a in row]
        _reduce_row(row)
        p = row[c]
        pivot_row = row
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            q = row[c]
            if q == 0:
                continue
            new_row = [p * row[k] - q * pivot_row[k] for k in range(ncols)]
            _reduce_row(new_row)
            rows[i] = new_row
        pivots.append(c)
        r += 1
    return rows, pivots
