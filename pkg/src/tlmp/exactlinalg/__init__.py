"""Exact rational dense linear algebra.

Scalars are ``fractions.Fraction`` (always in canonical form: positive
denominator, gcd 1).  Matrices are small and dense; the elimination core is
fraction-free over integers, provided by a compiled kernel when available and
by a pure-Python kernel otherwise.  Set ``TLMP_PURE_PYTHON=1`` to force the
pure kernel.

Everything here is pure and operates on immutable values, so concurrent use
from multiple threads is safe.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import ContainmentError, ShapeError

if os.environ.get("TLMP_PURE_PYTHON") == "1":
    from . import _kernel_py as _kernel
else:
    try:
        from . import _kernel_c as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _kernel

BACKEND = _kernel.BACKEND

Q = Fraction
Vec = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def qstr(x: Fraction) -> str:
    """Canonical text form: "p/q", or just "p" when the denominator is 1."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def qparse(value) -> Fraction:
    """Parse an int, "p" or "p/q" into a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ShapeError(f"not a rational scalar: {value!r}")


def vec(values) -> Vec:
    return tuple(qparse(v) for v in values)


_ZERO_CACHE: dict[int, Vec] = {}
_UNIT_CACHE: dict[tuple[int, int], Vec] = {}


def zero_vec(n: int) -> Vec:
    v = _ZERO_CACHE.get(n)
    if v is None:
        v = _ZERO_CACHE[n] = (_ZERO,) * n
    return v


def unit_vec(n: int, i: int) -> Vec:
    v = _UNIT_CACHE.get((n, i))
    if v is None:
        v = _UNIT_CACHE[(n, i)] = tuple(_ONE if j == i else _ZERO for j in range(n))
    return v


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(c: Fraction, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class QMat:
    """Dense matrix of rationals, row-major.  0-row and 0-column shapes are legal."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "QMat":
        rows = [tuple(qparse(x) for x in r) for r in rows]
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ShapeError("ragged rows")
        else:
            ncols = cols if cols is not None else 0
        flat = tuple(x for r in rows for x in r)
        return QMat(len(rows), ncols, flat)

    @staticmethod
    def from_cols(cols, rows: int | None = None) -> "QMat":
        cols = [tuple(qparse(x) for x in c) for c in cols]
        if cols:
            nrows = len(cols[0])
            if any(len(c) != nrows for c in cols):
                raise ShapeError("ragged columns")
        else:
            nrows = rows if rows is not None else 0
        flat = tuple(cols[j][i] for i in range(nrows) for j in range(len(cols)))
        return QMat(nrows, len(cols), flat)

    @staticmethod
    def identity(n: int) -> "QMat":
        return QMat(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "QMat":
        return QMat(rows, cols, (_ZERO,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vec:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Vec:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "QMat":
        return QMat(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def apply(self, v) -> Vec:
        """Matrix-vector product."""
        v = tuple(v)
        if len(v) != self.cols:
            raise ShapeError(f"vector length {len(v)} != cols {self.cols}")
        e = self.entries
        c = self.cols
        return tuple(
            sum((e[i * c + j] * v[j] for j in range(c) if v[j]), _ZERO)
            for i in range(self.rows)
        )

    def matmul(self, other: "QMat") -> "QMat":
        if self.cols != other.rows:
            raise ShapeError(f"inner dims {self.cols} != {other.rows}")
        cols = [self.apply(other.col(j)) for j in range(other.cols)]
        return QMat.from_cols(cols, rows=self.rows)

    def __mul__(self, other: "QMat") -> "QMat":
        return self.matmul(other)

    def add(self, other: "QMat") -> "QMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("shape mismatch in add")
        return QMat(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "QMat") -> "QMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("shape mismatch in sub")
        return QMat(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "QMat":
        c = qparse(c)
        return QMat(self.rows, self.cols, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def hstack(self, other: "QMat") -> "QMat":
        if self.rows != other.rows:
            raise ShapeError("row mismatch in hstack")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return QMat.from_rows(rows, cols=self.cols + other.cols)


def _int_rows(m: QMat) -> list[list[int]]:
    # Row scaling preserves row space, rank and kernel.
    out = []
    for i in range(m.rows):
        r = m.row(i)
        d = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * d) for x in r])
    return out


def rref(m: QMat) -> tuple[QMat, list[int], int]:
    """Unique reduced row echelon form, pivot columns, and rank."""
    rows, pivots = _kernel.gauss_jordan_int(_int_rows(m), m.cols)
    rank = len(pivots)
    out_rows: list[list[Fraction]] = []
    for r in range(rank):
        p = rows[r][pivots[r]]
        out_rows.append([Fraction(a, p) for a in rows[r]])
    out_rows.extend([[_ZERO] * m.cols for _ in range(m.rows - rank)])
    return QMat.from_rows(out_rows, cols=m.cols), pivots, rank


def rank(m: QMat) -> int:
    return rref(m)[2]


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n given by a tuple of linearly independent basis vectors."""

    ambient_dim: int
    basis: tuple[Vec, ...]

    def __post_init__(self):
        for b in self.basis:
            if len(b) != self.ambient_dim:
                raise ShapeError("basis vector length != ambient dim")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> QMat:
        """Basis vectors as columns."""
        return QMat.from_cols(list(self.basis), rows=self.ambient_dim)

    def member(self, v) -> Vec | None:
        """Coefficients expressing v in the basis, or None if v is outside."""
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise ShapeError(f"vector length {len(v)} != ambient dim {self.ambient_dim}")
        return solve(self.matrix(), v)

    def contains(self, v) -> bool:
        return self.member(v) is not None


def span(vectors, ambient_dim: int) -> Subspace:
    """Subspace spanned by the given vectors; the stored basis is the nonzero
    rows of the RREF of the stacked vectors (canonical for the span)."""
    vectors = [vec(v) for v in vectors]
    for v in vectors:
        if len(v) != ambient_dim:
            raise ShapeError("vector length != ambient dim")
    if not vectors:
        return Subspace(ambient_dim, ())
    r, _, rk = rref(QMat.from_rows(vectors, cols=ambient_dim))
    return Subspace(ambient_dim, tuple(r.row(i) for i in range(rk)))


def kernel_basis(m: QMat) -> Subspace:
    """Basis of {v : m v = 0}; dimension is cols - rank."""
    r, pivots, rk = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for row_idx, pc in enumerate(pivots):
            v[pc] = -r[row_idx, f]
        basis.append(tuple(v))
    return Subspace(m.cols, tuple(basis))


def image_basis(m: QMat) -> Subspace:
    """Column space of m."""
    return span([m.col(j) for j in range(m.cols)], m.rows)


def solve(m: QMat, rhs) -> Vec | None:
    """One exact solution of m x = rhs, or None when the system is infeasible
    (rank of the augmented matrix exceeds rank of m)."""
    rhs = vec(rhs)
    if len(rhs) != m.rows:
        raise ShapeError(f"rhs length {len(rhs)} != rows {m.rows}")
    sols = solve_many(m, [rhs])
    return sols[0]


def solve_many(m: QMat, rhs_list) -> list[Vec | None]:
    """Solve m x = rhs for several right-hand sides with one elimination."""
    rhs_list = [vec(r) for r in rhs_list]
    for r in rhs_list:
        if len(r) != m.rows:
            raise ShapeError("rhs length != rows")
    k = len(rhs_list)
    aug = QMat.from_rows(
        [list(m.row(i)) + [rhs_list[t][i] for t in range(k)] for i in range(m.rows)],
        cols=m.cols + k,
    )
    r, pivots, _ = rref(aug)
    out: list[Vec | None] = []
    for t in range(k):
        col = m.cols + t
        if any(pc == col for pc in pivots):
            out.append(None)
            continue
        x = [_ZERO] * m.cols
        for row_idx, pc in enumerate(pivots):
            if pc < m.cols:
                x[pc] = r[row_idx, col]
        # A pivot in some other rhs column can force 0 = nonzero for this
        # system; substitution is the exact feasibility arbiter.
        if m.apply(tuple(x)) != rhs_list[t]:
            out.append(None)
            continue
        out.append(tuple(x))
    return out


def member(v, s: Subspace) -> Vec | None:
    """Witness coefficients of v in span(s.basis), or None."""
    return s.member(v)


def quotient_dim(big: Subspace, small: Subspace) -> int:
    """dim(big) - dim(small), after checking small is contained in big."""
    if big.ambient_dim != small.ambient_dim:
        raise ShapeError("ambient dimensions differ")
    for b in small.basis:
        if not big.contains(b):
            raise ContainmentError("small subspace not contained in big", vector=b)
    return big.dim - small.dim


def inverse(m: QMat) -> QMat | None:
    """Exact inverse, or None when m is singular or non-square."""
    if m.rows != m.cols:
        return None
    n = m.rows
    aug = m.hstack(QMat.identity(n))
    r, pivots, rk = rref(aug)
    if rk != n or pivots[:n] != list(range(n)):
        return None
    return QMat.from_rows([list(r.row(i))[n:] for i in range(n)], cols=n)
