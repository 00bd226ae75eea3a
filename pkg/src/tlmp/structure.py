"""Finite-dimensional 3-Lie algebras over exact rationals.

An algebra is given by alternating structure constants stored only on strictly
increasing index triples; all other orders are recovered from permutation
parity.  Verifiers check identities on basis tuples (sufficient by
multilinearity) in lexicographic order and report the first violation.

Evaluators accept either a basis index or a coordinate vector in each slot;
index arguments stay in the sparse structure-constant tables, which keeps the
verifier loops cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ShapeError
from .exactlinalg import QMat, Vec, is_zero_vec, vec, vscale, zero_vec
from .reports import Report, check_sides

_NEG_ONE = Fraction(-1)


def sort_pair(i: int, j: int) -> tuple[tuple[int, int], int]:
    """Sorted pair and permutation sign (0 when repeated)."""
    if i == j:
        return (i, j), 0
    return ((i, j), 1) if i < j else ((j, i), -1)


def sort_triple(i: int, j: int, k: int) -> tuple[tuple[int, int, int], int]:
    """Sorted triple and permutation sign (0 when any index repeats)."""
    if i == j or j == k or i == k:
        return (i, j, k), 0
    sign = 1
    a, b, c = i, j, k
    if a > b:
        a, b, sign = b, a, -sign
    if b > c:
        b, c, sign = c, b, -sign
    if a > b:
        a, b, sign = b, a, -sign
    return (a, b, c), sign


def _accum(acc: list, coeff, v: Vec) -> None:
    if coeff == 1:
        for idx, x in enumerate(v):
            if x:
                acc[idx] += x
    elif coeff:
        for idx, x in enumerate(v):
            if x:
                acc[idx] += coeff * x


class ThreeLie:
    """A 3-Lie algebra: a space with an alternating trilinear bracket.

    ``brackets`` maps strictly increasing triples (i, j, k) to the coordinate
    vector of the bracket of the corresponding basis elements; omitted triples
    are zero.  Instances are immutable by convention.
    """

    def __init__(self, dim: int, brackets=None, basis_names=None):
        if dim < 0:
            raise ShapeError("negative dimension")
        self.dim = dim
        self.basis_names = (
            tuple(basis_names) if basis_names is not None else tuple(f"e{i+1}" for i in range(dim))
        )
        if len(self.basis_names) != dim:
            raise ShapeError("basis name count != dim")
        table: dict[tuple[int, int, int], Vec] = {}
        for key, value in (brackets or {}).items():
            i, j, k = key
            if not (0 <= i < j < k < dim):
                raise ShapeError(f"bracket key {key} is not a strictly increasing triple in range")
            v = vec(value)
            if len(v) != dim:
                raise ShapeError(f"bracket value for {key} has length {len(v)} != dim {dim}")
            if not is_zero_vec(v):
                table[(i, j, k)] = v
        self.brackets = table
        self._zero = zero_vec(dim)
        self._signed: dict[tuple[int, int, int], Vec] = {}

    @staticmethod
    def abelian(dim: int, basis_names=None) -> "ThreeLie":
        return ThreeLie(dim, {}, basis_names)

    def basis_bracket(self, i: int, j: int, k: int) -> Vec:
        """Bracket of basis elements in any index order (sign from parity)."""
        cached = self._signed.get((i, j, k))
        if cached is not None:
            return cached
        key, sign = sort_triple(i, j, k)
        if sign == 0:
            out = self._zero
        else:
            v = self.brackets.get(key)
            if v is None:
                out = self._zero
            else:
                out = v if sign == 1 else vscale(_NEG_ONE, v)
        self._signed[(i, j, k)] = out
        return out

    def bracket(self, x, y, z) -> Vec:
        """Alternating trilinear evaluation; each slot takes a basis index or
        a coordinate vector."""
        args = [x, y, z]
        for pos, a in enumerate(args):
            if not isinstance(a, int):
                a = vec(a)
                if len(a) != self.dim:
                    raise ShapeError(f"vector length {len(a)} != dim {self.dim}")
                args[pos] = a
        for pos, a in enumerate(args):
            if not isinstance(a, int):
                acc = [Fraction(0)] * self.dim
                rest = args[:pos] + args[pos + 1 :]
                for idx, coeff in enumerate(a):
                    if coeff:
                        sub = self.bracket(*rest[:pos], idx, *rest[pos:])
                        _accum(acc, coeff, sub)
                return tuple(acc)
        return self.basis_bracket(*args)

    def is_abelian(self) -> bool:
        return not self.brackets


def bracket_eval(alg: ThreeLie, x, y, z) -> Vec:
    return alg.bracket(x, y, z)


class TriAction:
    """Bilinear map on pairs from one space, antisymmetric in the pair,
    acting linearly on a second space: D(x, y) u.

    Entries are stored on (i, j, t) with i < j only; D(x, x) = 0 is built in.
    Covers mutual pair actions and module actions alike.
    """

    def __init__(self, pair_dim: int, arg_dim: int, out_dim: int, entries=None):
        self.pair_dim = pair_dim
        self.arg_dim = arg_dim
        self.out_dim = out_dim
        table: dict[tuple[int, int, int], Vec] = {}
        for key, value in (entries or {}).items():
            i, j, t = key
            if not (0 <= i < j < pair_dim):
                raise ShapeError(f"action key {key}: pair must be strictly increasing and in range")
            if not 0 <= t < arg_dim:
                raise ShapeError(f"action key {key}: argument index out of range")
            v = vec(value)
            if len(v) != out_dim:
                raise ShapeError(f"action value for {key} has length {len(v)} != {out_dim}")
            if not is_zero_vec(v):
                table[(i, j, t)] = v
        self.entries = table
        self._zero = zero_vec(out_dim)
        self._signed: dict[tuple[int, int, int], Vec] = {}

    @staticmethod
    def zero(pair_dim: int, arg_dim: int, out_dim: int) -> "TriAction":
        return TriAction(pair_dim, arg_dim, out_dim)

    def is_zero(self) -> bool:
        return not self.entries

    def basis_act(self, i: int, j: int, t: int) -> Vec:
        """D(e_i, e_j) applied to the t-th basis vector of the argument space."""
        cached = self._signed.get((i, j, t))
        if cached is not None:
            return cached
        pair, sign = sort_pair(i, j)
        if sign == 0:
            out = self._zero
        else:
            v = self.entries.get((pair[0], pair[1], t))
            if v is None:
                out = self._zero
            else:
                out = v if sign == 1 else vscale(_NEG_ONE, v)
        self._signed[(i, j, t)] = out
        return out

    def act(self, x, y, u) -> Vec:
        """Evaluation D(x, y) u; each slot takes a basis index or a vector."""
        if not isinstance(x, int):
            x = vec(x)
            if len(x) != self.pair_dim:
                raise ShapeError("pair vector length mismatch")
            acc = [Fraction(0)] * self.out_dim
            for idx, coeff in enumerate(x):
                if coeff:
                    _accum(acc, coeff, self.act(idx, y, u))
            return tuple(acc)
        if not isinstance(y, int):
            y = vec(y)
            if len(y) != self.pair_dim:
                raise ShapeError("pair vector length mismatch")
            acc = [Fraction(0)] * self.out_dim
            for idx, coeff in enumerate(y):
                if coeff:
                    _accum(acc, coeff, self.act(x, idx, u))
            return tuple(acc)
        if not isinstance(u, int):
            u = vec(u)
            if len(u) != self.arg_dim:
                raise ShapeError("argument vector length mismatch")
            acc = [Fraction(0)] * self.out_dim
            for idx, coeff in enumerate(u):
                if coeff:
                    _accum(acc, coeff, self.basis_act(x, y, idx))
            return tuple(acc)
        return self.basis_act(x, y, u)

    def act_bb(self, i: int, j: int, u) -> Vec:
        """D(e_i, e_j) u for a vector argument (alias kept for clarity)."""
        return self.act(i, j, u)

    def as_operator(self, i: int, j: int) -> QMat:
        """Matrix of D(e_i, e_j) acting on the argument space."""
        return QMat.from_cols(
            [self.basis_act(i, j, t) for t in range(self.arg_dim)], rows=self.out_dim
        )


def adjoint_action(alg: ThreeLie) -> TriAction:
    """The bracket of an algebra viewed as an action of its own pairs."""
    entries = {}
    for i, j in combinations(range(alg.dim), 2):
        for t in range(alg.dim):
            v = alg.basis_bracket(i, j, t)
            if not is_zero_vec(v):
                entries[(i, j, t)] = v
    return TriAction(alg.dim, alg.dim, alg.dim, entries)


@dataclass(frozen=True)
class LinMap:
    """Linear map between coordinate spaces, stored as a matrix."""

    domain_dim: int
    codomain_dim: int
    matrix: QMat

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (self.codomain_dim, self.domain_dim):
            raise ShapeError("matrix shape does not match declared dimensions")

    @staticmethod
    def from_matrix(matrix: QMat) -> "LinMap":
        return LinMap(matrix.cols, matrix.rows, matrix)

    @staticmethod
    def identity(n: int) -> "LinMap":
        return LinMap(n, n, QMat.identity(n))

    @staticmethod
    def zero(domain_dim: int, codomain_dim: int) -> "LinMap":
        return LinMap(domain_dim, codomain_dim, QMat.zeros(codomain_dim, domain_dim))

    def apply(self, v) -> Vec:
        return self.matrix.apply(v)

    def basis_image(self, i: int) -> Vec:
        return self.matrix.col(i)

    def compose(self, other: "LinMap") -> "LinMap":
        """self after other."""
        if other.codomain_dim != self.domain_dim:
            raise ShapeError("composition dimension mismatch")
        return LinMap(other.domain_dim, self.codomain_dim, self.matrix.matmul(other.matrix))

    def add(self, other: "LinMap") -> "LinMap":
        return LinMap(self.domain_dim, self.codomain_dim, self.matrix.add(other.matrix))

    def scale(self, c) -> "LinMap":
        return LinMap(self.domain_dim, self.codomain_dim, self.matrix.scale(c))

    def is_invertible(self) -> bool:
        from .exactlinalg import inverse

        return self.domain_dim == self.codomain_dim and inverse(self.matrix) is not None

    def inverse(self) -> "LinMap":
        from .exactlinalg import inverse

        inv = inverse(self.matrix)
        if inv is None:
            raise ShapeError("map is not invertible")
        return LinMap(self.codomain_dim, self.domain_dim, inv)


def semidirect_sum(alg: ThreeLie, module_dim: int, action: TriAction) -> ThreeLie:
    """Algebra structure on alg + module with the module an abelian ideal and
    the bracket of two algebra elements with a module element given by the
    action.  Jacobi of this sum is the operational test for a representation."""
    if action.pair_dim != alg.dim or action.arg_dim != module_dim or action.out_dim != module_dim:
        raise ShapeError("action shapes do not match algebra/module dimensions")
    n, m = alg.dim, module_dim
    brackets: dict[tuple[int, int, int], Vec] = {}
    for i, j, k in combinations(range(n + m), 3):
        if k < n:
            v = alg.basis_bracket(i, j, k)
            if not is_zero_vec(v):
                brackets[(i, j, k)] = v + zero_vec(m)
        elif j < n <= k:
            w = action.basis_act(i, j, k - n)
            if not is_zero_vec(w):
                brackets[(i, j, k)] = zero_vec(n) + w
        # two or more module slots: zero
    return ThreeLie(n + m, brackets)


def fundamental_identity_sides(alg: ThreeLie, i1: int, i2: int, j1: int, j2: int, j3: int):
    """(lhs, rhs) of the generalized Jacobi identity on a basis 5-tuple."""
    lhs = alg.bracket(i1, i2, alg.basis_bracket(j1, j2, j3))
    acc = list(alg.bracket(alg.basis_bracket(i1, i2, j1), j2, j3))
    _accum(acc, 1, alg.bracket(j1, alg.basis_bracket(i1, i2, j2), j3))
    _accum(acc, 1, alg.bracket(j1, j2, alg.basis_bracket(i1, i2, j3)))
    return lhs, tuple(acc)


def fundamental_identity_residual(alg: ThreeLie, i1: int, i2: int, j1: int, j2: int, j3: int):
    """Compatibility alias returning both sides (kept for oracles)."""
    return fundamental_identity_sides(alg, i1, i2, j1, j2, j3)


def verify_jacobi(alg: ThreeLie) -> Report:
    """Check the generalized Jacobi identity on all basis 5-tuples.

    Tuples with i1 < i2 and j1 < j2 < j3 suffice: both sides are antisymmetric
    in the first pair and alternating in the last triple.
    """
    report = Report(title="jacobi")
    tuples = [
        (i1, i2, j1, j2, j3)
        for (i1, i2) in combinations(range(alg.dim), 2)
        for (j1, j2, j3) in combinations(range(alg.dim), 3)
    ]
    report.add(check_sides("FI", tuples, lambda *t: fundamental_identity_sides(alg, *t)))
    return report


def verify_3lie_rep(alg: ThreeLie, module_dim: int, action: TriAction) -> Report:
    """A pair action is a representation iff the semidirect sum passes Jacobi."""
    inner = verify_jacobi(semidirect_sum(alg, module_dim, action))
    report = Report(title="representation")
    report.extend(inner, prefix="semidirect-")
    return report


def verify_morphism(f: LinMap, a: ThreeLie, b: ThreeLie) -> Report:
    """f is a homomorphism iff f[x,y,z] = [fx,fy,fz] on all basis triples."""
    if f.domain_dim != a.dim or f.codomain_dim != b.dim:
        raise ShapeError("morphism shape mismatch")
    report = Report(title="morphism")
    triples = list(combinations(range(a.dim), 3))
    report.add(
        check_sides(
            "HOM",
            triples,
            lambda i, j, k: (
                f.apply(a.basis_bracket(i, j, k)),
                b.bracket(f.basis_image(i), f.basis_image(j), f.basis_image(k)),
            ),
        )
    )
    return report
