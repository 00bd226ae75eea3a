"""Low-degree cohomology of a matched pair with coefficients in a
representation.

Degree-1 cochains are pairs of linear maps (g -> V, h -> W); degree-2
cochains are quadruples (omega, theta, nu, phi) with omega, theta alternating
trilinear and nu, phi antisymmetric in their pair slot.  The differentials
are assembled as exact rational matrices in a fixed coordinate order
(component, sorted tuple, coefficient index), so cocycle spaces, coboundary
spaces and quotient dimensions reduce to kernel/image computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import ShapeError
from .exactlinalg import (
    QMat,
    Subspace,
    Vec,
    image_basis,
    is_zero_vec,
    kernel_basis,
    quotient_dim,
    solve,
    span,
    unit_vec,
    vadd,
    vec,
    vscale,
    vsub,
    zero_vec,
)
from .matched import MatchedPair
from .reports import Check, Report, Witness
from .representation import MPRepresentation
from .structure import LinMap, TriAction, _accum, sort_triple

_ZERO = Fraction(0)


class AltTrilinear:
    """Alternating trilinear map from one space to another, stored on
    strictly increasing index triples."""

    def __init__(self, dim: int, out_dim: int, entries=None):
        self.dim = dim
        self.out_dim = out_dim
        table: dict[tuple[int, int, int], Vec] = {}
        for key, value in (entries or {}).items():
            i, j, k = key
            if not (0 <= i < j < k < dim):
                raise ShapeError(f"key {key} is not strictly increasing in range")
            v = vec(value)
            if len(v) != out_dim:
                raise ShapeError(f"value for {key} has length {len(v)} != {out_dim}")
            if not is_zero_vec(v):
                table[(i, j, k)] = v
        self.entries = table
        self._signed: dict[tuple[int, int, int], Vec] = {}

    @staticmethod
    def zero(dim: int, out_dim: int) -> "AltTrilinear":
        return AltTrilinear(dim, out_dim)

    def is_zero(self) -> bool:
        return not self.entries

    def basis_value(self, i: int, j: int, k: int) -> Vec:
        cached = self._signed.get((i, j, k))
        if cached is not None:
            return cached
        key, sign = sort_triple(i, j, k)
        if sign == 0:
            out = zero_vec(self.out_dim)
        else:
            v = self.entries.get(key)
            out = zero_vec(self.out_dim) if v is None else (v if sign == 1 else vscale(-1, v))
        self._signed[(i, j, k)] = out
        return out

    def eval(self, x, y, z) -> Vec:
        """Alternating trilinear evaluation; slots take indices or vectors."""
        args = [x, y, z]
        for pos, a in enumerate(args):
            if not isinstance(a, int):
                a = vec(a)
                if len(a) != self.dim:
                    raise ShapeError("argument length mismatch")
                args[pos] = a
        for pos, a in enumerate(args):
            if not isinstance(a, int):
                acc = [Fraction(0)] * self.out_dim
                rest = args[:pos] + args[pos + 1 :]
                for idx, coeff in enumerate(a):
                    if coeff:
                        sub = self.eval(*rest[:pos], idx, *rest[pos:])
                        _accum(acc, coeff, sub)
                return tuple(acc)
        return self.basis_value(*args)


@dataclass(frozen=True)
class CochainSpace:
    """Dimensions of the underlying pair and coefficients; owns the canonical
    coordinate order of degree 1 and 2 cochains."""

    ng: int
    nh: int
    nV: int
    nW: int

    @staticmethod
    def of(p: MatchedPair, r: MPRepresentation) -> "CochainSpace":
        if not r.matches(p):
            raise ShapeError("representation dimensions do not match the pair")
        return CochainSpace(p.g.dim, p.h.dim, r.V_dim, r.W_dim)

    # -- degree 1 ------------------------------------------------------

    @property
    def dim_c1(self) -> int:
        return self.ng * self.nV + self.nh * self.nW

    def c1_coords(self, c: "Cochain1") -> Vec:
        vals: list[Fraction] = []
        for x in range(self.ng):
            vals.extend(c.N1.basis_image(x))
        for a in range(self.nh):
            vals.extend(c.N2.basis_image(a))
        return tuple(vals)

    def c1_from_coords(self, coords) -> "Cochain1":
        coords = vec(coords)
        if len(coords) != self.dim_c1:
            raise ShapeError("degree-1 coordinate length mismatch")
        pos = 0
        cols1 = []
        for _ in range(self.ng):
            cols1.append(coords[pos : pos + self.nV])
            pos += self.nV
        cols2 = []
        for _ in range(self.nh):
            cols2.append(coords[pos : pos + self.nW])
            pos += self.nW
        n1 = LinMap(self.ng, self.nV, QMat.from_cols(cols1, rows=self.nV))
        n2 = LinMap(self.nh, self.nW, QMat.from_cols(cols2, rows=self.nW))
        return Cochain1(n1, n2)

    # -- degree 2 ------------------------------------------------------

    def omega_keys(self):
        return list(combinations(range(self.ng), 3))

    def theta_keys(self):
        return list(combinations(range(self.nh), 3))

    def nu_keys(self):
        return [(i, j, t) for i, j in combinations(range(self.ng), 2) for t in range(self.nh)]

    def phi_keys(self):
        return [(s, u, x) for s, u in combinations(range(self.nh), 2) for x in range(self.ng)]

    @property
    def c2_summands(self) -> tuple[int, int, int, int]:
        from math import comb

        return (
            comb(self.ng, 3) * self.nV,
            comb(self.nh, 3) * self.nW,
            comb(self.ng, 2) * self.nh * self.nW,
            comb(self.nh, 2) * self.ng * self.nV,
        )

    @property
    def dim_c2(self) -> int:
        return sum(self.c2_summands)

    def c2_coords(self, c: "Cochain2") -> Vec:
        vals: list[Fraction] = []
        for key in self.omega_keys():
            vals.extend(c.omega.entries.get(key, zero_vec(self.nV)))
        for key in self.theta_keys():
            vals.extend(c.theta.entries.get(key, zero_vec(self.nW)))
        for key in self.nu_keys():
            vals.extend(c.nu.entries.get(key, zero_vec(self.nW)))
        for key in self.phi_keys():
            vals.extend(c.phi.entries.get(key, zero_vec(self.nV)))
        return tuple(vals)

    def c2_from_coords(self, coords) -> "Cochain2":
        coords = vec(coords)
        if len(coords) != self.dim_c2:
            raise ShapeError("degree-2 coordinate length mismatch")
        pos = 0
        omega = {}
        for key in self.omega_keys():
            omega[key] = coords[pos : pos + self.nV]
            pos += self.nV
        theta = {}
        for key in self.theta_keys():
            theta[key] = coords[pos : pos + self.nW]
            pos += self.nW
        nu = {}
        for key in self.nu_keys():
            nu[key] = coords[pos : pos + self.nW]
            pos += self.nW
        phi = {}
        for key in self.phi_keys():
            phi[key] = coords[pos : pos + self.nV]
            pos += self.nV
        return Cochain2(
            AltTrilinear(self.ng, self.nV, omega),
            AltTrilinear(self.nh, self.nW, theta),
            TriAction(self.ng, self.nh, self.nW, nu),
            TriAction(self.nh, self.ng, self.nV, phi),
            space=self,
        )

    def zero_cochain2(self) -> "Cochain2":
        return Cochain2(
            AltTrilinear.zero(self.ng, self.nV),
            AltTrilinear.zero(self.nh, self.nW),
            TriAction.zero(self.ng, self.nh, self.nW),
            TriAction.zero(self.nh, self.ng, self.nV),
            space=self,
        )

    def zero_cochain1(self) -> "Cochain1":
        return Cochain1(LinMap.zero(self.ng, self.nV), LinMap.zero(self.nh, self.nW))


@dataclass(frozen=True)
class Cochain1:
    """Degree-1 cochain: a pair of linear maps (g -> V, h -> W)."""

    N1: LinMap
    N2: LinMap

    def add(self, other: "Cochain1") -> "Cochain1":
        return Cochain1(self.N1.add(other.N1), self.N2.add(other.N2))

    def scale(self, c) -> "Cochain1":
        return Cochain1(self.N1.scale(c), self.N2.scale(c))


class Cochain2:
    """Degree-2 cochain (omega, theta, nu, phi)."""

    def __init__(
        self,
        omega: AltTrilinear,
        theta: AltTrilinear,
        nu: TriAction,
        phi: TriAction,
        space: CochainSpace | None = None,
    ):
        if space is None:
            space = CochainSpace(omega.dim, theta.dim, omega.out_dim, theta.out_dim)
        if (omega.dim, omega.out_dim) != (space.ng, space.nV):
            raise ShapeError("omega shape mismatch")
        if (theta.dim, theta.out_dim) != (space.nh, space.nW):
            raise ShapeError("theta shape mismatch")
        if (nu.pair_dim, nu.arg_dim, nu.out_dim) != (space.ng, space.nh, space.nW):
            raise ShapeError("nu shape mismatch")
        if (phi.pair_dim, phi.arg_dim, phi.out_dim) != (space.nh, space.ng, space.nV):
            raise ShapeError("phi shape mismatch")
        self.omega = omega
        self.theta = theta
        self.nu = nu
        self.phi = phi
        self.space = space

    def coords(self) -> Vec:
        return self.space.c2_coords(self)

    def is_zero(self) -> bool:
        return (
            self.omega.is_zero() and self.theta.is_zero() and self.nu.is_zero() and self.phi.is_zero()
        )

    def add(self, other: "Cochain2") -> "Cochain2":
        return self.space.c2_from_coords(vadd(self.coords(), other.coords()))

    def sub(self, other: "Cochain2") -> "Cochain2":
        return self.space.c2_from_coords(vsub(self.coords(), other.coords()))

    def scale(self, c) -> "Cochain2":
        c = Fraction(c)
        return self.space.c2_from_coords(vscale(c, self.coords()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Cochain2) and self.space == other.space and self.coords() == other.coords()


def cochain_dims(p: MatchedPair, r: MPRepresentation) -> tuple[int, tuple[int, int, int, int]]:
    """Dimension of the degree-1 space and the four degree-2 summands."""
    sp = CochainSpace.of(p, r)
    return sp.dim_c1, sp.c2_summands


# -- differentials -----------------------------------------------------


def d1(p: MatchedPair, r: MPRepresentation, c: Cochain1) -> Cochain2:
    """Degree-1 differential.  Mixed brackets of one module value with two
    algebra elements are read through the semidirect bracket: a value in slot
    1, 2, 3 is acted on by the remaining pair in cyclic order."""
    sp = CochainSpace.of(p, r)
    eh = [unit_vec(sp.nh, t) for t in range(sp.nh)]
    eg = [unit_vec(sp.ng, i) for i in range(sp.ng)]

    omega = {}
    for i, j, k in sp.omega_keys():
        val = vadd(
            vadd(r.rhoV.act_bb(k, i, c.N1.basis_image(j)), r.rhoV.act_bb(j, k, c.N1.basis_image(i))),
            r.rhoV.act_bb(i, j, c.N1.basis_image(k)),
        )
        val = vsub(val, c.N1.apply(p.g.basis_bracket(i, j, k)))
        omega[(i, j, k)] = val
    theta = {}
    for s, u, t in sp.theta_keys():
        val = vadd(
            vadd(r.psiW.act_bb(t, s, c.N2.basis_image(u)), r.psiW.act_bb(u, t, c.N2.basis_image(s))),
            r.psiW.act_bb(s, u, c.N2.basis_image(t)),
        )
        val = vsub(val, c.N2.apply(p.h.basis_bracket(s, u, t)))
        theta[(s, u, t)] = val
    nu = {}
    for i, j, t in sp.nu_keys():
        val = vsub(r.rhoW.act_bb(i, j, c.N2.basis_image(t)), c.N2.apply(p.rho.basis_act(i, j, t)))
        val = vadd(val, r.alpha.act(c.N1.basis_image(i), eg[j], eh[t]))
        val = vsub(val, r.alpha.act(c.N1.basis_image(j), eg[i], eh[t]))
        nu[(i, j, t)] = val
    phi = {}
    for s, u, x in sp.phi_keys():
        val = vsub(r.psiV.act_bb(s, u, c.N1.basis_image(x)), c.N1.apply(p.psi.basis_act(s, u, x)))
        val = vadd(val, r.beta.act(c.N2.basis_image(s), eh[u], eg[x]))
        val = vsub(val, r.beta.act(c.N2.basis_image(u), eh[s], eg[x]))
        phi[(s, u, x)] = val
    return Cochain2(
        AltTrilinear(sp.ng, sp.nV, omega),
        AltTrilinear(sp.nh, sp.nW, theta),
        TriAction(sp.ng, sp.nh, sp.nW, nu),
        TriAction(sp.nh, sp.ng, sp.nV, phi),
        space=sp,
    )


class _D2Ctx:
    """Shared helpers for the eight degree-2 differential components.  Every
    slot takes a basis index or a coordinate vector."""

    def __init__(self, p: MatchedPair, r: MPRepresentation, c: Cochain2):
        self.p = p
        self.r = r
        self.c = c
        self.gb = p.g.bracket
        self.hb = p.h.bracket
        self.rho = p.rho.act
        self.psi = p.psi.act
        self.rhoV = r.rhoV.act
        self.rhoW = r.rhoW.act
        self.psiV = r.psiV.act
        self.psiW = r.psiW.act
        self.alpha = r.alpha.act
        self.beta = r.beta.act
        self.om = c.omega.eval
        self.th = c.theta.eval
        self.nu = c.nu.act
        self.ph = c.phi.act


def _sum(*terms: Vec) -> Vec:
    out = terms[0]
    for t in terms[1:]:
        out = vadd(out, t)
    return out


def _d2_comp1(c: _D2Ctx, x1, x2, x3, x4, x5) -> Vec:
    return _sum(
        c.rhoV(x4, x5, c.om(x1, x2, x3)),
        c.rhoV(x5, x3, c.om(x1, x2, x4)),
        c.rhoV(x3, x4, c.om(x1, x2, x5)),
        c.om(c.gb(x1, x2, x3), x4, x5),
        c.om(x3, c.gb(x1, x2, x4), x5),
        c.om(x3, x4, c.gb(x1, x2, x5)),
        vscale(-1, c.rhoV(x1, x2, c.om(x3, x4, x5))),
        vscale(-1, c.om(x1, x2, c.gb(x3, x4, x5))),
    )


def _d2_comp2(c: _D2Ctx, x1, x2, a1, a2, a3) -> Vec:
    return _sum(
        c.psiW(a2, a3, c.nu(x1, x2, a1)),
        c.psiW(a3, a1, c.nu(x1, x2, a2)),
        c.psiW(a1, a2, c.nu(x1, x2, a3)),
        c.th(c.rho(x1, x2, a1), a2, a3),
        c.th(a1, c.rho(x1, x2, a2), a3),
        c.th(a1, a2, c.rho(x1, x2, a3)),
        vscale(-1, c.rhoW(x1, x2, c.th(a1, a2, a3))),
        vscale(-1, c.nu(x1, x2, c.hb(a1, a2, a3))),
    )


def _d2_comp3(c: _D2Ctx, a1, a2, x1, x2, x3) -> Vec:
    return _sum(
        c.rhoV(x2, x3, c.ph(a1, a2, x1)),
        c.rhoV(x3, x1, c.ph(a1, a2, x2)),
        c.rhoV(x1, x2, c.ph(a1, a2, x3)),
        c.om(c.psi(a1, a2, x1), x2, x3),
        c.om(x1, c.psi(a1, a2, x2), x3),
        c.om(x1, x2, c.psi(a1, a2, x3)),
        vscale(-1, c.psiV(a1, a2, c.om(x1, x2, x3))),
        vscale(-1, c.ph(a1, a2, c.gb(x1, x2, x3))),
    )


def _d2_comp4(c: _D2Ctx, x1, x2, x3, a1, a2) -> Vec:
    return _sum(
        c.beta(c.nu(x1, x3, a2), a1, x2),
        c.ph(c.rho(x1, x3, a2), a1, x2),
        vscale(-1, c.beta(c.nu(x2, x3, a2), a1, x1)),
        vscale(-1, c.ph(c.rho(x2, x3, a2), a1, x1)),
        c.rhoV(x1, x2, c.ph(a1, a2, x3)),
        c.om(x1, x2, c.psi(a1, a2, x3)),
        vscale(-1, c.beta(c.nu(x1, x2, a1), a2, x3)),
        vscale(-1, c.ph(c.rho(x1, x2, a1), a2, x3)),
    )


def _d2_comp5(c: _D2Ctx, a1, a2, a3, x1, x2) -> Vec:
    return _sum(
        c.alpha(c.ph(a1, a3, x2), x1, a2),
        c.nu(c.psi(a1, a3, x2), x1, a2),
        vscale(-1, c.alpha(c.ph(a2, a3, x2), x1, a1)),
        vscale(-1, c.nu(c.psi(a2, a3, x2), x1, a1)),
        c.psiW(a1, a2, c.nu(x1, x2, a3)),
        c.th(a1, a2, c.rho(x1, x2, a3)),
        vscale(-1, c.alpha(c.ph(a1, a2, x1), x2, a3)),
        vscale(-1, c.nu(c.psi(a1, a2, x1), x2, a3)),
    )


def _d2_comp6(c: _D2Ctx, a1, a2, x1, x2, x3) -> Vec:
    return _sum(
        c.psiV(a1, a2, c.om(x1, x2, x3)),
        c.ph(a1, a2, c.gb(x1, x2, x3)),
        c.ph(c.rho(x2, x3, a1), a2, x1),
        c.beta(c.nu(x2, x3, a1), a2, x1),
        c.ph(a1, c.rho(x2, x3, a2), x1),
        vscale(-1, c.beta(c.nu(x2, x3, a2), a1, x1)),
        vscale(-1, c.om(c.psi(a1, a2, x1), x2, x3)),
        vscale(-1, c.rhoV(x2, x3, c.ph(a1, a2, x1))),
    )


def _d2_comp7(c: _D2Ctx, x1, x2, a1, a2, a3) -> Vec:
    return _sum(
        c.rhoW(x1, x2, c.th(a1, a2, a3)),
        c.nu(x1, x2, c.hb(a1, a2, a3)),
        c.nu(c.psi(a2, a3, x1), x2, a1),
        c.alpha(c.ph(a2, a3, x1), x2, a1),
        c.nu(x1, c.psi(a2, a3, x2), a1),
        vscale(-1, c.alpha(c.ph(a2, a3, x2), x1, a1)),
        vscale(-1, c.th(c.rho(x1, x2, a1), a2, a3)),
        vscale(-1, c.psiW(a2, a3, c.nu(x1, x2, a1))),
    )


def _d2_comp8(c: _D2Ctx, a1, a2, a3, a4, a5) -> Vec:
    return _sum(
        c.psiW(a4, a5, c.th(a1, a2, a3)),
        c.psiW(a5, a3, c.th(a1, a2, a4)),
        c.psiW(a3, a4, c.th(a1, a2, a5)),
        c.th(c.hb(a1, a2, a3), a4, a5),
        c.th(a3, c.hb(a1, a2, a4), a5),
        c.th(a3, a4, c.hb(a1, a2, a5)),
        vscale(-1, c.psiW(a1, a2, c.th(a3, a4, a5))),
        vscale(-1, c.th(a1, a2, c.hb(a3, a4, a5))),
    )


def _component_table(sp: CochainSpace, full: bool = False):
    """(label, argument tuples, evaluator, output dim) for the eight
    components.  The default enumeration restricts slot groups in which the
    component is provenly antisymmetric; ``full`` enumerates everything (used
    as a cross-check oracle in the tests)."""
    G, H = range(sp.ng), range(sp.nh)
    pg2 = list(combinations(G, 2))
    pg3 = list(combinations(G, 3))
    ph2 = list(combinations(H, 2))
    ph3 = list(combinations(H, 3))
    if full:
        return [
            ("Z2-1", list(product(G, G, G, G, G)), _d2_comp1, sp.nV),
            ("Z2-2", list(product(G, G, H, H, H)), _d2_comp2, sp.nW),
            ("Z2-3", list(product(H, H, G, G, G)), _d2_comp3, sp.nV),
            ("Z2-4", list(product(G, G, G, H, H)), _d2_comp4, sp.nV),
            ("Z2-5", list(product(H, H, H, G, G)), _d2_comp5, sp.nW),
            ("Z2-6", list(product(H, H, G, G, G)), _d2_comp6, sp.nV),
            ("Z2-7", list(product(G, G, H, H, H)), _d2_comp7, sp.nW),
            ("Z2-8", list(product(H, H, H, H, H)), _d2_comp8, sp.nW),
        ]
    return [
        ("Z2-1", [p2 + p3 for p2 in pg2 for p3 in pg3], _d2_comp1, sp.nV),
        ("Z2-2", [p2 + p3 for p2 in pg2 for p3 in ph3], _d2_comp2, sp.nW),
        ("Z2-3", [p2 + p3 for p2 in ph2 for p3 in pg3], _d2_comp3, sp.nV),
        # antisymmetric in (x1, x2) only; (a1, a2) carries the diagonal too
        ("Z2-4", [(i, j, k, s, u) for (i, j) in pg2 for k in G for s in H for u in H], _d2_comp4, sp.nV),
        ("Z2-5", [(s, u, t, i, j) for (s, u) in ph2 for t in H for i in G for j in G], _d2_comp5, sp.nW),
        # antisymmetric in (a1, a2) and in (x2, x3); x1 is free
        ("Z2-6", [(s, u, k, i, j) for (s, u) in ph2 for k in G for (i, j) in pg2], _d2_comp6, sp.nV),
        ("Z2-7", [(i, j, t, s, u) for (i, j) in pg2 for t in H for (s, u) in ph2], _d2_comp7, sp.nW),
        ("Z2-8", [p2 + p3 for p2 in ph2 for p3 in ph3], _d2_comp8, sp.nW),
    ]


@dataclass(frozen=True)
class Cochain3Image:
    """Value of the degree-2 differential: eight blocks of evaluations over
    the canonical argument tuples."""

    labels: tuple[str, ...]
    blocks: tuple[tuple[tuple[tuple, Vec], ...], ...]

    def coords(self) -> Vec:
        vals: list[Fraction] = []
        for block in self.blocks:
            for _, v in block:
                vals.extend(v)
        return tuple(vals)

    def is_zero(self) -> bool:
        return all(is_zero_vec(v) for block in self.blocks for _, v in block)


def d2(p: MatchedPair, r: MPRepresentation, c: Cochain2, full: bool = False) -> Cochain3Image:
    """Degree-2 differential; the cochain is a cocycle iff the image is zero."""
    sp = CochainSpace.of(p, r)
    if c.space != sp:
        raise ShapeError("cochain does not live over this pair/representation")
    ctx = _D2Ctx(p, r, c)
    blocks = []
    labels = []
    for label, tuples, fn, _out in _component_table(sp, full=full):
        labels.append(label)
        blocks.append(tuple((t, fn(ctx, *t)) for t in tuples))
    return Cochain3Image(tuple(labels), tuple(blocks))


def d1_matrix(p: MatchedPair, r: MPRepresentation) -> QMat:
    """Matrix of the degree-1 differential in the canonical coordinates."""
    sp = CochainSpace.of(p, r)
    cols = []
    for idx in range(sp.dim_c1):
        c = sp.c1_from_coords(unit_vec(sp.dim_c1, idx))
        cols.append(d1(p, r, c).coords())
    return QMat.from_cols(cols, rows=sp.dim_c2)


def d2_matrix(p: MatchedPair, r: MPRepresentation, full: bool = False) -> QMat:
    """Matrix of the degree-2 differential in the canonical coordinates."""
    sp = CochainSpace.of(p, r)
    nrows = sum(
        len(tuples) * out for _, tuples, _, out in _component_table(sp, full=full)
    )
    cols = []
    for idx in range(sp.dim_c2):
        c = sp.c2_from_coords(unit_vec(sp.dim_c2, idx))
        cols.append(d2(p, r, c, full=full).coords())
    return QMat.from_cols(cols, rows=nrows)


# -- cocycles, coboundaries, cohomology --------------------------------


def is_cocycle2(p: MatchedPair, r: MPRepresentation, c: Cochain2) -> Report:
    """Per-component cocycle check; a failing component reports the first
    argument tuple with a nonzero value."""
    image = d2(p, r, c)
    report = Report(title="cocycle-2")
    for label, block in zip(image.labels, image.blocks):
        witness = None
        for t, v in block:
            if not is_zero_vec(v):
                witness = Witness(t, tuple(v), zero_vec(len(v)))
                break
        report.add(Check(label, witness is None, witness))
    return report


def z2_basis(p: MatchedPair, r: MPRepresentation) -> Subspace:
    return kernel_basis(d2_matrix(p, r))


def b2_basis(p: MatchedPair, r: MPRepresentation) -> Subspace:
    return image_basis(d1_matrix(p, r))


def z1_basis(p: MatchedPair, r: MPRepresentation) -> Subspace:
    """Degree-1 cocycles: the kernel of the degree-1 differential (the four
    defining equations are exactly its components)."""
    return kernel_basis(d1_matrix(p, r))


def h2_dim(p: MatchedPair, r: MPRepresentation) -> int:
    return quotient_dim(z2_basis(p, r), b2_basis(p, r))


def h2_representatives(p: MatchedPair, r: MPRepresentation) -> list[Cochain2]:
    """Coset representatives: cocycle basis vectors extending a coboundary
    basis to a basis of the cocycle space."""
    sp = CochainSpace.of(p, r)
    b2 = b2_basis(p, r)
    z2 = z2_basis(p, r)
    chosen: list[Vec] = list(b2.basis)
    reps: list[Cochain2] = []
    current = span(chosen, sp.dim_c2) if chosen else None
    for v in z2.basis:
        if current is None:
            contained = is_zero_vec(v)
        else:
            contained = current.contains(v)
        if not contained:
            chosen.append(v)
            reps.append(sp.c2_from_coords(v))
            current = span(chosen, sp.dim_c2)
    return reps


def is_coboundary2(p: MatchedPair, r: MPRepresentation, c: Cochain2) -> Cochain1 | None:
    """A degree-1 preimage under the differential, or None."""
    sp = CochainSpace.of(p, r)
    x = solve(d1_matrix(p, r), c.coords())
    return sp.c1_from_coords(x) if x is not None else None


def cohomologous(p: MatchedPair, r: MPRepresentation, c: Cochain2, c2: Cochain2) -> Cochain1 | None:
    """Witness with difference c - c2 a coboundary, or None when the classes differ."""
    return is_coboundary2(p, r, c.sub(c2))
