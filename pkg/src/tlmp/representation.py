"""Representations of a matched pair: four module actions plus two pairing
maps, the 24 compatibility identities, the semidirect matched pair, and the
adjoint coefficients used by deformation theory.

Each identity is transcribed as its own two-sided evaluator so the verifier
can report per-identity results with the first violating basis tuple.
"""

from __future__ import annotations

from itertools import combinations, product

from fractions import Fraction

from .errors import AxiomError, ShapeError
from .exactlinalg import Vec, is_zero_vec, vec, zero_vec
from .matched import (
    MatchedPair,
    _mp1_sides,
    _mp2_sides,
    _mp3_sides,
    _mp4_sides,
    _mp5_sides,
    _mp6_sides,
    verify_matched_pair,
)
from .reports import Check, Report, check_sides
from .structure import (
    TriAction,
    _accum,
    adjoint_action,
    fundamental_identity_sides,
    semidirect_sum,
    verify_3lie_rep,
)


class Pairing:
    """Trilinear map with three distinct slots: (first, second) -> (arg -> out).

    Unlike :class:`TriAction` there is no symmetry between slots; entries are
    stored on arbitrary index triples (p, q, t).
    """

    def __init__(self, first_dim: int, second_dim: int, arg_dim: int, out_dim: int, entries=None):
        self.first_dim = first_dim
        self.second_dim = second_dim
        self.arg_dim = arg_dim
        self.out_dim = out_dim
        table: dict[tuple[int, int, int], Vec] = {}
        for key, value in (entries or {}).items():
            pi, qi, ti = key
            if not (0 <= pi < first_dim and 0 <= qi < second_dim and 0 <= ti < arg_dim):
                raise ShapeError(f"pairing key {key} out of range")
            v = vec(value)
            if len(v) != out_dim:
                raise ShapeError(f"pairing value for {key} has length {len(v)} != {out_dim}")
            if not is_zero_vec(v):
                table[(pi, qi, ti)] = v
        self.entries = table

    @staticmethod
    def zero(first_dim: int, second_dim: int, arg_dim: int, out_dim: int) -> "Pairing":
        return Pairing(first_dim, second_dim, arg_dim, out_dim)

    def is_zero(self) -> bool:
        return not self.entries

    def act(self, u, y, s) -> Vec:
        """Trilinear evaluation; each slot takes a basis index or a vector."""
        _ONE = Fraction(1)

        def indexed(arg, dim, name):
            if isinstance(arg, int):
                return ((arg, _ONE),)
            arg = vec(arg)
            if len(arg) != dim:
                raise ShapeError(f"{name} argument length mismatch")
            return tuple((i, cf) for i, cf in enumerate(arg) if cf)

        acc = [Fraction(0)] * self.out_dim
        for pi, cu in indexed(u, self.first_dim, "first"):
            for qi, cy in indexed(y, self.second_dim, "second"):
                for ti, cs in indexed(s, self.arg_dim, "arg"):
                    val = self.entries.get((pi, qi, ti))
                    if val is not None:
                        _accum(acc, cu * cy * cs, val)
        return tuple(acc)

    def basis_act(self, pi: int, qi: int, ti: int) -> Vec:
        v = self.entries.get((pi, qi, ti))
        return v if v is not None else zero_vec(self.out_dim)


class MPRepresentation:
    """Coefficients (V, W, actions, pairings) over a matched pair of the
    declared base dimensions."""

    def __init__(
        self,
        g_dim: int,
        h_dim: int,
        V_dim: int,
        W_dim: int,
        rhoV: TriAction,
        rhoW: TriAction,
        psiV: TriAction,
        psiW: TriAction,
        alpha: Pairing,
        beta: Pairing,
    ):
        if (rhoV.pair_dim, rhoV.arg_dim, rhoV.out_dim) != (g_dim, V_dim, V_dim):
            raise ShapeError("rhoV shape mismatch")
        if (rhoW.pair_dim, rhoW.arg_dim, rhoW.out_dim) != (g_dim, W_dim, W_dim):
            raise ShapeError("rhoW shape mismatch")
        if (psiV.pair_dim, psiV.arg_dim, psiV.out_dim) != (h_dim, V_dim, V_dim):
            raise ShapeError("psiV shape mismatch")
        if (psiW.pair_dim, psiW.arg_dim, psiW.out_dim) != (h_dim, W_dim, W_dim):
            raise ShapeError("psiW shape mismatch")
        if (alpha.first_dim, alpha.second_dim, alpha.arg_dim, alpha.out_dim) != (
            V_dim,
            g_dim,
            h_dim,
            W_dim,
        ):
            raise ShapeError("alpha shape mismatch")
        if (beta.first_dim, beta.second_dim, beta.arg_dim, beta.out_dim) != (
            W_dim,
            h_dim,
            g_dim,
            V_dim,
        ):
            raise ShapeError("beta shape mismatch")
        self.g_dim = g_dim
        self.h_dim = h_dim
        self.V_dim = V_dim
        self.W_dim = W_dim
        self.rhoV = rhoV
        self.rhoW = rhoW
        self.psiV = psiV
        self.psiW = psiW
        self.alpha = alpha
        self.beta = beta

    @staticmethod
    def zero(g_dim: int, h_dim: int, V_dim: int, W_dim: int) -> "MPRepresentation":
        return MPRepresentation(
            g_dim,
            h_dim,
            V_dim,
            W_dim,
            TriAction.zero(g_dim, V_dim, V_dim),
            TriAction.zero(g_dim, W_dim, W_dim),
            TriAction.zero(h_dim, V_dim, V_dim),
            TriAction.zero(h_dim, W_dim, W_dim),
            Pairing.zero(V_dim, g_dim, h_dim, W_dim),
            Pairing.zero(W_dim, h_dim, g_dim, V_dim),
        )

    def matches(self, p: MatchedPair) -> bool:
        return self.g_dim == p.g.dim and self.h_dim == p.h.dim


def _fiberize(base_dim: int, fiber: bool, idx: int) -> int:
    """Map a slot index into combined coordinates: base indices first, fiber
    indices offset by the base dimension."""
    return base_dim + idx if fiber else idx


def _mixed_tuples(slot_sizes, fiber_flags):
    """All index tuples where slot i ranges over its base indices when
    fiber_flags[i] is False and over its fiber indices when True.
    slot_sizes[i] = (base_dim, fiber_dim)."""
    ranges = []
    for (nb, nf), flag in zip(slot_sizes, fiber_flags):
        ranges.append(range(nf) if flag else range(nb))
    for raw in product(*ranges):
        yield tuple(
            _fiberize(nb, flag, idx)
            for (nb, nf), flag, idx in zip(slot_sizes, fiber_flags, raw)
        )


# Identity labels follow the published grouping: each of the six glued
# compatibility axioms contributes the four argument patterns with exactly one
# module-valued slot.  (axiom, evaluator, slot kinds, label per fiber slot;
# slot kind "g"/"h" says which side of the glued pair the slot lives on.)
_IDENTITY_LAYOUT = [
    ("MP1", "ggghh", {0: "R1", 1: "R2", 2: "R3", 3: "R4"}),
    ("MP2", "ggghh", {0: "R5", 1: "R6", 2: "R7", 3: "R8a", 4: "R8b"}),
    ("MP3", "ggghh", {0: "R9", 1: "R11", 2: "R12", 3: "R10"}),
    ("MP4", "hhhgg", {0: "R13", 1: "R14", 2: "R15", 3: "R16"}),
    ("MP5", "hhhgg", {0: "R17", 1: "R18", 2: "R19", 3: "R20a", 4: "R20b"}),
    ("MP6", "hhhgg", {0: "R21", 1: "R23", 2: "R24", 3: "R22"}),
]

_AXIOM_SIDES = {
    "MP1": _mp1_sides,
    "MP2": _mp2_sides,
    "MP3": _mp3_sides,
    "MP4": _mp4_sides,
    "MP5": _mp5_sides,
    "MP6": _mp6_sides,
}

# Slot order of the evaluators: MP1 (x1,x2,x3,a4,a5); MP2 (x1,x2,x4,a3,a5);
# MP3 (x1,x4,x5,a2,a3); MP4 (a1,a2,a3,x4,x5); MP5 (a1,a2,a4,x3,x5);
# MP6 (a1,a4,a5,x2,x3).  In MP1/MP3/MP4/MP6 the trailing two slots form the
# acting antisymmetric pair, so one fiber orientation suffices; in MP2/MP5
# the two trailing slots play asymmetric roles and get separate checks.


def verify_mp_representation(p: MatchedPair, r: MPRepresentation) -> Report:
    """Check the 24 compatibility identities plus the closure conditions.

    The identities are evaluated as the components of the six glued
    compatibility axioms on basis tuples with exactly one module-valued slot
    (labels R1..R24, following the published grouping); patterns with two or
    more module slots are swept by X1..X6, and the glued actions are checked
    to be 3-Lie representations (GLUE-RHO, GLUE-PSI).  Together with the four
    module-action checks this is exactly the condition that the semidirect
    construction yields a matched pair over a valid base.
    """
    if not r.matches(p):
        raise ShapeError("representation dimensions do not match the pair")
    report = Report(title="mp-representation")
    report.extend(verify_3lie_rep(p.g, r.V_dim, r.rhoV), prefix="rhoV-")
    report.extend(verify_3lie_rep(p.g, r.W_dim, r.rhoW), prefix="rhoW-")
    report.extend(verify_3lie_rep(p.h, r.V_dim, r.psiV), prefix="psiV-")
    report.extend(verify_3lie_rep(p.h, r.W_dim, r.psiW), prefix="psiW-")
    for check in _joint_checks(p, r):
        report.add(check)
    return report


def _joint_checks(
    p: MatchedPair,
    r: MPRepresentation,
    stop_at_failure: bool = False,
    include_structural_zeros: bool = True,
):
    """Yield the R/X/GLUE checks for (p, r) in increasing typical cost."""
    sd = semidirect_product(p, r)
    sizes = {
        "g": (p.g.dim, r.V_dim),
        "h": (p.h.dim, r.W_dim),
    }

    merged: dict[str, Check] = {}

    def emit(label: str, check: Check):
        # R8a/R8b and R20a/R20b fold into single published identities.
        key = label.rstrip("ab")
        prev = merged.get(key)
        if prev is None or (prev.passed and not check.passed):
            merged[key] = Check(key, check.passed, check.witness)

    for axiom, kinds, fiber_labels in _IDENTITY_LAYOUT:
        sides = _AXIOM_SIDES[axiom]
        slot_sizes = [sizes[k] for k in kinds]
        for slot, label in fiber_labels.items():
            flags = [False] * 5
            flags[slot] = True
            tuples = list(_mixed_tuples(slot_sizes, flags))
            emit(label, check_sides(label, tuples, lambda *t, _s=sides: _s(sd, *t)))

    order = ["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R11", "R12",
             "R13", "R14", "R15", "R16", "R17", "R18", "R19", "R20", "R21", "R22", "R23", "R24"]
    for key in order:
        yield merged[key]
        if stop_at_failure and not merged[key].passed:
            return

    # Patterns with two or more module slots vanish identically: every term
    # composes block maps through a slot that kills it.  They stay in the
    # full report as closure documentation but carry no constraint (the test
    # suite pins this on random invalid inputs too), so the fast path skips
    # them.
    if include_structural_zeros:
        for idx, (axiom, kinds, _) in enumerate(_IDENTITY_LAYOUT, start=1):
            sides = _AXIOM_SIDES[axiom]
            slot_sizes = [sizes[k] for k in kinds]
            tuples = []
            for flags in product([False, True], repeat=5):
                if sum(flags) < 2:
                    continue
                tuples.extend(_mixed_tuples(slot_sizes, list(flags)))
            check = check_sides(f"X{idx}", tuples, lambda *t, _s=sides: _s(sd, *t))
            yield check
            if stop_at_failure and not check.passed:
                return

    # The glued actions must themselves be 3-Lie representations.  Relative
    # to the base pair's own checks, the new constraints are the tuples with
    # exactly one glued-module index: all-base tuples restate the base action
    # conditions, and tuples with two or more module indices vanish
    # identically (the module is an abelian ideal).
    for label, alg, mod_dim, action, base_alg_dim, base_mod_dim in (
        ("GLUE-RHO", sd.g, sd.h.dim, sd.rho, p.g.dim, p.h.dim),
        ("GLUE-PSI", sd.h, sd.g.dim, sd.psi, p.h.dim, p.g.dim),
    ):
        total = semidirect_sum(alg, mod_dim, action)
        alg_dim = alg.dim

        def in_module(idx: int, _ad=alg_dim) -> bool:
            return idx >= _ad

        def is_fiber(idx: int, _ad=alg_dim, _bad=base_alg_dim, _bmd=base_mod_dim) -> bool:
            return (_bad <= idx < _ad) or (idx >= _ad + _bmd)

        tuples = [
            t
            for t in (
                (i1, i2, j1, j2, j3)
                for (i1, i2) in combinations(range(total.dim), 2)
                for (j1, j2, j3) in combinations(range(total.dim), 3)
            )
            if sum(map(in_module, t)) == 1 and any(map(is_fiber, t))
        ]
        check = check_sides(
            label, tuples, lambda *t, _a=total: fundamental_identity_sides(_a, *t)
        )
        yield check
        if stop_at_failure and not check.passed:
            return


def is_valid_mp_representation(p: MatchedPair, r: MPRepresentation) -> bool:
    """Fast boolean form of the verifier (stops at the first failure)."""
    if not (
        verify_3lie_rep(p.g, r.V_dim, r.rhoV).passed
        and verify_3lie_rep(p.g, r.W_dim, r.rhoW).passed
        and verify_3lie_rep(p.h, r.V_dim, r.psiV).passed
        and verify_3lie_rep(p.h, r.W_dim, r.psiW).passed
    ):
        return False
    for check in _joint_checks(p, r, stop_at_failure=True, include_structural_zeros=False):
        if not check.passed:
            return False
    return True


def semidirect_product(p: MatchedPair, r: MPRepresentation) -> MatchedPair:
    """The matched pair on (g + V, h + W) extending both actions by the
    pairing maps."""
    if not r.matches(p):
        raise ShapeError("representation dimensions do not match the pair")
    ng, nh, nv, nw = p.g.dim, p.h.dim, r.V_dim, r.W_dim
    gV = semidirect_sum(p.g, nv, r.rhoV)
    hW = semidirect_sum(p.h, nw, r.psiW)

    rho_entries: dict[tuple[int, int, int], Vec] = {}
    for i in range(ng + nv):
        for j in range(i + 1, ng + nv):
            for t in range(nh + nw):
                if j < ng:
                    if t < nh:
                        val = p.rho.basis_act(i, j, t) + zero_vec(nw)
                    else:
                        val = zero_vec(nh) + r.rhoW.basis_act(i, j, t - nh)
                elif i < ng <= j:
                    if t < nh:
                        # second element lies in V: only -alpha(v2, x1) survives
                        val = zero_vec(nh) + tuple(
                            -a for a in r.alpha.basis_act(j - ng, i, t)
                        )
                    else:
                        val = zero_vec(nh + nw)
                else:
                    val = zero_vec(nh + nw)
                if not is_zero_vec(val):
                    rho_entries[(i, j, t)] = val
    psi_entries: dict[tuple[int, int, int], Vec] = {}
    for s in range(nh + nw):
        for u in range(s + 1, nh + nw):
            for t in range(ng + nv):
                if u < nh:
                    if t < ng:
                        val = p.psi.basis_act(s, u, t) + zero_vec(nv)
                    else:
                        val = zero_vec(ng) + r.psiV.basis_act(s, u, t - ng)
                elif s < nh <= u:
                    if t < ng:
                        val = zero_vec(ng) + tuple(
                            -a for a in r.beta.basis_act(u - nh, s, t)
                        )
                    else:
                        val = zero_vec(ng + nv)
                else:
                    val = zero_vec(ng + nv)
                if not is_zero_vec(val):
                    psi_entries[(s, u, t)] = val
    rho_new = TriAction(ng + nv, nh + nw, nh + nw, rho_entries)
    psi_new = TriAction(nh + nw, ng + nv, ng + nv, psi_entries)
    return MatchedPair(gV, hW, rho_new, psi_new)


def adjoint_representation(p: MatchedPair) -> MPRepresentation:
    """Coefficients on (V, W) = (g, h): module actions are the adjoint
    brackets and the given pair actions, pairings restate the pair actions
    with the acting element in the first slot."""
    report = verify_matched_pair(p)
    if not report.passed:
        failed = report.first_failure()
        raise AxiomError(f"matched pair fails {failed.label}", report=report)
    ng, nh = p.g.dim, p.h.dim
    alpha_entries = {}
    for vi in range(ng):
        for xi in range(ng):
            for ai in range(nh):
                val = p.rho.basis_act(vi, xi, ai)
                if not is_zero_vec(val):
                    alpha_entries[(vi, xi, ai)] = val
    beta_entries = {}
    for wi in range(nh):
        for ai in range(nh):
            for xi in range(ng):
                val = p.psi.basis_act(wi, ai, xi)
                if not is_zero_vec(val):
                    beta_entries[(wi, ai, xi)] = val
    return MPRepresentation(
        ng,
        nh,
        ng,
        nh,
        adjoint_action(p.g),
        p.rho,
        p.psi,
        adjoint_action(p.h),
        Pairing(ng, ng, nh, nh, alpha_entries),
        Pairing(nh, nh, ng, ng, beta_entries),
    )
