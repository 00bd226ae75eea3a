"""Matched pairs of 3-Lie algebras: mutual pair actions, the six
compatibility axioms, the bicrossed product, and morphisms of pairs."""

from __future__ import annotations

from itertools import combinations, product

from .errors import ShapeError
from .exactlinalg import Vec, is_zero_vec, zero_vec
from .reports import Report, check_sides
from .structure import (
    LinMap,
    ThreeLie,
    TriAction,
    _accum,
    verify_3lie_rep,
    verify_jacobi,
    verify_morphism,
)


class MatchedPair:
    """Two 3-Lie algebras g and h acting on each other.

    ``rho`` sends g-pairs to operators on h, ``psi`` sends h-pairs to
    operators on g.  Construction only checks shapes: invalid actions are
    legal inputs so that the verifier can report on them.
    """

    def __init__(self, g: ThreeLie, h: ThreeLie, rho: TriAction, psi: TriAction):
        if (rho.pair_dim, rho.arg_dim, rho.out_dim) != (g.dim, h.dim, h.dim):
            raise ShapeError("rho shape does not match (g-pair acting on h)")
        if (psi.pair_dim, psi.arg_dim, psi.out_dim) != (h.dim, g.dim, g.dim):
            raise ShapeError("psi shape does not match (h-pair acting on g)")
        self.g = g
        self.h = h
        self.rho = rho
        self.psi = psi

    @staticmethod
    def with_zero_actions(g: ThreeLie, h: ThreeLie) -> "MatchedPair":
        return MatchedPair(
            g, h, TriAction.zero(g.dim, h.dim, h.dim), TriAction.zero(h.dim, g.dim, g.dim)
        )


def _sum3(a: Vec, b: Vec, c: Vec) -> Vec:
    acc = list(a)
    _accum(acc, 1, b)
    _accum(acc, 1, c)
    return tuple(acc)


def _mp1_sides(p: MatchedPair, x1, x2, x3, a4, a5):
    g, psi = p.g, p.psi
    lhs = psi.act(a4, a5, g.basis_bracket(x1, x2, x3))
    rhs = _sum3(
        g.bracket(psi.basis_act(a4, a5, x1), x2, x3),
        g.bracket(x1, psi.basis_act(a4, a5, x2), x3),
        g.bracket(x1, x2, psi.basis_act(a4, a5, x3)),
    )
    return lhs, rhs


def _mp2_sides(p: MatchedPair, x1, x2, x4, a3, a5):
    g, rho, psi = p.g, p.rho, p.psi
    lhs = psi.act(rho.basis_act(x1, x2, a3), a5, x4)
    acc = list(psi.act(rho.basis_act(x1, x4, a5), a3, x2))
    _accum(acc, -1, psi.act(rho.basis_act(x2, x4, a5), a3, x1))
    _accum(acc, 1, g.bracket(x1, x2, psi.basis_act(a3, a5, x4)))
    return lhs, tuple(acc)


def _mp3_sides(p: MatchedPair, x1, x4, x5, a2, a3):
    g, rho, psi = p.g, p.rho, p.psi
    lhs = g.bracket(psi.basis_act(a2, a3, x1), x4, x5)
    rhs = _sum3(
        psi.act(a2, a3, g.basis_bracket(x1, x4, x5)),
        psi.act(rho.basis_act(x4, x5, a2), a3, x1),
        psi.act(a2, rho.basis_act(x4, x5, a3), x1),
    )
    return lhs, rhs


def _mp4_sides(p: MatchedPair, a1, a2, a3, x4, x5):
    h, rho = p.h, p.rho
    lhs = rho.act(x4, x5, h.basis_bracket(a1, a2, a3))
    rhs = _sum3(
        h.bracket(rho.basis_act(x4, x5, a1), a2, a3),
        h.bracket(a1, rho.basis_act(x4, x5, a2), a3),
        h.bracket(a1, a2, rho.basis_act(x4, x5, a3)),
    )
    return lhs, rhs


def _mp5_sides(p: MatchedPair, a1, a2, a4, x3, x5):
    h, rho, psi = p.h, p.rho, p.psi
    lhs = rho.act(psi.basis_act(a1, a2, x3), x5, a4)
    acc = list(rho.act(psi.basis_act(a1, a4, x5), x3, a2))
    _accum(acc, -1, rho.act(psi.basis_act(a2, a4, x5), x3, a1))
    _accum(acc, 1, h.bracket(a1, a2, rho.basis_act(x3, x5, a4)))
    return lhs, tuple(acc)


def _mp6_sides(p: MatchedPair, a1, a4, a5, x2, x3):
    h, rho, psi = p.h, p.rho, p.psi
    lhs = h.bracket(rho.basis_act(x2, x3, a1), a4, a5)
    rhs = _sum3(
        rho.act(x2, x3, h.basis_bracket(a1, a4, a5)),
        rho.act(psi.basis_act(a4, a5, x2), x3, a1),
        rho.act(x2, psi.basis_act(a4, a5, x3), a1),
    )
    return lhs, rhs


def verify_matched_pair(p: MatchedPair) -> Report:
    """Check both Jacobi identities, both action-representation conditions,
    and the six compatibility axioms MP1..MP6 on all basis tuples."""
    ng, nh = p.g.dim, p.h.dim
    G, H = range(ng), range(nh)
    report = Report(title="matched-pair")
    report.extend(verify_jacobi(p.g), prefix="g-")
    report.extend(verify_jacobi(p.h), prefix="h-")
    report.extend(verify_3lie_rep(p.g, nh, p.rho), prefix="rho-")
    report.extend(verify_3lie_rep(p.h, ng, p.psi), prefix="psi-")

    axioms = [
        ("MP1", product(G, G, G, H, H), _mp1_sides),
        ("MP2", product(G, G, G, H, H), _mp2_sides),
        ("MP3", product(G, G, G, H, H), _mp3_sides),
        ("MP4", product(H, H, H, G, G), _mp4_sides),
        ("MP5", product(H, H, H, G, G), _mp5_sides),
        ("MP6", product(H, H, H, G, G), _mp6_sides),
    ]
    for label, tuples, sides in axioms:
        report.add(check_sides(label, list(tuples), lambda *t, _s=sides: _s(p, *t)))
    return report


def bicrossed_product(p: MatchedPair) -> ThreeLie:
    """The algebra on g + h whose bracket combines both brackets and both
    actions.  No axiom precondition: invalid pairs yield an algebra that
    fails Jacobi, which the equivalence tests rely on."""
    ng, nh = p.g.dim, p.h.dim
    n = ng + nh
    brackets: dict[tuple[int, int, int], Vec] = {}
    for i, j, k in combinations(range(n), 3):
        if k < ng:
            v = p.g.basis_bracket(i, j, k)
            if not is_zero_vec(v):
                brackets[(i, j, k)] = v + zero_vec(nh)
        elif j < ng:
            w = p.rho.basis_act(i, j, k - ng)
            if not is_zero_vec(w):
                brackets[(i, j, k)] = zero_vec(ng) + w
        elif i < ng:
            v = p.psi.basis_act(j - ng, k - ng, i)
            if not is_zero_vec(v):
                brackets[(i, j, k)] = v + zero_vec(nh)
        else:
            w = p.h.basis_bracket(i - ng, j - ng, k - ng)
            if not is_zero_vec(w):
                brackets[(i, j, k)] = zero_vec(ng) + w
    names = tuple(f"g{i+1}" for i in range(ng)) + tuple(f"h{t+1}" for t in range(nh))
    return ThreeLie(n, brackets, names)


def verify_mp_morphism(f: LinMap, g_map: LinMap, p: MatchedPair, q: MatchedPair) -> Report:
    """A morphism of pairs: algebra homomorphisms on both sides that
    intertwine both actions."""
    if f.domain_dim != p.g.dim or f.codomain_dim != q.g.dim:
        raise ShapeError("f shape mismatch")
    if g_map.domain_dim != p.h.dim or g_map.codomain_dim != q.h.dim:
        raise ShapeError("g shape mismatch")
    report = Report(title="matched-pair-morphism")
    report.extend(verify_morphism(f, p.g, q.g), prefix="g-")
    report.extend(verify_morphism(g_map, p.h, q.h), prefix="h-")

    pairs_g = list(combinations(range(p.g.dim), 2))
    pairs_h = list(combinations(range(p.h.dim), 2))
    report.add(check_sides(
        "ACT-RHO",
        [(i, j, a) for (i, j) in pairs_g for a in range(p.h.dim)],
        lambda i, j, a: (
            g_map.apply(p.rho.basis_act(i, j, a)),
            q.rho.act(f.basis_image(i), f.basis_image(j), g_map.basis_image(a)),
        ),
    ))
    report.add(check_sides(
        "ACT-PSI",
        [(s, t, x) for (s, t) in pairs_h for x in range(p.g.dim)],
        lambda s, t, x: (
            f.apply(p.psi.basis_act(s, t, x)),
            q.psi.act(g_map.basis_image(s), g_map.basis_image(t), f.basis_image(x)),
        ),
    ))
    return report
