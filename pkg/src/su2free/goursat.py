"""Subgroups of a product of two groups via Goursat quintuples.

A quintuple (A, A0, B, B0, theta) is stored through two surjections
alpha: A -> F and beta: B -> F onto one model group F with kernels A0 and B0,
and theta an automorphism of F.  The subgroup is the fiber product
{(a, b) : theta(alpha(a)) = beta(b)}.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .groups import (
    FiniteGroup,
    GroupError,
    QuotientGroup,
    SubGroup,
    apply_automorphism,
    build_group,
    find_isomorphism,
    is_homomorphism,
    is_normal,
    natural_map,
    standard_subgroup,
)

__all__ = [
    "GoursatQuintuple",
    "PairSubgroup",
    "build_goursat",
    "decompose",
    "graph_of",
    "quintuple_data_equal",
    "quintuple_from_descriptors",
    "ambient",
]


def ambient(g: FiniteGroup) -> tuple[FiniteGroup, np.ndarray]:
    """Root group of a chain of subgroups and the embedding of g's indices."""
    members = g.all
    while isinstance(g, SubGroup):
        members = g.members[members]
        g = g.parent
    return g, members


@dataclass
class PairSubgroup:
    """Explicit subgroup of g1 x g2 given by index columns ``a`` and ``b``."""

    g1: FiniteGroup
    g2: FiniteGroup
    a: np.ndarray
    b: np.ndarray
    provenance: str = "explicit"

    def __post_init__(self):
        a = np.asarray(self.a, dtype=np.int64)
        b = np.asarray(self.b, dtype=np.int64)
        codes = np.unique(a * self.g2.order + b)
        self.a = codes // self.g2.order
        self.b = codes % self.g2.order

    @property
    def order(self) -> int:
        return int(self.a.size)

    @property
    def codes(self) -> np.ndarray:
        return self.a * self.g2.order + self.b

    def pairs(self):
        return [(self.g1.element(x), self.g2.element(y)) for x, y in zip(self.a, self.b)]

    def rp_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        return self.g1.rp_ids[self.a], self.g2.rp_ids[self.b]

    def same_elements(self, other: "PairSubgroup") -> bool:
        return (self.g1.descriptor == other.g1.descriptor and self.g2.descriptor == other.g2.descriptor
                and np.array_equal(self.codes, other.codes))

    def is_closed(self) -> bool:
        return _pair_is_subgroup(self.g1, self.g2, self.codes)


def _pair_mul(g1, g2, c1, c2):
    n2 = g2.order
    return g1.mul(c1 // n2, c2 // n2) * n2 + g2.mul(c1 % n2, c2 % n2)


def _pair_closure(g1, g2, gens) -> np.ndarray:
    n = g1.order * g2.order
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    gens = np.asarray(gens, dtype=np.int64)
    frontier = np.array([0], dtype=np.int64)
    while frontier.size and gens.size:
        new = np.asarray(_pair_mul(g1, g2, frontier[:, None], gens[None, :])).ravel()
        new = np.unique(new[~mask[new]])
        mask[new] = True
        frontier = new
    return np.flatnonzero(mask)


def _pair_is_subgroup(g1, g2, codes) -> bool:
    codes = np.unique(codes)
    if codes.size == 0 or codes[0] != 0:
        return False
    inside = np.zeros(g1.order * g2.order, dtype=bool)
    inside[codes] = True
    covered = np.zeros_like(inside)
    covered[0] = True
    gens = []
    for c in codes:
        if not covered[c]:
            gens.append(int(c))
            cl = _pair_closure(g1, g2, gens)
            if not inside[cl].all():
                return False
            covered[cl] = True
    return True


@dataclass
class GoursatQuintuple:
    """Quintuple data with the surjections onto the model group F."""

    A: FiniteGroup
    A0: np.ndarray
    B: FiniteGroup
    B0: np.ndarray
    F: FiniteGroup
    alpha: np.ndarray
    beta: np.ndarray
    theta: np.ndarray
    label: str = ""
    meta: dict = field(default_factory=dict)

    def check(self) -> None:
        for name, grp, ker, f in (("A", self.A, self.A0, self.alpha), ("B", self.B, self.B0, self.beta)):
            if not is_normal(grp, ker):
                raise GroupError(f"{name}0 is not normal in {name}")
            if not is_homomorphism(grp, self.F, f):
                raise GroupError(f"map from {name} is not a homomorphism")
            if np.unique(f).size != self.F.order:
                raise GroupError(f"map from {name} is not onto F")
            if not np.array_equal(np.flatnonzero(f == 0), np.unique(ker)):
                raise GroupError(f"kernel of the map from {name} differs from {name}0")
        th = np.asarray(self.theta)
        if np.unique(th).size != self.F.order or not is_homomorphism(self.F, self.F, th):
            raise GroupError("theta is not an automorphism of F")

    @property
    def order(self) -> int:
        return self.A.order * int(np.asarray(self.B0).size)

    def coset_map(self) -> dict[int, int]:
        """theta as a map between canonical coset representatives (ambient indices)."""
        _, ea = ambient(self.A)
        _, eb = ambient(self.B)
        inv_beta = {}
        for b in range(self.B.order):
            inv_beta.setdefault(int(self.beta[b]), b)
        qa = QuotientGroup(self.A, self.A0)
        qb = QuotientGroup(self.B, self.B0)
        out = {}
        for rep in qa.reps:
            b = inv_beta[int(self.theta[self.alpha[rep]])]
            out[int(ea[rep])] = int(eb[qb.reps[qb.coset_of[b]]])
        return out


def build_goursat(q: GoursatQuintuple, check: bool = True) -> PairSubgroup:
    """Fiber product of the quintuple, as explicit pairs in the ambient groups."""
    if check:
        q.check()
    fa = np.asarray(q.theta, dtype=np.int64)[np.asarray(q.alpha, dtype=np.int64)]
    ia, ib = kernels.fiber_pairs(fa, q.beta, q.F.order)
    g1, ea = ambient(q.A)
    g2, eb = ambient(q.B)
    return PairSubgroup(g1, g2, ea[ia], eb[ib], provenance=q.label or "quintuple")


def decompose(c: PairSubgroup) -> GoursatQuintuple:
    """Quintuple of a pair subgroup: projections, kernels and the induced map."""
    if not c.is_closed():
        raise GroupError("input is not a subgroup")
    A = SubGroup(c.g1, np.unique(c.a))
    B = SubGroup(c.g2, np.unique(c.b))
    ai = A._pos[c.a]
    bi = B._pos[c.b]
    A0 = np.unique(ai[bi == 0])
    B0 = np.unique(bi[ai == 0])
    F = QuotientGroup(B, B0)
    beta = F.coset_of
    alpha = np.full(A.order, -1, dtype=np.int64)
    alpha[ai] = beta[bi]
    theta = F.all.copy()
    return GoursatQuintuple(A, A0, B, B0, F, alpha, theta=theta, beta=beta, label="decomposed")


def graph_of(spec, g: FiniteGroup) -> PairSubgroup:
    """Graph {(x, f(x))} of an automorphism of an ADE group."""
    f = apply_automorphism(spec, g)
    root, emb = ambient(g)
    return PairSubgroup(root, root, emb, emb[f], provenance=f"graph {spec}")


def quintuple_from_descriptors(A: str | FiniteGroup, A0: str, B: str | FiniteGroup, B0: str,
                               theta="id") -> GoursatQuintuple:
    """Quintuple from group descriptors and an automorphism of the model quotient.

    A0 and B0 name the standard normal subgroups of A and B.  Both quotients
    are identified with one model group F by their natural maps; ``theta``
    is an automorphism spec applied on F, or an explicit permutation of F.
    """
    ga, a0, fa, alpha, na = _side(A, A0)
    gb, b0, fb, beta, nb = _side(B, B0)
    if fa is not fb:
        iso = find_isomorphism(fa, fb)
        if iso is None:
            raise GroupError(f"quotients {na} and {nb} are not isomorphic")
        alpha = iso[alpha]
    F = fb
    if isinstance(theta, (str,)) or not hasattr(theta, "__len__"):
        th = apply_automorphism(theta, F)
    else:
        th = np.asarray(theta, dtype=np.int64)
    a0m = a0.members if isinstance(a0, SubGroup) else np.asarray(a0)
    b0m = b0.members if isinstance(b0, SubGroup) else np.asarray(b0)
    label = f"G({ga.descriptor},{_desc(a0)},{gb.descriptor},{_desc(b0)},{theta if isinstance(theta, str) else 'theta'})"
    return GoursatQuintuple(ga, a0m, gb, b0m, F, alpha, beta, th, label=label, meta={"F": nb})


def _side(G, G0):
    if isinstance(G, str) and isinstance(G0, str):
        return _cached_side(G, G0)
    g = build_group(G) if isinstance(G, str) else G
    g0 = standard_subgroup(g, G0) if isinstance(G0, str) else G0
    return (g, g0) + natural_map(g, g0)


@functools.lru_cache(maxsize=None)
def _cached_side(G: str, G0: str):
    g = build_group(G)
    g0 = standard_subgroup(g, G0)
    f, mp, name = natural_map(g, g0)
    mp.setflags(write=False)
    return g, g0, f, mp, name


def _desc(sub) -> str:
    return sub.descriptor if isinstance(sub, SubGroup) else f"<{len(sub)}>"


def quintuple_data_equal(q1: GoursatQuintuple, q2: GoursatQuintuple, f1=None, f2=None) -> bool:
    """Compare quintuple data after applying automorphisms f1, f2 of the ambient groups to q1.

    This is a sufficient test for conjugacy when f1 and f2 are inner.
    """
    c1 = build_goursat(q1)
    c2 = build_goursat(q2)
    if c1.g1.descriptor != c2.g1.descriptor or c1.g2.descriptor != c2.g2.descriptor:
        return False
    a, b = c1.a, c1.b
    if f1 is not None:
        a = apply_automorphism(f1, c1.g1)[a]
    if f2 is not None:
        b = apply_automorphism(f2, c1.g2)[b]
    moved = PairSubgroup(c1.g1, c1.g2, a, b)
    return moved.same_elements(c2)
