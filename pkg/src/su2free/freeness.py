"""Free actions of finite subgroups of SU(2)^3 on S^3 x S^3.

A subgroup G of SU(2)^3 acts on S^3 x S^3 by
(a1, a2, a3) . (p, q) = (a1 p a2^-1, a2 q a3^-1).  A point is fixed by a
nontrivial element exactly when Re(a1) = Re(a2) = Re(a3), so the action is
free iff no nontrivial triple has three equal real parts.  Since Re = 1
only at the identity quaternion, "nontrivial" can be read as "common real
part different from 1", which is what the kernels test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from . import kernels
from .exact import ONE
from .goursat import PairSubgroup
from .groups import ONE_ID, FiniteGroup, GroupError, real_part_set, realpart_id, realpart_value
from .quaternions import AngleQ, UnitQuaternion, qmul, qre
from .congruence import is_prime

__all__ = [
    "BudgetExceeded",
    "Splittable",
    "SemiSplittable",
    "Simple",
    "Explicit",
    "ProductGroup3",
    "is_free",
    "coincidence_set",
    "splittable_free_test",
    "format_witness",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """The group has more elements than the enumeration budget allows."""


@dataclass(frozen=True)
class Splittable:
    g1: FiniteGroup
    g2: FiniteGroup
    g3: FiniteGroup

    @property
    def order(self) -> int:
        return self.g1.order * self.g2.order * self.g3.order

    def __str__(self):
        return f"{self.g1.descriptor} x {self.g2.descriptor} x {self.g3.descriptor}"


@dataclass(frozen=True)
class SemiSplittable:
    """A pair subgroup in two factors and a single group in the remaining ``position`` (1, 2 or 3)."""

    position: int
    pair: PairSubgroup
    single: FiniteGroup

    def __post_init__(self):
        if self.position not in (1, 2, 3):
            raise ValueError("position must be 1, 2 or 3")

    @property
    def order(self) -> int:
        return self.pair.order * self.single.order

    def __str__(self):
        return f"({self.pair.provenance}) x {self.single.descriptor} @ {self.position}"


@dataclass(frozen=True)
class Simple:
    """C(p, r, s) = {(x, r x, s x) : x in Z_p}, written additively."""

    p: int
    r: int
    s: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.r % self.p == 0 or self.s % self.p == 0:
            raise ValueError("r and s must be units mod p")

    @property
    def order(self) -> int:
        return self.p

    def triple(self, x: int):
        p = self.p
        return tuple(AngleQ(0, Fraction(c * x % p, p)) for c in (1, self.r, self.s))

    def __str__(self):
        return f"C({self.p},{self.r},{self.s})"


@dataclass(frozen=True)
class Explicit:
    """A subgroup of SU(2)^3 listed element by element; closure is checked."""

    triples: tuple

    def __post_init__(self):
        trip = tuple(tuple(t) for t in self.triples)
        object.__setattr__(self, "triples", trip)
        seen = set(trip)
        if len(seen) != len(trip):
            raise GroupError("repeated triples")
        for a in trip:
            for b in trip:
                if tuple(qmul(x, y) for x, y in zip(a, b)) not in seen:
                    raise GroupError("triples are not closed under multiplication")

    @property
    def order(self) -> int:
        return len(self.triples)

    def __str__(self):
        return f"explicit({len(self.triples)})"


ProductGroup3 = Union[Splittable, SemiSplittable, Simple, Explicit]


def _check_budget(g, budget):
    if budget is not None and g.order > budget:
        raise BudgetExceeded(f"{g} has {g.order} elements, budget is {budget}")


def is_free(g: ProductGroup3, budget: int | None = DEFAULT_BUDGET):
    """Decide freeness; returns (free, witness) with witness a triple of unit quaternions or None."""
    _check_budget(g, budget)
    if isinstance(g, Splittable):
        groups = [g.g1, g.g2, g.g3]
        order = sorted(range(3), key=lambda t: groups[t].order)
        hit = kernels.scan_product(*(groups[t].rp_ids for t in order), ONE_ID)
        if hit[0] < 0:
            return True, None
        idx = [0, 0, 0]
        for pos, t in enumerate(order):
            idx[t] = hit[pos]
        return False, tuple(groups[t].element(idx[t]) for t in range(3))
    if isinstance(g, SemiSplittable):
        c = g.pair
        pa, pb = c.rp_pairs()
        i, k = kernels.scan_pairs(pa, pb, g.single.rp_ids, ONE_ID)
        if i < 0:
            return True, None
        a, b, d = c.g1.element(c.a[i]), c.g2.element(c.b[i]), g.single.element(k)
        return False, _place(g.position, (a, b), d)
    if isinstance(g, Simple):
        # all three angles have denominator p, so cosines agree iff the residues agree up to sign
        p = g.p
        for x in range(1, p):
            a, b, c = x, g.r * x % p, g.s * x % p
            ca, cb, cc = min(a, p - a), min(b, p - b), min(c, p - c)
            if ca == cb == cc:
                return False, g.triple(x)
        return True, None
    if isinstance(g, Explicit):
        ids = np.array([[realpart_id(qre(q)) for q in t] for t in g.triples], dtype=np.int64).reshape(-1, 3)
        i = kernels.scan_triples(ids[:, 0], ids[:, 1], ids[:, 2], ONE_ID)
        return (True, None) if i < 0 else (False, g.triples[i])
    raise TypeError(f"not a product group: {g!r}")


def _place(position, pair, single):
    a, b = pair
    if position == 1:
        return (single, a, b)
    if position == 2:
        return (a, single, b)
    return (a, b, single)


def coincidence_set(c: PairSubgroup) -> frozenset:
    """Real parts shared by the two coordinates of some element of ``c``."""
    pa, pb = c.rp_pairs()
    same = np.unique(pa[pa == pb])
    return frozenset(realpart_value(int(i)) for i in same)


def splittable_free_test(g1: FiniteGroup, g2: FiniteGroup, g3: FiniteGroup) -> bool:
    """Free iff the three real-part sets meet only in 1."""
    return real_part_set(g1) & real_part_set(g2) & real_part_set(g3) == {ONE}


def format_witness(w) -> str | None:
    if w is None:
        return None
    return "(" + ", ".join(str(q) for q in w) + ")"
