"""Concrete groups for family members, fed to the freeness oracle."""

from __future__ import annotations

import functools

from ..freeness import ProductGroup3, SemiSplittable, Simple, Splittable
from ..goursat import GoursatQuintuple, PairSubgroup, build_goursat, quintuple_from_descriptors
from ..groups import all_automorphisms, build_group
from .families import FamilySpec, row_of

__all__ = ["materialize", "quintuple_of", "pair_subgroup", "splittable_factors"]


def quintuple_of(spec: FamilySpec) -> GoursatQuintuple:
    """The quintuple of the pair subgroup C of a semi-splittable family member."""
    row = row_of(spec)
    p = spec.p
    A, A0, B, B0 = row.quad(p)
    theta = row.theta(p)
    if isinstance(theta, int):
        q = quintuple_from_descriptors(A, A0, B, B0, "id")
        q.theta = all_automorphisms(q.F)[theta]
        q.label = q.label.replace(",id)", f",aut#{theta})")
        return q
    return quintuple_from_descriptors(A, A0, B, B0, theta)


@functools.lru_cache(maxsize=256)
def pair_subgroup(spec: FamilySpec) -> PairSubgroup:
    """C for a family member; pass a FamilySpec without D so the cache is shared across D."""
    return build_goursat(quintuple_of(spec))


def splittable_factors(spec: FamilySpec) -> tuple[str, str, str]:
    p = spec.p
    if "factors" in p:
        return tuple(p["factors"])
    row = spec.row
    parts = [s.strip() for s in row.split(" x ")]
    out = []
    for part in parts:
        if part.endswith("(n)"):
            out.append(part[:-3] + f"({p['n']})")
        elif part.endswith("(m)"):
            out.append(part[:-3] + f"({p['m']})")
        elif part.endswith("(l)"):
            out.append(part[:-3] + f"({p['l']})")
        else:
            out.append(part)
    return tuple(out)


def materialize(spec: FamilySpec) -> ProductGroup3:
    p = spec.p
    if spec.theorem == "simple":
        return Simple(p["p"], p["r"], p["s"])
    if spec.theorem == "main":
        return Splittable(*(build_group(d) for d in splittable_factors(spec)))
    c = pair_subgroup(spec.without_D())
    return SemiSplittable(3, c, build_group(p["D"]))
