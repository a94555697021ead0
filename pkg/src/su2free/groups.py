"""ADE subgroups of SU(2), their subgroups, quotients and automorphisms.

Every group is a finite set of integer indices with vectorized ``mul`` and
``inv``; index 0 is always the identity.  Elements of groups inside SU(2)
carry exact quaternions and an integer real-part id from a global interner,
so equal real parts get equal ids across all groups.
"""

from __future__ import annotations

import functools
import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .exact import HALF, ONE, ZERO, RealPart, SurdValue, realpart_key
from .quaternions import (
    AngleQ,
    SurdQ,
    UnitQuaternion,
    parse_element,
    qinv,
    qmul,
    qre,
    surd_identity,
)

__all__ = [
    "AdeKind",
    "FiniteGroup",
    "CyclicGroup",
    "DicyclicGroup",
    "DihedralGroup",
    "TableGroup",
    "SubGroup",
    "QuotientGroup",
    "GroupError",
    "parse_kind",
    "build_group",
    "real_part_set",
    "realpart_id",
    "realpart_value",
    "ONE_ID",
    "closure",
    "conjugacy_classes",
    "normal_subgroups",
    "quotient",
    "identify",
    "model_group",
    "natural_map",
    "standard_subgroup",
    "apply_automorphism",
    "parse_automorphism",
    "find_isomorphism",
    "all_automorphisms",
    "is_homomorphism",
    "element_orders",
    "Power",
    "Affine",
    "InnerBy",
    "Outer2T",
    "Outer2O",
    "Outer2I",
    "GeneratorImages",
    "Compose",
]


class GroupError(ValueError):
    """Invalid group descriptor, subgroup or automorphism."""


# ---------------------------------------------------------------- real parts

_RP_IDS: dict = {}
_RP_VALUES: list = []


def realpart_id(rp: RealPart) -> int:
    key = realpart_key(rp)
    i = _RP_IDS.get(key)
    if i is None:
        i = len(_RP_VALUES)
        _RP_IDS[key] = i
        _RP_VALUES.append(key)
    return i


def realpart_value(i: int) -> RealPart:
    return _RP_VALUES[i]


ONE_ID = realpart_id(ONE)


# ---------------------------------------------------------------- kinds


@dataclass(frozen=True)
class AdeKind:
    """One of Z(n), BD(n) (order 4n), 2T, 2O, 2I."""

    family: str
    n: int = 0

    @property
    def order(self) -> int:
        return {"Z": self.n, "BD": 4 * self.n, "2T": 24, "2O": 48, "2I": 120}[self.family]

    def __str__(self):
        return f"{self.family}({self.n})" if self.family in ("Z", "BD") else self.family


_KIND_RE = re.compile(r"\s*(Z|BD)\s*\(\s*(\d+)\s*\)\s*|\s*(2T|2O|2I)\s*")


def parse_kind(text: str) -> AdeKind:
    m = _KIND_RE.fullmatch(text)
    if not m:
        raise GroupError(f"unknown group descriptor {text!r}")
    if m.group(3):
        return AdeKind(m.group(3))
    fam, n = m.group(1), int(m.group(2))
    if fam == "Z" and n < 1:
        raise GroupError("Z(n) needs n >= 1")
    if fam == "BD" and n < 2:
        raise GroupError("BD(n) needs n >= 2")
    return AdeKind(fam, n)


# ---------------------------------------------------------------- base class


class FiniteGroup:
    """A finite group on indices 0..order-1 with identity 0."""

    order: int
    descriptor: str

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def element(self, i: int):
        raise NotImplementedError

    def label(self, i: int) -> str:
        return str(self.element(i))

    def index_of(self, elem) -> int:
        raise NotImplementedError

    def generators(self) -> list[int]:
        return _greedy_generators(self)

    @property
    def in_su2(self) -> bool:
        return False

    @functools.cached_property
    def rp_ids(self) -> np.ndarray:
        if not self.in_su2:
            raise GroupError(f"{self.descriptor} is not a subgroup of SU(2)")
        return np.array([realpart_id(qre(self.element(i))) for i in range(self.order)], dtype=np.int64)

    @functools.cached_property
    def all(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def table(self) -> np.ndarray:
        t = getattr(self, "_table", None)
        if t is None:
            a = self.all
            t = np.asarray(self.mul(a[:, None], a[None, :]), dtype=np.int64)
            self._table = t
        return t

    def power(self, a, r: int):
        a = np.asarray(a, dtype=np.int64)
        if r < 0:
            a = self.inv(a)
            r = -r
        result = np.zeros_like(a)
        base = a
        while r:
            if r & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            r >>= 1
        return result

    def is_abelian(self) -> bool:
        g = np.asarray(self.generators(), dtype=np.int64)
        return bool(np.all(self.mul(g[:, None], g[None, :]) == self.mul(g[None, :], g[:, None])))

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor} order={self.order}>"


class CyclicGroup(FiniteGroup):
    """Z(n) = {e(x/n)}, index x."""

    def __init__(self, n: int):
        if n < 1:
            raise GroupError("Z(n) needs n >= 1")
        self.n = n
        self.order = n
        self.kind = AdeKind("Z", n)
        self.descriptor = str(self.kind)

    @property
    def in_su2(self):
        return True

    def mul(self, a, b):
        return (np.asarray(a) + np.asarray(b)) % self.n

    def inv(self, a):
        return (-np.asarray(a)) % self.n

    def element(self, i):
        return AngleQ(0, Fraction(int(i), self.n))

    def index_of(self, elem) -> int:
        if isinstance(elem, AngleQ) and elem.jexp == 0:
            x = elem.theta * self.n
            if x.denominator == 1:
                return int(x) % self.n
        raise GroupError(f"{elem} is not in {self.descriptor}")

    def generators(self):
        return [1 % self.n] if self.n > 1 else []

    @functools.cached_property
    def rp_ids(self):
        return np.array([realpart_id(qre(AngleQ(0, Fraction(x, self.n)))) for x in range(self.n)],
                        dtype=np.int64)


class DicyclicGroup(FiniteGroup):
    """BD(n) = {e(x/2n)} u j{e(x/2n)}, index e*2n + x, order 4n.

    t = e(1/2n) is index 1 and s = j*t is index 2n + 1.
    """

    def __init__(self, n: int):
        if n < 1:
            raise GroupError("BD(n) needs n >= 1")
        self.n = n
        self.m = 2 * n
        self.order = 4 * n
        self.kind = AdeKind("BD", n) if n >= 2 else None
        self.descriptor = f"BD({n})"

    @property
    def in_su2(self):
        return True

    def split(self, a):
        a = np.asarray(a)
        return a // self.m, a % self.m

    def mul(self, a, b):
        e1, x1 = self.split(a)
        e2, x2 = self.split(b)
        sign = 1 - 2 * e2
        x = (sign * x1 + x2 + self.n * (e1 & e2)) % self.m
        return (e1 ^ e2) * self.m + x

    def inv(self, a):
        e, x = self.split(a)
        return np.where(e == 1, self.m + (x + self.n) % self.m, (-x) % self.m)

    def element(self, i):
        e, x = divmod(int(i), self.m)
        return AngleQ(e, Fraction(x, self.m))

    def index_of(self, elem) -> int:
        if isinstance(elem, AngleQ):
            x = elem.theta * self.m
            if x.denominator == 1:
                return elem.jexp * self.m + int(x) % self.m
        raise GroupError(f"{elem} is not in {self.descriptor}")

    def generators(self):
        return [1, self.m]

    @functools.cached_property
    def rp_ids(self):
        zero = realpart_id(ZERO)
        rot = [realpart_id(qre(AngleQ(0, Fraction(x, self.m)))) for x in range(self.m)]
        return np.array(rot + [zero] * self.m, dtype=np.int64)


class DihedralGroup(FiniteGroup):
    """Abstract dihedral group D(l) of order 2l: index e*l + p for x^e y^p."""

    def __init__(self, l: int):
        if l < 1:
            raise GroupError("D(l) needs l >= 1")
        self.l = l
        self.order = 2 * l
        self.descriptor = f"D({l})"

    def mul(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        e1, p1 = a // self.l, a % self.l
        e2, p2 = b // self.l, b % self.l
        sign = 1 - 2 * e2
        return (e1 ^ e2) * self.l + (sign * p1 + p2) % self.l

    def inv(self, a):
        a = np.asarray(a)
        e, p = a // self.l, a % self.l
        return np.where(e == 1, a, (-p) % self.l)

    def element(self, i):
        e, p = divmod(int(i), self.l)
        return ("x*" if e else "") + f"y^{p}"

    def index_of(self, elem) -> int:
        m = re.fullmatch(r"(x\*)?y\^(\d+)", str(elem).strip())
        if not m:
            raise GroupError(f"{elem} is not an element of {self.descriptor}")
        return (self.l if m.group(1) else 0) + int(m.group(2)) % self.l

    def generators(self):
        return [1 % self.l, self.l] if self.l > 1 else [self.l]


def _surd_sort_cmp(p: SurdQ, q: SurdQ) -> int:
    for a, b in zip(p.coords, q.coords):
        if a != b:
            return -1 if a < b else 1
    return 0


class TableGroup(FiniteGroup):
    """Group of surd quaternions with an explicit Cayley table.

    Elements are ordered with the identity first and the rest in
    lexicographic order of their (w, x, y, z) coordinates as real numbers.
    """

    def __init__(self, descriptor: str, gens: Sequence[SurdQ], kind: AdeKind | None = None):
        self.descriptor = descriptor
        self.kind = kind
        elems, table = _close_surd(list(gens))
        ident = surd_identity()
        rest = sorted((e for e in elems if e != ident), key=functools.cmp_to_key(_surd_sort_cmp))
        ordered = [ident] + rest
        pos = {e: i for i, e in enumerate(elems)}
        perm = np.array([pos[e] for e in ordered], dtype=np.int64)  # new -> old
        inv_perm = np.empty_like(perm)
        inv_perm[perm] = np.arange(len(perm))
        self._elements = ordered
        self._index = {e: i for i, e in enumerate(ordered)}
        self._table = inv_perm[table[np.ix_(perm, perm)]]
        self.order = len(ordered)
        self._inv = np.argmin(self._table, axis=1).astype(np.int64)
        self._gens = [self._index[g] for g in gens]

    @property
    def in_su2(self):
        return True

    def mul(self, a, b):
        return self._table[a, b]

    def inv(self, a):
        return self._inv[a]

    def element(self, i):
        return self._elements[int(i)]

    def index_of(self, elem) -> int:
        if isinstance(elem, str):
            elem = parse_element(elem)
        try:
            return self._index[elem]
        except (KeyError, TypeError):
            raise GroupError(f"{elem} is not in {self.descriptor}") from None

    def generators(self):
        return list(self._gens)

    def table(self):
        return self._table


def _close_surd(gens: list[SurdQ]):
    """Closure of surd generators by BFS, with the Cayley table.

    Only left multiplication by generators is computed exactly; other rows
    follow from L_{s*g} = L_s o L_g.
    """
    ident = surd_identity()
    elems = [ident]
    index = {ident: 0}
    word = [None]  # (generator position, earlier element) with elem = gen * earlier
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for gi, g in enumerate(gens):
                p = qmul(g, elems[i])
                if p not in index:
                    index[p] = len(elems)
                    elems.append(p)
                    word.append((gi, i))
                    nxt.append(index[p])
        frontier = nxt
    n = len(elems)
    left = np.empty((len(gens), n), dtype=np.int64)
    for gi, g in enumerate(gens):
        for i, e in enumerate(elems):
            left[gi, i] = index[qmul(g, e)]
    table = np.empty((n, n), dtype=np.int64)
    table[0] = np.arange(n)
    for i in range(1, n):
        gi, j = word[i]
        table[i] = left[gi][table[j]]
    return elems, table


class SubGroup(FiniteGroup):
    """Subgroup of ``parent`` given by sorted parent indices (identity first)."""

    def __init__(self, parent: FiniteGroup, members, descriptor: str | None = None):
        members = np.unique(np.asarray(members, dtype=np.int64))
        if members.size == 0 or members[0] != 0:
            raise GroupError("a subgroup must contain the identity")
        self.parent = parent
        self.members = members
        self.order = int(members.size)
        self._pos = np.full(parent.order, -1, dtype=np.int64)
        self._pos[members] = np.arange(self.order)
        self.descriptor = descriptor or f"<{self.order} in {parent.descriptor}>"
        self.kind = parse_kind(descriptor) if descriptor and _KIND_RE.fullmatch(descriptor) else None

    @property
    def in_su2(self):
        return self.parent.in_su2

    def mul(self, a, b):
        r = self._pos[self.parent.mul(self.members[a], self.members[b])]
        if np.any(np.asarray(r) < 0):
            raise GroupError("subset is not closed under multiplication")
        return r

    def inv(self, a):
        return self._pos[self.parent.inv(self.members[a])]

    def element(self, i):
        return self.parent.element(self.members[int(i)])

    def label(self, i):
        return self.parent.label(self.members[int(i)])

    def index_of(self, elem) -> int:
        p = self.parent.index_of(elem)
        i = int(self._pos[p])
        if i < 0:
            raise GroupError(f"{elem} is not in {self.descriptor}")
        return i

    @functools.cached_property
    def rp_ids(self):
        return self.parent.rp_ids[self.members]


class QuotientGroup(FiniteGroup):
    """Coset group G/N; coset labels are canonical representatives (smallest index)."""

    def __init__(self, parent: FiniteGroup, normal):
        normal = np.unique(np.asarray(normal, dtype=np.int64))
        if not is_normal(parent, normal):
            raise GroupError("quotient by a non-normal subgroup")
        self.parent = parent
        self.normal = normal
        cos = np.full(parent.order, -1, dtype=np.int64)
        reps = []
        for g in range(parent.order):
            if cos[g] >= 0:
                continue
            coset = parent.mul(g, normal)
            cos[coset] = len(reps)
            reps.append(g)
        self.coset_of = cos
        self.reps = np.array(reps, dtype=np.int64)
        self.order = len(reps)
        self.descriptor = f"{parent.descriptor}/<{normal.size}>"

    def mul(self, a, b):
        return self.coset_of[self.parent.mul(self.reps[a], self.reps[b])]

    def inv(self, a):
        return self.coset_of[self.parent.inv(self.reps[a])]

    def element(self, i):
        return self.parent.element(self.reps[int(i)])

    def label(self, i):
        return "[" + self.parent.label(self.reps[int(i)]) + "]"

    def index_of(self, elem) -> int:
        return int(self.coset_of[self.parent.index_of(elem)])

    def generators(self):
        g = sorted(set(int(x) for x in self.coset_of[self.parent.generators()]) - {0})
        return g


# ---------------------------------------------------------------- catalog


def _phi_half():
    # (phi/2, 1/(2 phi)) = ((1+sqrt5)/4, (sqrt5-1)/4)
    return SurdValue(Fraction(1, 4), 0, Fraction(1, 4)), SurdValue(Fraction(-1, 4), 0, Fraction(1, 4))


S_GEN = SurdQ(HALF, HALF, HALF, HALF)                    # (1+i)(1+j)/2
T_GEN_2T = SurdQ(HALF, HALF, HALF, -HALF)                # (1+j)(1+i)/2
T_GEN_2O = SurdQ(SurdValue(0, HALF), SurdValue(0, HALF), ZERO, ZERO)   # (1+i)/sqrt2
_PH, _PHI_INV_H = _phi_half()
T_GEN_2I = SurdQ(_PH, _PHI_INV_H, HALF, ZERO)            # (phi + phi^-1 i + j)/2


@functools.lru_cache(maxsize=None)
def build_group(kind) -> FiniteGroup:
    """Construct an ADE group from an AdeKind or descriptor string."""
    if isinstance(kind, str):
        kind = parse_kind(kind)
    if kind.family == "Z":
        return CyclicGroup(kind.n)
    if kind.family == "BD":
        if kind.n < 2:
            raise GroupError("BD(n) needs n >= 2")
        return DicyclicGroup(kind.n)
    gens = {"2T": [S_GEN, T_GEN_2T], "2O": [S_GEN, T_GEN_2O], "2I": [S_GEN, T_GEN_2I]}[kind.family]
    return TableGroup(kind.family, gens, kind)


def real_part_set(g: FiniteGroup) -> set:
    """Deduplicated canonical real parts of the elements of ``g``."""
    return {realpart_value(int(i)) for i in np.unique(g.rp_ids)}


# ---------------------------------------------------------------- structure


def closure(g: FiniteGroup, gens) -> np.ndarray:
    """Sorted indices of the subgroup generated by ``gens``."""
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    frontier = np.array([0], dtype=np.int64)
    if gens.size == 0:
        return np.array([0], dtype=np.int64)
    while frontier.size:
        new = np.asarray(g.mul(frontier[:, None], gens[None, :])).ravel()
        new = np.unique(new[~mask[new]])
        mask[new] = True
        frontier = new
    return np.flatnonzero(mask).astype(np.int64)


def _greedy_generators(g: FiniteGroup) -> list[int]:
    gens: list[int] = []
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    for x in range(g.order):
        if not mask[x]:
            gens.append(x)
            mask[:] = False
            mask[closure(g, gens)] = True
    return gens


def element_orders(g: FiniteGroup) -> np.ndarray:
    orders = np.ones(g.order, dtype=np.int64)
    cur = g.all.copy()
    k = 1
    done = cur == 0
    while not done.all():
        cur = g.mul(cur, g.all)
        k += 1
        hit = (cur == 0) & ~done
        orders[hit] = k
        done |= hit
    orders[0] = 1
    return orders


def is_normal(g: FiniteGroup, members) -> bool:
    members = np.asarray(members, dtype=np.int64)
    mask = np.zeros(g.order, dtype=bool)
    mask[members] = True
    for s in g.generators():
        conj = g.mul(g.mul(s, members), g.inv(s))
        if not mask[conj].all():
            return False
    return True


def conjugacy_class_labels(g: FiniteGroup) -> np.ndarray:
    """Class label per element (label = smallest index in the class)."""
    lab = np.full(g.order, -1, dtype=np.int64)
    allg = g.all
    ginv = g.inv(allg)
    for x in range(g.order):
        if lab[x] >= 0:
            continue
        orbit = np.unique(g.mul(g.mul(allg, x), ginv))
        lab[orbit] = x
    return lab


def conjugacy_classes(g: FiniteGroup) -> list[tuple[int, int, RealPart]]:
    """List of (representative index, size, real part) ordered by representative."""
    lab = conjugacy_class_labels(g)
    reps, counts = np.unique(lab, return_counts=True)
    out = []
    for r, c in zip(reps, counts):
        rp = realpart_value(int(g.rp_ids[r])) if g.in_su2 else None
        out.append((int(r), int(c), rp))
    return out


def normal_subgroups(g: FiniteGroup) -> list[tuple[SubGroup, str]]:
    """All normal subgroups with the isomorphism type of the quotient.

    Normal closures of conjugacy classes generate the lattice under joins.
    """
    if g.order > 10**4:
        raise GroupError("normal subgroup search is limited to order 10^4")
    lab = conjugacy_class_labels(g)
    classes = [np.flatnonzero(lab == r) for r in np.unique(lab)]
    found: dict[bytes, np.ndarray] = {}
    basic = []
    for cl in classes:
        h = closure(g, cl)
        key = h.tobytes()
        if key not in found:
            found[key] = h
            basic.append(h)
    queue = list(found.values())
    while queue:
        h = queue.pop()
        for b in basic:
            j = closure(g, np.concatenate([h, b]))
            key = j.tobytes()
            if key not in found:
                found[key] = j
                queue.append(j)
    subs = sorted(found.values(), key=lambda a: (a.size, a.tolist()))
    out = []
    for h in subs:
        sub = SubGroup(g, h)
        out.append((sub, identify(quotient(g, sub)[0])))
    return out


def quotient(g: FiniteGroup, n) -> tuple[QuotientGroup, np.ndarray]:
    """Coset group and the projection (array of coset indices)."""
    members = n.members if isinstance(n, SubGroup) else np.asarray(n, dtype=np.int64)
    q = QuotientGroup(g, members)
    return q, q.coset_of


def _order_profile(g: FiniteGroup):
    return tuple(sorted(Counter(element_orders(g).tolist()).items()))


@functools.lru_cache(maxsize=None)
def _model_profile(name: str):
    return _order_profile(model_group(name))


def _candidate_names(order: int) -> list[str]:
    names = [f"Z({order})"]
    if order % 2 == 0 and order >= 4:
        names.append(f"D({order // 2})")
    if order % 4 == 0 and order >= 8:
        names.append(f"BD({order // 4})")
    names += {12: ["T"], 24: ["O", "2T"], 48: ["2O"], 60: ["I"], 120: ["2I"]}.get(order, [])
    return names


def identify(g: FiniteGroup) -> str:
    """Name of a standard model isomorphic to ``g``: Z(l), D(l), BD(l), T, O, I, 2T, 2O, 2I."""
    prof = None
    for name in _candidate_names(g.order):
        if g.order > 240:
            # large candidates: cheap invariants only
            if name.startswith("Z(") and _is_cyclic(g):
                return name
            continue
        if prof is None:
            prof = _order_profile(g)
        if prof == _model_profile(name) and (g.order > 120 or find_isomorphism(g, model_group(name)) is not None):
            return name
    return f"order-{g.order}"


def _is_cyclic(g: FiniteGroup) -> bool:
    return bool((element_orders(g) == g.order).any())


@functools.lru_cache(maxsize=None)
def model_group(name: str) -> FiniteGroup:
    """Canonical model group for an isomorphism-type name."""
    m = re.fullmatch(r"(Z|D|BD)\((\d+)\)", name)
    if m:
        fam, n = m.group(1), int(m.group(2))
        if fam == "Z":
            return CyclicGroup(n)
        if fam == "D":
            return DihedralGroup(n)
        return DicyclicGroup(n)
    if name in ("2T", "2O", "2I"):
        return build_group(name)
    if name in ("T", "O", "I"):
        big = build_group("2" + name)
        q = QuotientGroup(big, [0, big.index_of(_minus_one())])
        q.descriptor = name
        return q
    raise GroupError(f"unknown model {name!r}")


def _minus_one():
    return SurdQ(-ONE, ZERO, ZERO, ZERO)


# ---------------------------------------------------------------- homomorphisms


def is_homomorphism(src: FiniteGroup, dst: FiniteGroup, f: np.ndarray, gens=None) -> bool:
    """Check f(x s) = f(x) f(s) for all x and all s in a generating set."""
    f = np.asarray(f, dtype=np.int64)
    if f[0] != 0:
        return False
    gens = src.generators() if gens is None else gens
    allx = src.all
    for s in gens:
        if not np.array_equal(f[src.mul(allx, s)], dst.mul(f[allx], f[s])):
            return False
    return True


def _extend(src: FiniteGroup, dst: FiniteGroup, gens: Sequence[int], images: Sequence[int]):
    """Extend generator images to a map on all of ``src`` or return None on conflict."""
    f = np.full(src.order, -1, dtype=np.int64)
    f[0] = 0
    frontier = np.array([0], dtype=np.int64)
    gens = np.asarray(gens, dtype=np.int64)
    images = np.asarray(images, dtype=np.int64)
    while frontier.size:
        prod = np.asarray(src.mul(frontier[:, None], gens[None, :]))
        img = np.asarray(dst.mul(f[frontier][:, None], images[None, :]))
        prod, img = prod.ravel(), img.ravel()
        known = f[prod] >= 0
        if np.any(f[prod[known]] != img[known]):
            return None
        new_p, first = np.unique(prod[~known], return_index=True)
        new_i = img[~known][first]
        # the same new element reached twice must agree
        chk = img[~known]
        if np.any(chk != new_i[np.searchsorted(new_p, prod[~known])]):
            return None
        f[new_p] = new_i
        frontier = new_p
    if np.any(f < 0):
        return None
    return f


def find_isomorphism(src: FiniteGroup, dst: FiniteGroup, first: bool = True):
    """An isomorphism src -> dst as an index array, or None.  Deterministic."""
    isos = _isomorphisms(src, dst, first)
    return isos[0] if isos else None


def all_automorphisms(g: FiniteGroup) -> list[np.ndarray]:
    return _isomorphisms(g, g, False)


def _isomorphisms(src, dst, first):
    if src.order != dst.order:
        return []
    if src.order == 1:
        return [np.zeros(1, dtype=np.int64)]
    gens = _small_generating_set(src)
    so, do = element_orders(src), element_orders(dst)
    if sorted(so.tolist()) != sorted(do.tolist()):
        return []
    cands = [np.flatnonzero(do == so[s]) for s in gens]
    out = []
    for imgs in itertools.product(*cands):
        f = _extend(src, dst, gens, imgs)
        if f is None or np.unique(f).size != src.order:
            continue
        if is_homomorphism(src, dst, f, gens):
            out.append(f)
            if first:
                break
    return out


def _small_generating_set(g: FiniteGroup) -> list[int]:
    orders = element_orders(g)
    cyc = np.flatnonzero(orders == g.order)
    if cyc.size:
        return [int(cyc[0])]
    # two generators suffice for every group handled here; prefer high orders
    cand = sorted(range(1, g.order), key=lambda x: (-orders[x], x))
    for a in cand:
        for b in cand:
            if b <= a and orders[b] == orders[a]:
                continue
            if closure(g, [a, b]).size == g.order:
                return [a, b]
    return _greedy_generators(g)


# ---------------------------------------------------------------- standard subgroups and maps


def _surd_elements_where(g: TableGroup, pred) -> np.ndarray:
    return np.array([i for i in range(g.order) if pred(g.element(i))], dtype=np.int64)


def standard_subgroup(g: FiniteGroup, desc: str) -> SubGroup:
    """The standard copy of the ADE group ``desc`` inside ``g``."""
    desc = desc.strip()
    if desc in ("Z(1)", "1", "{1}"):
        return SubGroup(g, [0], "Z(1)")
    if desc == g.descriptor:
        return SubGroup(g, g.all, desc)
    k = parse_kind(desc) if _KIND_RE.fullmatch(desc) else None
    if k is None:
        raise GroupError(f"unknown subgroup descriptor {desc!r}")
    if isinstance(g, CyclicGroup) and k.family == "Z" and g.n % k.n == 0:
        return SubGroup(g, np.arange(0, g.n, g.n // k.n), desc)
    if isinstance(g, DicyclicGroup):
        if k.family == "Z" and g.m % k.n == 0:
            return SubGroup(g, np.arange(0, g.m, g.m // k.n), desc)
        if k.family == "BD" and g.n % k.n == 0:
            step = g.n // k.n
            rot = np.arange(0, g.m, step)
            return SubGroup(g, np.concatenate([rot, rot + g.m]), desc)
    if isinstance(g, TableGroup):
        if desc == "Z(2)":
            return SubGroup(g, [0, g.index_of(_minus_one())], desc)
        if desc == "BD(2)":
            return SubGroup(g, _surd_elements_where(
                g, lambda q: sum(1 for c in q.coords if not c.is_zero()) == 1), desc)
        if desc == "2T" and g.descriptor in ("2O", "2I"):
            return SubGroup(g, _surd_elements_where(g, lambda q: all(c.is_rational() for c in q.coords)), desc)
    raise GroupError(f"no standard subgroup {desc} in {g.descriptor}")


def natural_map(a: FiniteGroup, a0) -> tuple[FiniteGroup, np.ndarray, str]:
    """Surjection a -> F with kernel a0 onto a standard model F.

    Returns (F, map as index array, model name).  Closed forms are used for
    the cyclic and binary dihedral cases so the maps match the usual
    formulas; other cases use a deterministic isomorphism search.
    """
    members = a0.members if isinstance(a0, SubGroup) else np.asarray(a0, dtype=np.int64)
    members = np.unique(members)
    q, proj = quotient(a, members)
    name = identify(q)
    f = model_group(name) if not name.startswith("order-") else q
    mp = _closed_form_map(a, members, name)
    if mp is None and isinstance(f, QuotientGroup) and f.parent is a and np.array_equal(f.normal, members):
        mp = f.coset_of.copy()
    if mp is None:
        if f is q:
            mp = proj
        else:
            iso = find_isomorphism(q, f)
            if iso is None:
                raise GroupError("quotient identification failed")
            mp = iso[proj]
    if not is_homomorphism(a, f, mp) or np.flatnonzero(mp == 0).tolist() != members.tolist():
        raise GroupError("natural map check failed")
    return f, mp, name


def _closed_form_map(a, members, name):
    size = members.size
    if isinstance(a, CyclicGroup):
        l = a.n // size
        if name == f"Z({l})":
            return a.all % l
    if isinstance(a, DicyclicGroup):
        e, x = a.split(a.all)
        rot_only = bool((members < a.m).all())
        if rot_only:
            if size % 2 == 0:                     # Z(2k) -> D(l), l = n/k
                l = a.m // size
                if name == f"D({l})" or (l == 1 and name == "Z(2)"):
                    return e * l + x % l if l > 1 else e
            else:                                 # Z(odd) -> BD(l) or Z(4)
                l = a.m // (2 * size)
                if l >= 2 and name == f"BD({l})":
                    return e * 2 * l + x % (2 * l)
                if l == 1 and name == "Z(4)":
                    return (e + 2 * x) % 4
        elif size == a.order // 2 and name == "Z(2)":
            return x % 2                          # BD(k) standard inside BD(2k)
    if isinstance(a, TableGroup) and a.descriptor == "2T" and name == "Z(3)" and size == 8:
        s = a.index_of(S_GEN)
        s2 = int(a.mul(s, s))
        cos = np.zeros(a.order, dtype=np.int64)
        cos[a.mul(s2, members)] = 1
        cos[a.mul(s, members)] = 2
        return cos
    return None


# ---------------------------------------------------------------- automorphisms


@dataclass(frozen=True)
class Power:
    r: int

    def __str__(self):
        return f"pow({self.r})"


@dataclass(frozen=True)
class Affine:
    a: int
    b: int

    def __str__(self):
        return f"aff({self.a},{self.b})"


@dataclass(frozen=True)
class InnerBy:
    element: str

    def __str__(self):
        return f"inner({self.element})"


@dataclass(frozen=True)
class Outer2T:
    def __str__(self):
        return "out2T"


@dataclass(frozen=True)
class Outer2O:
    def __str__(self):
        return "out2O"


@dataclass(frozen=True)
class Outer2I:
    def __str__(self):
        return "out2I"


@dataclass(frozen=True)
class GeneratorImages:
    mapping: tuple[tuple[str, str], ...]

    def __str__(self):
        return "map(" + "; ".join(f"{a}->{b}" for a, b in self.mapping) + ")"


@dataclass(frozen=True)
class Compose:
    parts: tuple

    def __str__(self):
        return "∘".join(str(p) for p in self.parts)


def _split_top(s: str, seps: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in seps:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_automorphism(text: str):
    s = text.strip()
    parts = _split_top(s, "∘")
    if len(parts) > 1:
        return Compose(tuple(parse_automorphism(p) for p in parts))
    if s in ("out2T", "out2O", "out2I"):
        return {"out2T": Outer2T(), "out2O": Outer2O(), "out2I": Outer2I()}[s]
    if s in ("id", "ID"):
        return Power(1)
    m = re.fullmatch(r"pow\(\s*(-?\d+)\s*\)", s)
    if m:
        return Power(int(m.group(1)))
    m = re.fullmatch(r"aff\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", s)
    if m:
        return Affine(int(m.group(1)), int(m.group(2)))
    if s.startswith("inner(") and s.endswith(")"):
        return InnerBy(s[6:-1].strip())
    if s.startswith("map(") and s.endswith(")"):
        pairs = []
        for item in _split_top(s[4:-1], ";"):
            if not item.strip():
                continue
            a, sep, b = item.partition("->")
            if not sep:
                raise GroupError(f"bad generator image {item!r}")
            pairs.append((a.strip(), b.strip()))
        return GeneratorImages(tuple(pairs))
    raise GroupError(f"unknown automorphism {text!r}")


def _angle_to_surd(q: AngleQ) -> SurdQ:
    if (q.theta * 8).denominator != 1:
        raise GroupError(f"{q} has no coordinates in Q(sqrt2, sqrt5)")
    k = int(q.theta * 8) % 8
    r2 = SurdValue(0, HALF)
    cs = [(ONE, ZERO), (r2, r2), (ZERO, ONE), (-r2, r2), (-ONE, ZERO), (-r2, -r2), (ZERO, -ONE), (r2, -r2)]
    c, s = cs[k]
    if q.jexp == 0:
        return SurdQ(c, s, ZERO, ZERO)
    return SurdQ(ZERO, ZERO, c, -s)


def _as_surd(q) -> SurdQ:
    return q if isinstance(q, SurdQ) else _angle_to_surd(q)


def apply_automorphism(spec, g: FiniteGroup) -> np.ndarray:
    """Element permutation of ``g`` induced by ``spec``, verified bijective and multiplicative."""
    if isinstance(spec, str):
        spec = parse_automorphism(spec)
    f = _raw_automorphism(spec, g)
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (g.order,) or np.unique(f).size != g.order or not is_homomorphism(g, g, f):
        raise GroupError(f"{spec} is not an automorphism of {g.descriptor}")
    return f


def _raw_automorphism(spec, g: FiniteGroup) -> np.ndarray:
    if isinstance(spec, Compose):
        f = g.all.copy()
        for p in spec.parts:
            f = apply_automorphism(p, g)[f]
        return f
    if isinstance(g, QuotientGroup) and isinstance(spec, (InnerBy, Outer2T, Outer2O, Outer2I)):
        # induced on G/N from the automorphism of G
        fp = apply_automorphism(spec, g.parent)
        if not np.array_equal(np.sort(fp[g.normal]), g.normal):
            raise GroupError(f"{spec} does not preserve the normal subgroup")
        return g.coset_of[fp[g.reps]]
    if isinstance(spec, Power):
        if math.gcd(spec.r, _exponent(g)) != 1:
            raise GroupError(f"pow({spec.r}) needs r coprime to the group exponent")
        return g.power(g.all, spec.r)
    if isinstance(spec, Affine):
        if isinstance(g, DicyclicGroup):
            mod, base = g.m, g.m
        elif isinstance(g, DihedralGroup):
            mod, base = g.l, g.l
        else:
            raise GroupError("aff(a,b) applies to BD(n) and D(l) only")
        if math.gcd(spec.a, mod) != 1:
            raise GroupError(f"aff: a={spec.a} is not a unit mod {mod}")
        e, x = g.all // base, g.all % base
        if isinstance(g, DicyclicGroup):
            # t^p -> t^{ap}; s t^p -> s t^{ap+b} with s t^p = j e((p+1)/2n)
            img = np.where(e == 0, (spec.a * x) % mod, (spec.a * (x - 1) + spec.b + 1) % mod)
        else:
            img = np.where(e == 0, (spec.a * x) % mod, (spec.a * x + spec.b) % mod)
        return e * base + img
    if isinstance(spec, InnerBy):
        w = parse_element(spec.element) if not isinstance(g, DihedralGroup) else spec.element
        try:
            wi = g.index_of(w)
            return g.mul(g.mul(wi, g.all), g.inv(wi))
        except GroupError:
            pass
        ws = _as_surd(w)
        wsi = qinv(ws)
        lookup = {_as_surd(g.element(i)): i for i in range(g.order)}
        return np.array([lookup[qmul(qmul(ws, _as_surd(g.element(i))), wsi)] for i in range(g.order)],
                        dtype=np.int64)
    if isinstance(spec, Outer2T):
        if g.descriptor != "2T":
            raise GroupError("out2T applies to 2T")
        return _raw_automorphism(InnerBy("q(1/2*s2,0,1/2*s2,0)"), g)
    if isinstance(spec, Outer2O):
        if g.descriptor != "2O":
            raise GroupError("out2O applies to 2O")
        s, t = g.index_of(S_GEN), g.index_of(T_GEN_2O)
        minus = g.index_of(_minus_one())
        return _extend_or_fail(g, [s, t], [s, int(g.mul(minus, t))])
    if isinstance(spec, Outer2I):
        if g.descriptor != "2I":
            raise GroupError("out2I applies to 2I")
        s, t = g.index_of(S_GEN), g.index_of(T_GEN_2I)
        ph, phinv = _phi_half()
        img = SurdQ(-phinv, -ph, ZERO, HALF)
        return _extend_or_fail(g, [s, t], [s, g.index_of(img)])
    if isinstance(spec, GeneratorImages):
        src = [g.index_of(_parse_in(g, a)) for a, _ in spec.mapping]
        dst = [g.index_of(_parse_in(g, b)) for _, b in spec.mapping]
        if closure(g, src).size != g.order:
            raise GroupError("generator images: sources do not generate the group")
        return _extend_or_fail(g, src, dst)
    raise GroupError(f"unsupported automorphism {spec!r}")


def _parse_in(g, text):
    if isinstance(g, (DihedralGroup, QuotientGroup)):
        if isinstance(g, QuotientGroup):
            t = text.strip()
            if t.startswith("[") and t.endswith("]"):
                t = t[1:-1]
            return parse_element(t)
        return text
    return parse_element(text)


def _extend_or_fail(g, src, dst):
    f = _extend(g, g, src, dst)
    if f is None:
        raise GroupError("generator images do not define a homomorphism")
    return f


def _exponent(g: FiniteGroup) -> int:
    return functools.reduce(math.lcm, (int(o) for o in np.unique(element_orders(g))), 1)
