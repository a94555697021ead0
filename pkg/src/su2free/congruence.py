"""Integer equations behind the freeness criteria.

Everything here is exact integer arithmetic: linear Diophantine equations,
the congruence x = -r x (mod n), equality of two rational cosines, the
mod-3 residue lemma for cos(2 pi x / 3n), and the congruence system of the
simple groups C(p, r, s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "SolutionLattice",
    "CosEqualityFamily",
    "ext_gcd",
    "solve_linear",
    "neg_congruence",
    "cos_equality_lattice",
    "res_solvable",
    "simple_system_trivial_only",
    "is_prime",
]


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with a*u + b*v = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class SolutionLattice:
    """Affine lattice base + Z*steps[0] + Z*steps[1] + ..."""

    base: tuple[int, int]
    steps: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def contains(self, x: int, y: int) -> bool:
        dx, dy = x - self.base[0], y - self.base[1]
        if not self.steps:
            return dx == 0 and dy == 0
        if len(self.steps) > 1:
            raise NotImplementedError("membership is implemented for rank-one lattices")
        sx, sy = self.steps[0]
        # (dx, dy) = t * (sx, sy) for an integer t
        if sx == 0:
            return dx == 0 and (sy != 0 and dy % sy == 0)
        if dx % sx:
            return False
        return dy == (dx // sx) * sy

    def point(self, t: int) -> tuple[int, int]:
        sx, sy = self.steps[0]
        return self.base[0] + t * sx, self.base[1] + t * sy


def solve_linear(a: int, b: int, c: int) -> SolutionLattice | None:
    """All integer solutions of a*x + b*y = c, or None when gcd(a, b) does not divide c.

    The step is (b/g, -a/g); the particular solution has 0 <= x < |b/g|.
    """
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    g, u, v = ext_gcd(a, b)
    if c % g:
        return None
    sx, sy = b // g, -a // g
    x0 = (u * (c // g)) % abs(sx)
    y0 = (c - a * x0) // b
    return SolutionLattice((x0, y0), ((sx, sy),))


def neg_congruence(n: int, r: int) -> int:
    """Modulus n1 with {x : x = -r x (mod n)} = n1 Z; n1 = n / gcd(1 + r, n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if math.gcd(r, n) != 1:
        raise ValueError(f"r={r} is not a unit mod {n}")
    return n // math.gcd(1 + r, n)


@dataclass(frozen=True)
class CosEqualityFamily:
    """Solutions of cos(2 pi x/n) = cos(2 pi y/m): (n q + eps l n1, l m1), eps = +-1."""

    n: int
    m: int
    k: int
    n1: int
    m1: int

    def contains(self, x: int, y: int) -> bool:
        if y % self.m1:
            return False
        l = y // self.m1
        return (x - l * self.n1) % self.n == 0 or (x + l * self.n1) % self.n == 0

    def member(self, q: int, eps: int, l: int) -> tuple[int, int]:
        return self.n * q + eps * l * self.n1, l * self.m1

    def residues(self) -> set[tuple[int, int]]:
        """The family reduced to Z_n x Z_m."""
        out = set()
        for l in range(self.k):
            for eps in (1, -1):
                x, y = self.member(0, eps, l)
                out.add((x % self.n, y % self.m))
        return out


def cos_equality_lattice(n: int, m: int) -> CosEqualityFamily:
    if n < 2 or m < 2:
        raise ValueError("n and m must be at least 2")
    k = math.gcd(n, m)
    return CosEqualityFamily(n, m, k, n // k, m // k)


def res_solvable(n: int, residue: int, target) -> bool:
    """Whether cos(2 pi x / 3n) = target has a solution x = residue (mod 3).

    ``target`` is 1/2 or -1/2 (any value comparing equal to +-0.5).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    residue %= 3
    if residue not in (1, 2):
        raise ValueError("residue must be 1 or 2 mod 3")
    if target == 0.5:
        shifts = (2, -2) if residue == 1 else (4, -4)
        return any((n + s) % 6 == 0 for s in shifts)
    if target == -0.5:
        shifts = (1, -1) if residue == 1 else (2, -2)
        return any((n + s) % 3 == 0 for s in shifts)
    raise ValueError("target must be 1/2 or -1/2")


def simple_system_trivial_only(p: int, r: int, s: int) -> bool:
    """Whether (1 -+ r) x = 0 and r x = +-s x (mod p) force x = 0 for every sign pattern."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r % p == 0 or s % p == 0:
        raise ValueError("r and s must be units mod p")
    for e1 in (1, -1):
        for e2 in (1, -1):
            # over a field a nonzero coefficient forces x = 0
            if (1 - e1 * r) % p == 0 and (r - e2 * s) % p == 0:
                return False
    return True
