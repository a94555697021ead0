"""Exact numbers: rationals, the field Q(sqrt2, sqrt5) and canonical real parts.

A real part of a unit quaternion from an ADE group is either the cosine of a
rational number of turns, or an element of Q(sqrt2, sqrt5).  Both forms are
kept symbolic.  Equality between the two forms is decided through the finite
list of field elements that are cosines of rational turns.

Why the list is finite: cos(2*pi*a/q) with gcd(a, q) = 1 has degree
phi(q)/2 over Q (phi(q) = 2 when q = 1, 2).  An element of Q(sqrt2, sqrt5) has
degree 1, 2 or 4 and must generate a subfield of it.  The real cyclotomic
fields inside Q(sqrt2, sqrt5) are Q, Q(sqrt2) (q = 8) and Q(sqrt5)
(q = 5, 10), so q lies in {1, 2, 3, 4, 5, 6, 8, 10}.  Note q = 12 is
excluded since cos(pi/6) = sqrt3/2 is not in the field.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "SurdValue",
    "RatCos",
    "RealPart",
    "CosCondition",
    "surd_arith",
    "cos_turn",
    "realpart_equal",
    "realpart_key",
    "realpart_float",
    "realpart_str",
    "parse_surd",
    "parse_realpart",
    "rational_cos_table",
    "candidate_values",
    "to_fraction",
]


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and strings such as '3/4' to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, SurdValue) and x.is_rational():
        return x.c1
    raise TypeError(f"cannot interpret {x!r} as a rational")


def _normalize(n1: int, n2: int, n5: int, n10: int, d: int):
    if d < 0:
        n1, n2, n5, n10, d = -n1, -n2, -n5, -n10, -d
    g = math.gcd(math.gcd(math.gcd(n1, n2), math.gcd(n5, n10)), d)
    if g > 1:
        n1, n2, n5, n10, d = n1 // g, n2 // g, n5 // g, n10 // g, d // g
    return n1, n2, n5, n10, d


class SurdValue:
    """Element (n1 + n2*sqrt2 + n5*sqrt5 + n10*sqrt10) / d of Q(sqrt2, sqrt5).

    Stored with integer numerators over one positive common denominator in
    lowest terms, so the representation is unique and hashing is structural.
    The rational coefficients are exposed as ``c1, c2, c5, c10``.
    """

    __slots__ = ("_n", "_hash")

    def __init__(self, c1=0, c2=0, c5=0, c10=0):
        f = [to_fraction(c) for c in (c1, c2, c5, c10)]
        d = math.lcm(*(x.denominator for x in f))
        self._n = _normalize(*(x.numerator * (d // x.denominator) for x in f), d)
        self._hash = None

    @classmethod
    def _raw(cls, n1: int, n2: int, n5: int, n10: int, d: int) -> "SurdValue":
        obj = cls.__new__(cls)
        obj._n = _normalize(n1, n2, n5, n10, d)
        obj._hash = None
        return obj

    @classmethod
    def of(cls, x) -> "SurdValue":
        if isinstance(x, SurdValue):
            return x
        return cls(x)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        n1, n2, n5, n10, d = self._n
        return (Fraction(n1, d), Fraction(n2, d), Fraction(n5, d), Fraction(n10, d))

    c1 = property(lambda self: self.coefficients[0])
    c2 = property(lambda self: self.coefficients[1])
    c5 = property(lambda self: self.coefficients[2])
    c10 = property(lambda self: self.coefficients[3])

    def is_zero(self) -> bool:
        n1, n2, n5, n10, _ = self._n
        return n1 == 0 and n2 == 0 and n5 == 0 and n10 == 0

    def is_rational(self) -> bool:
        _, n2, n5, n10, _ = self._n
        return n2 == 0 and n5 == 0 and n10 == 0

    def __eq__(self, other):
        if isinstance(other, SurdValue):
            return self._n == other._n
        if isinstance(other, (int, Fraction)):
            return self._n == SurdValue(other)._n
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("surd",) + self._n)
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, a2, a5, a10, da = self._n
        b1, b2, b5, b10, db = other._n
        return SurdValue._raw(a1 * db + b1 * da, a2 * db + b2 * da,
                              a5 * db + b5 * da, a10 * db + b10 * da, da * db)

    __radd__ = __add__

    def __neg__(self):
        n1, n2, n5, n10, d = self._n
        return SurdValue._raw(-n1, -n2, -n5, -n10, d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, a2, a5, a10, da = self._n
        b1, b2, b5, b10, db = other._n
        c1 = a1 * b1 + 2 * a2 * b2 + 5 * a5 * b5 + 10 * a10 * b10
        c2 = a1 * b2 + a2 * b1 + 5 * (a5 * b10 + a10 * b5)
        c5 = a1 * b5 + a5 * b1 + 2 * (a2 * b10 + a10 * b2)
        c10 = a1 * b10 + a10 * b1 + a2 * b5 + a5 * b2
        return SurdValue._raw(c1, c2, c5, c10, da * db)

    __rmul__ = __mul__

    def conjugate(self, flip2: bool, flip5: bool) -> "SurdValue":
        """Galois conjugate sending sqrt2 -> -sqrt2 and/or sqrt5 -> -sqrt5."""
        n1, n2, n5, n10, d = self._n
        s2 = -1 if flip2 else 1
        s5 = -1 if flip5 else 1
        return SurdValue._raw(n1, s2 * n2, s5 * n5, s2 * s5 * n10, d)

    def inverse(self) -> "SurdValue":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt5)")
        others = self.conjugate(True, False) * self.conjugate(False, True) * self.conjugate(True, True)
        norm = self * others
        assert norm.is_rational()
        n1, _, _, _, d = norm._n
        return others * SurdValue(Fraction(d, n1))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __float__(self):
        n1, n2, n5, n10, d = self._n
        return (n1 + n2 * math.sqrt(2) + n5 * math.sqrt(5) + n10 * math.sqrt(10)) / d

    def sign(self) -> int:
        """Exact sign, found by squaring out the radicals."""
        if self.is_zero():
            return 0
        n1, n2, n5, n10, _ = self._n
        # value = p + q*sqrt5 with p = n1 + n2 sqrt2, q = n5 + n10 sqrt2
        p = (n1, n2)
        q = (n5, n10)
        sp = _sign_q2(*p)
        sq = _sign_q2(*q)
        if sq == 0:
            return sp
        if sp == 0:
            return sq
        if sp == sq:
            return sp
        # compare p^2 with 5 q^2 inside Q(sqrt2)
        p2 = (p[0] * p[0] + 2 * p[1] * p[1], 2 * p[0] * p[1])
        q2 = (5 * (q[0] * q[0] + 2 * q[1] * q[1]), 10 * q[0] * q[1])
        diff = _sign_q2(p2[0] - q2[0], p2[1] - q2[1])
        return sp if diff > 0 else sq

    def __lt__(self, other):
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce(other)).sign() >= 0

    def sort_key(self) -> tuple:
        return tuple(self.coefficients)

    def __repr__(self):
        return f"SurdValue({self})"

    def __str__(self):
        return surd_str(self)


def _sign_q2(a: int, b: int) -> int:
    """Sign of a + b*sqrt2 for integers a, b."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if (a > 0) == (b > 0):
        return 1 if a > 0 else -1
    # opposite signs: compare a^2 with 2 b^2
    if a * a > 2 * b * b:
        return 1 if a > 0 else -1
    return 1 if b > 0 else -1


def _coerce(x):
    if isinstance(x, SurdValue):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return SurdValue(x)
    return None


ZERO = SurdValue(0)
ONE = SurdValue(1)
HALF = SurdValue(Fraction(1, 2))
SQRT2 = SurdValue(0, 1)
SQRT5 = SurdValue(0, 0, 1)


def surd_arith(op: str, x: SurdValue, y: SurdValue | None = None) -> SurdValue:
    """Field operation by name: add, mul, neg or inv."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        if x.is_zero():
            raise ValueError("domain error: inverse of zero")
        return x.inverse()
    raise ValueError(f"unknown field operation {op!r}")


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def surd_str(v: SurdValue) -> str:
    parts = []
    for c, name in zip(v.coefficients, ("", "s2", "s5", "s10")):
        if c == 0:
            continue
        mag = _frac_str(abs(c))
        term = mag if not name else f"{mag}*{name}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(?:\*?\s*(s10|s2|s5))?\s*")


def parse_surd(text: str) -> SurdValue:
    """Parse the textual form produced by ``str(SurdValue)``.

    Accepts terms like '1/4', '-1/4*s5', '+ 3*s10', 's2'.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty field element")
    coeffs = {"": Fraction(0), "s2": Fraction(0), "s5": Fraction(0), "s10": Fraction(0)}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse field element at position {pos}: {text!r}")
        sign, num, rad = m.groups()
        if num is None and rad is None:
            raise ValueError(f"cannot parse field element at position {pos}: {text!r}")
        if sign is None and not first:
            raise ValueError(f"missing operator at position {pos}: {text!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        coeffs[rad or ""] += c
        pos = m.end()
        first = False
    return SurdValue(coeffs[""], coeffs["s2"], coeffs["s5"], coeffs["s10"])


@dataclass(frozen=True)
class RatCos:
    """cos(2*pi*angle) with angle in [0, 1/2] and denominator outside {1,2,3,4,6}.

    Build instances through :func:`cos_turn`, which canonicalizes.
    """

    angle: Fraction

    def __str__(self):
        return f"cos({_frac_str(self.angle)})"


RealPart = Union[RatCos, SurdValue]

_RATIONAL_COS = {
    1: {Fraction(0): ONE},
    2: {Fraction(1, 2): -ONE},
    3: {Fraction(1, 3): -HALF},
    4: {Fraction(1, 4): ZERO},
    6: {Fraction(1, 6): HALF},
}

# Values that are cosines of rational turns with denominator 5, 8, 10.
_SURD_COS = {
    Fraction(1, 8): SurdValue(0, Fraction(1, 2)),
    Fraction(3, 8): SurdValue(0, Fraction(-1, 2)),
    Fraction(1, 10): SurdValue(Fraction(1, 4), 0, Fraction(1, 4)),
    Fraction(1, 5): SurdValue(Fraction(-1, 4), 0, Fraction(1, 4)),
    Fraction(3, 10): SurdValue(Fraction(1, 4), 0, Fraction(-1, 4)),
    Fraction(2, 5): SurdValue(Fraction(-1, 4), 0, Fraction(-1, 4)),
}


def _canonical_angle(angle) -> Fraction:
    a = to_fraction(angle) % 1
    if a > Fraction(1, 2):
        a = 1 - a
    return a


def cos_turn(angle) -> RealPart:
    """Canonical real part cos(2*pi*angle)."""
    a = _canonical_angle(angle)
    if a.denominator in _RATIONAL_COS:
        return _RATIONAL_COS[a.denominator][a]
    return RatCos(a)


def realpart_key(rp: RealPart):
    """Hashable key such that keys are equal iff the real numbers are equal."""
    if isinstance(rp, RatCos):
        v = _SURD_COS.get(rp.angle)
        if v is not None:
            return v
        return rp
    return rp


def realpart_equal(a: RealPart, b: RealPart) -> bool:
    """Sound symbolic equality of two canonical real parts."""
    if isinstance(a, RatCos) and isinstance(b, RatCos):
        return a.angle == b.angle
    if isinstance(a, SurdValue) and isinstance(b, SurdValue):
        return a == b
    if isinstance(a, SurdValue):
        a, b = b, a
    cond = rational_cos_table(b)
    if cond is None:
        return False
    return any(_canonical_angle(r) == a.angle for r in cond.residues)


def realpart_float(rp: RealPart) -> float:
    if isinstance(rp, RatCos):
        return math.cos(2 * math.pi * float(rp.angle))
    return float(rp)


def realpart_str(rp: RealPart) -> str:
    return str(rp)


def parse_realpart(text: str) -> RealPart:
    s = text.strip()
    m = re.fullmatch(r"cos\(\s*(-?\d+(?:/\d+)?)\s*\)", s)
    if m:
        return cos_turn(Fraction(m.group(1)))
    return parse_surd(s)


@dataclass(frozen=True)
class CosCondition:
    """cos(2*pi*x/n) = b is solvable in integers iff ``divisor`` divides n.

    The solutions are x = r*n + k*n for r in ``residues`` and k in Z.
    """

    divisor: int
    residues: tuple[Fraction, ...]


_TABLE = {
    -ONE: CosCondition(2, (Fraction(1, 2),)),
    _SURD_COS[Fraction(3, 8)]: CosCondition(8, (Fraction(3, 8), Fraction(5, 8))),
    -HALF: CosCondition(3, (Fraction(1, 3), Fraction(2, 3))),
    ZERO: CosCondition(4, (Fraction(1, 4), Fraction(3, 4))),
    HALF: CosCondition(6, (Fraction(1, 6), Fraction(5, 6))),
    _SURD_COS[Fraction(1, 8)]: CosCondition(8, (Fraction(1, 8), Fraction(7, 8))),
    ONE: CosCondition(1, (Fraction(0),)),
    _SURD_COS[Fraction(1, 10)]: CosCondition(10, (Fraction(1, 10), Fraction(9, 10))),
    _SURD_COS[Fraction(1, 5)]: CosCondition(5, (Fraction(1, 5), Fraction(4, 5))),
    _SURD_COS[Fraction(3, 10)]: CosCondition(10, (Fraction(3, 10), Fraction(7, 10))),
    _SURD_COS[Fraction(2, 5)]: CosCondition(5, (Fraction(2, 5), Fraction(3, 5))),
}


def candidate_values() -> tuple[SurdValue, ...]:
    """The field elements that are cosines of rational turns."""
    return tuple(_TABLE)


def rational_cos_table(b: SurdValue) -> CosCondition | None:
    """Divisibility condition for cos(2*pi*x/n) = b, or None if b is no such cosine."""
    return _TABLE.get(SurdValue.of(b))
