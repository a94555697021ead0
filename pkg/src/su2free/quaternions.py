"""Exact unit quaternions.

Cyclic and binary dihedral groups use the angle form j^e * e(theta), where
e(theta) = exp(2*pi*i*theta).  The exceptional groups use coordinates in
Q(sqrt2, sqrt5).  The two forms are never multiplied together.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import ONE, ZERO, RealPart, SurdValue, _frac_str, cos_turn, parse_surd, to_fraction

__all__ = [
    "AngleQ",
    "SurdQ",
    "UnitQuaternion",
    "RepresentationError",
    "qmul",
    "qinv",
    "qre",
    "qneg",
    "qfloat",
    "format_element",
    "parse_element",
    "surd_identity",
    "angle_identity",
]


class RepresentationError(TypeError):
    """Raised when angle-form and surd-form quaternions are combined."""


@dataclass(frozen=True, order=True)
class AngleQ:
    """j^jexp * e(theta) with jexp in {0, 1} and theta in [0, 1)."""

    jexp: int
    theta: Fraction

    def __post_init__(self):
        if self.jexp not in (0, 1):
            raise ValueError("jexp must be 0 or 1")
        object.__setattr__(self, "theta", to_fraction(self.theta) % 1)

    def __str__(self):
        core = f"e({_frac_str(self.theta)})"
        return "j*" + core if self.jexp else core


@dataclass(frozen=True)
class SurdQ:
    """w + x*i + y*j + z*k with coordinates in Q(sqrt2, sqrt5)."""

    w: SurdValue
    x: SurdValue
    y: SurdValue
    z: SurdValue

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            object.__setattr__(self, name, SurdValue.of(getattr(self, name)))

    @property
    def coords(self) -> tuple[SurdValue, SurdValue, SurdValue, SurdValue]:
        return (self.w, self.x, self.y, self.z)

    def norm2(self) -> SurdValue:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "q(" + ",".join(str(c) for c in self.coords) + ")"


UnitQuaternion = Union[AngleQ, SurdQ]


def angle_identity() -> AngleQ:
    return AngleQ(0, Fraction(0))


def surd_identity() -> SurdQ:
    return SurdQ(ONE, ZERO, ZERO, ZERO)


def qmul(a: UnitQuaternion, b: UnitQuaternion) -> UnitQuaternion:
    if isinstance(a, AngleQ) and isinstance(b, AngleQ):
        # e(t1) j = j e(-t1), and j^2 = e(1/2)
        t1 = -a.theta if b.jexp else a.theta
        extra = Fraction(1, 2) if (a.jexp and b.jexp) else Fraction(0)
        return AngleQ(a.jexp ^ b.jexp, t1 + b.theta + extra)
    if isinstance(a, SurdQ) and isinstance(b, SurdQ):
        a1, b1, c1, d1 = a.coords
        a2, b2, c2, d2 = b.coords
        return SurdQ(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    raise RepresentationError("cannot multiply angle-form and surd-form quaternions")


def qinv(a: UnitQuaternion) -> UnitQuaternion:
    if isinstance(a, AngleQ):
        if a.jexp:
            return AngleQ(1, a.theta + Fraction(1, 2))
        return AngleQ(0, -a.theta)
    return SurdQ(a.w, -a.x, -a.y, -a.z)


def qneg(a: UnitQuaternion) -> UnitQuaternion:
    if isinstance(a, AngleQ):
        return AngleQ(a.jexp, a.theta + Fraction(1, 2))
    return SurdQ(-a.w, -a.x, -a.y, -a.z)


def qre(a: UnitQuaternion) -> RealPart:
    if isinstance(a, AngleQ):
        return cos_turn(a.theta) if a.jexp == 0 else ZERO
    return a.w


def qfloat(a: UnitQuaternion) -> tuple[float, float, float, float]:
    """Floating point coordinates (w, x, y, z); for tests and diagnostics only."""
    if isinstance(a, AngleQ):
        c = math.cos(2 * math.pi * float(a.theta))
        s = math.sin(2 * math.pi * float(a.theta))
        if a.jexp == 0:
            return (c, s, 0.0, 0.0)
        # j (c + s i) = c j - s k
        return (0.0, 0.0, c, -s)
    return tuple(float(c) for c in a.coords)


def format_element(a: UnitQuaternion) -> str:
    return str(a)


_ANGLE_RE = re.compile(r"(j\s*\*\s*)?e\(\s*(-?\d+(?:/\d+)?)\s*\)")


def parse_element(text: str) -> UnitQuaternion:
    """Parse 'e(p/q)', 'j*e(p/q)' or 'q(w,x,y,z)'."""
    s = text.strip()
    m = _ANGLE_RE.fullmatch(s)
    if m:
        return AngleQ(1 if m.group(1) else 0, Fraction(m.group(2)))
    if s.startswith("q(") and s.endswith(")"):
        parts = s[2:-1].split(",")
        if len(parts) != 4:
            raise ValueError(f"expected four coordinates in {text!r}")
        q = SurdQ(*(parse_surd(p) for p in parts))
        if q.norm2() != ONE:
            raise ValueError(f"not a unit quaternion: {text!r}")
        return q
    raise ValueError(f"cannot parse element {text!r}")
