"""Classification families as executable predicates.

Every row of the classification tables is transcribed literally: a row has
a parameter domain, the quadruple (A, A0, B, B0) with the automorphism
theta that defines its pair subgroup C, and the printed condition on the
third factor D.  A family verdict is

    (parameters in the row's domain and the printed condition holds)
    or (A x B x D is a freely acting splittable group),

the second clause covering groups that are free because they sit inside a
free splittable group.  The splittable verdict itself comes from the
splittable table, not from the oracle, so the whole predicate is paper-side
and can disagree with the brute-force oracle.

Binary dihedral groups use the descriptor BD(n) of order 4n throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from ..congruence import simple_system_trivial_only
from ..groups import AdeKind, parse_kind

__all__ = [
    "FamilySpec",
    "Row",
    "ROWS",
    "THEOREMS",
    "predicate",
    "predicate_simple",
    "predicate_splittable",
    "predicate_typeI",
    "predicate_typeII",
    "predicate_typeIII",
    "splittable_lookup",
    "splittable_envelope",
    "form_strict",
]

THEOREMS = ("simple", "main", "typeB", "type3", "qfinal", "qfinal2")


@dataclass(frozen=True)
class FamilySpec:
    """One member of a classification family: theorem id, row key and parameters.

    ``params`` is a tuple of (name, value) pairs; the third factor, when the
    row has one, is the descriptor under the name "D".
    """

    theorem: str
    row: str
    params: tuple

    @classmethod
    def make(cls, theorem: str, row: str, **params) -> "FamilySpec":
        return cls(theorem, row, tuple(params.items()))

    @property
    def p(self) -> dict:
        return dict(self.params)

    def without_D(self) -> "FamilySpec":
        return FamilySpec(self.theorem, self.row, tuple((k, v) for k, v in self.params if k != "D"))

    def __str__(self):
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.theorem}/{self.row}[{inner}]"


def _gcd(*xs: int) -> int:
    return math.gcd(*(abs(x) for x in xs))


def _kind(desc: str) -> AdeKind:
    return parse_kind(desc)


def _no_small_primes(x: int, primes) -> bool:
    return all(x % q for q in primes)


# ---------------------------------------------------------------- simple


def predicate_simple(p: int, r: int, s: int) -> bool:
    """C(p, r, s) is listed when r or s is not +-1 mod p and the congruence system is trivial."""
    listed = r % p not in (1, p - 1) or s % p not in (1, p - 1)
    return listed and simple_system_trivial_only(p, r, s)


# ---------------------------------------------------------------- splittable table


_E_PAIR_ROWS = {
    ("2I", "2I"): "Z(n) x 2I x 2I",
    ("2O", "2I"): "Z(n) x 2O x 2I",
    ("2O", "2O"): "Z(n) x 2O x 2O",
    ("2T", "2O"): "Z(n) x 2T x 2O",
    ("2T", "2I"): "Z(n) x 2T x 2I",
    ("2T", "2T"): "Z(n) x 2T x 2T",
}

SPLITTABLE_ROWS = list(_E_PAIR_ROWS.values()) + [
    "Z(n) x Z(m) x Z(l)",
    "Z(n) x Z(m) x BD(l)",
    "Z(n) x BD(m) x BD(l)",
    "Z(n) x Z(m) x 2T",
    "Z(n) x Z(m) x 2O",
    "Z(n) x BD(m) x 2T",
    "Z(n) x BD(m) x 2O",
    "Z(n) x BD(m) x 2I",
    "Z(n) x Z(m) x 2I",
]


def predicate_splittable(row: str, n: int = 0, m: int = 0, l: int = 0) -> bool:
    """Condition of one row of the splittable table; BD(m) stands for the binary dihedral group of order 4m."""
    if row in ("Z(n) x 2I x 2I",):
        return _no_small_primes(n, (2, 3, 5))
    if row in _E_PAIR_ROWS.values():
        return _no_small_primes(n, (2, 3))
    if row == "Z(n) x Z(m) x Z(l)":
        return _gcd(n, m, l) == 1
    if row == "Z(n) x Z(m) x BD(l)":
        return _gcd(n, m, 2 * l) == 1
    if row == "Z(n) x BD(m) x BD(l)":
        return _gcd(n, 2 * m, 2 * l) == 1
    if row in ("Z(n) x Z(m) x 2T", "Z(n) x Z(m) x 2O"):
        return _no_small_primes(_gcd(n, m), (2, 3))
    if row in ("Z(n) x BD(m) x 2T", "Z(n) x BD(m) x 2O", "Z(n) x BD(m) x 2I"):
        return _no_small_primes(_gcd(n, 2 * m), (2, 3))
    if row == "Z(n) x Z(m) x 2I":
        return _no_small_primes(_gcd(n, m), (2, 3, 5))
    if row == "no cyclic factor":
        return False
    raise ValueError(f"unknown splittable row {row!r}")


_E_ORDER = {"2T": 0, "2O": 1, "2I": 2}


def splittable_lookup(g1: str, g2: str, g3: str) -> tuple[str, dict]:
    """Match three descriptors to a row of the splittable table (up to permutation)."""
    ks = [_kind(g) for g in (g1, g2, g3)]
    cyc = sorted((k.n for k in ks if k.family == "Z"))
    bd = sorted((k.n for k in ks if k.family == "BD"))
    ex = sorted((k.family for k in ks if k.family in _E_ORDER), key=_E_ORDER.get)
    if not cyc:
        return "no cyclic factor", {}
    n = cyc[0]
    if len(cyc) == 3:
        return "Z(n) x Z(m) x Z(l)", {"n": cyc[0], "m": cyc[1], "l": cyc[2]}
    if len(cyc) == 2:
        m = cyc[1]
        if bd:
            return "Z(n) x Z(m) x BD(l)", {"n": n, "m": m, "l": bd[0]}
        return f"Z(n) x Z(m) x {ex[0]}", {"n": n, "m": m}
    if len(bd) == 2:
        return "Z(n) x BD(m) x BD(l)", {"n": n, "m": bd[0], "l": bd[1]}
    if len(bd) == 1:
        return f"Z(n) x BD(m) x {ex[0]}", {"n": n, "m": bd[0]}
    return _E_PAIR_ROWS[(ex[0], ex[1])], {"n": n}


def splittable_envelope(g1: str, g2: str, g3: str) -> bool:
    """Whether g1 x g2 x g3 is listed as freely acting in the splittable table."""
    row, params = splittable_lookup(g1, g2, g3)
    return predicate_splittable(row, **params)


# ---------------------------------------------------------------- shared table shapes


def _k_table(D: str, k1: int, k2: int, typo_2I: bool = True) -> bool:
    """The (k1 > 1, k2 > 1) table shared by the cyclic type I and type II rows.

    In the printed table the 2I entry of the (no, yes) branch reads k1; it is
    kept as printed when ``typo_2I`` is set.
    """
    d = _kind(D)
    b1, b2 = k1 > 1, k2 > 1
    if not b1 and not b2:
        return True
    ks = [k for k, b in ((k1, b1), (k2, b2)) if b]
    if d.family == "Z":
        return all(_gcd(d.n, k) == 1 for k in ks)
    if d.family == "BD":
        return all(_gcd(2 * d.n, k) == 1 for k in ks)
    if d.family in ("2T", "2O"):
        return all(_no_small_primes(k, (2, 3)) for k in ks)
    if d.family == "2I":
        if typo_2I and not b1 and b2:
            ks = [k1]
        return all(_no_small_primes(k, (2, 3, 5)) for k in ks)
    raise ValueError(D)


def _ktilde_table(D: str, kt1: int, kt2: int) -> bool:
    """The (k~1 > 1, k~2 > 1) table of the dihedral rows: only cyclic D are listed."""
    d = _kind(D)
    if d.family != "Z" or d.n % 4 == 0:
        return False
    return all(_gcd(k, d.n) == 1 for k in (kt1, kt2) if k > 1)


def _ms_table(D: str, ms_values) -> bool:
    d = _kind(D)
    if d.family == "Z":
        return all(_gcd(d.n, v) == 1 for v in ms_values)
    if d.family == "BD":
        return all(_gcd(2 * d.n, v) == 1 for v in ms_values)
    if d.family in ("2T", "2O"):
        return all(_no_small_primes(v, (2, 3)) for v in ms_values)
    return all(_no_small_primes(v, (2, 3, 5)) for v in ms_values)


def _odd_cyclic(D: str) -> int | None:
    d = _kind(D)
    return d.n if d.family == "Z" and d.n % 2 == 1 else None


# ---------------------------------------------------------------- rows


@dataclass(frozen=True)
class Row:
    """A table row: quadruple and theta as functions of the parameters, domain and printed condition."""

    theorem: str
    key: str
    title: str
    quad: Callable[[dict], tuple[str, str, str, str]]
    theta: Callable[[dict], object]
    domain: Callable[[dict], bool]
    literal: Callable[[dict], bool]


def _typeB_aff_domain(p):
    n, a = p["n"], p["a"]
    return n > 2 and a % (2 * n) not in (1, 2 * n - 1)


def _typeB_aff_literal(p):
    n, a = p["n"], p["a"]
    return _ktilde_table(p["D"], _gcd(1 + a, 2 * n), _gcd(1 - a, 2 * n))


def _typeB_pow_domain(p):
    n, r = p["n"], p["r"]
    return n > 2 and r % n not in (1, n - 1)


def _typeB_pow_literal(p):
    n, r = p["n"], p["r"]
    return _k_table(p["D"], _gcd(1 + r, n), _gcd(1 - r, n))


def _typeB_out_literal(p):
    d = _kind(p["D"])
    return p["E"] == "2I" and d.family == "Z" and d.n % 3 != 0


def _t5_domain(p):
    k, l, r = p["k"], p["l"], p["r"]
    return k >= 2 and l >= 2 and (l * r) % (k * l) not in (1, k * l - 1)


def _t5_literal(p):
    k, l, r = p["k"], p["l"], p["r"]
    return _k_table(p["D"], _gcd(1 + l * r, k * l), _gcd(1 - l * r, k * l))


def _t6_domain(p):
    l, k, a = p["l"], p["k"], p["a"]
    mod = 2 * l * (2 * k + 1)
    return l > 2 and k >= 1 and (a * (2 * k + 1)) % mod not in (1, mod - 1)


def _t6_literal(p):
    l, k, a = p["l"], p["k"], p["a"]
    o = 2 * k + 1
    mod = 2 * l * o
    return _ktilde_table(p["D"], _gcd(1 - a * o, mod), _gcd(1 + a * o, mod))


def _t1_literal(p):
    d = _kind(p["D"])
    if d.family == "Z":
        return d.n % 3 != 0
    if d.family == "BD":
        return (2 * d.n) % 3 != 0
    return False


def _qa_ms(p):
    k, l, q, r = p["k"], p["l"], p["p"], p["r"]
    s = (k * l) // _gcd(k * l, l * q * k)
    return [_gcd(q - e * k * r, k * l, l * q * k) * s for e in (1, -1)]


def _qb_literal(p):
    n, d = p["n"], _kind(p["D"])
    if n % 2 == 0:
        listed = all((n + t) % 3 != 0 for t in (-1, 1, 2, -2))
        return listed and d.family == "Z" and d.n % 2 == 1
    c1 = any((n + t) % 6 == 0 for t in (2, -2, 4, -4))
    c2 = any((n + t) % 3 == 0 for t in (1, -1, 2, -2))
    if not c1 and not c2:
        return True
    if d.family == "BD":
        return d.n % 3 != 0
    if d.family == "Z":
        if c1 and not c2:
            return d.n % 6 != 0
        return d.n % 3 != 0
    return False


def _qc_ms(p):
    l, k, q, a = p["l"], p["k"], p["p"], p["a"]
    o, P = 2 * k + 1, 2 * q + 1
    s = (2 * l * o) // _gcd(2 * l * o, 2 * l * P * o)
    return [_gcd(P - e * o * a, 2 * l * o, 2 * l * P * o) * s for e in (1, -1)]


def _qc_literal(p):
    d = _kind(p["D"])
    if d.family != "Z" or d.n % 4 == 0:
        return False
    return all(_gcd(d.n, v) == 1 for v in _qc_ms(p))


def _qd_literal(p):
    g = _gcd(2 * p["k"] + 1, p["p"])
    d = _kind(p["D"])
    if d.family in ("Z", "BD"):
        return _gcd(g, d.n) == 1
    if d.family in ("2T", "2O"):
        return _no_small_primes(g, (2, 3))
    return _no_small_primes(g, (2, 3, 5))


def _qf_literal(p):
    if (2 * p["k"] + 1) % 3 != 0:
        return True
    d = _kind(p["D"])
    return d.family in ("Z", "BD") and d.n % 3 != 0


def _r3_ms(p):
    k, l, q, a = p["k"], p["l"], p["p"], p["a"]
    s = (k * l) // _gcd(k * l, l * q * k)
    return [_gcd(q - e * k * a, k * l, l * q * k) * s for e in (1, -1)]


def _r3_literal(p):
    m = _odd_cyclic(p["D"])
    return all(_gcd(v, m) == 1 for v in _r3_ms(p))


def _never(p):
    return False


def _always(p):
    return True


def _Z(n):
    return f"Z({n})"


def _BD(n):
    return f"BD({n})"


ROWS: dict[tuple[str, str], Row] = {}


def _row(theorem, key, title, quad, theta, domain, literal):
    ROWS[(theorem, key)] = Row(theorem, key, title, quad, theta, domain, literal)


# type I: graphs of automorphisms, C = G(A, 1, A, 1, phi)
_row("typeB", "aff", "Gamma(aff(a,b), BD(n)) x D",
     lambda p: (_BD(p["n"]), "Z(1)", _BD(p["n"]), "Z(1)"),
     lambda p: f"aff({p['a']},{p['b']})", _typeB_aff_domain, _typeB_aff_literal)
_row("typeB", "pow", "Gamma(pow(r), Z(n)) x D",
     lambda p: (_Z(p["n"]), "Z(1)", _Z(p["n"]), "Z(1)"),
     lambda p: f"pow({p['r']})", _typeB_pow_domain, _typeB_pow_literal)
_row("typeB", "out", "Gamma(out, E) x D",
     lambda p: (p["E"], "Z(1)", p["E"], "Z(1)"),
     lambda p: f"out{p['E']}", lambda p: p["E"] == "2I", _typeB_out_literal)

# type II: B0 trivial
_row("type3", "2T", "G(2T, BD(2), Z(3), 1, pow(r)) x D",
     lambda p: ("2T", "BD(2)", "Z(3)", "Z(1)"),
     lambda p: f"pow({p['r']})", _always, _t1_literal)
_row("type3", "BD2k", "G(BD(2k), BD(k), Z(2), 1, id) x D",
     lambda p: (_BD(2 * p["k"]), _BD(p["k"]), "Z(2)", "Z(1)"),
     lambda p: "id", lambda p: p["k"] >= 2, _always)
_row("type3", "2O", "G(2O, 2T, Z(2), 1, id) x D",
     lambda p: ("2O", "2T", "Z(2)", "Z(1)"),
     lambda p: "id", _always, _always)
_row("type3", "BDk", "G(BD(k), Z(2k), Z(2), 1, id) x D",
     lambda p: (_BD(p["k"]), _Z(2 * p["k"]), "Z(2)", "Z(1)"),
     lambda p: "id", lambda p: p["k"] >= 2, _always)
_row("type3", "Zkl", "G(Z(kl), Z(l), Z(k), 1, pow(r)) x D",
     lambda p: (_Z(p["k"] * p["l"]), _Z(p["l"]), _Z(p["k"]), "Z(1)"),
     lambda p: f"pow({p['r']})", _t5_domain, _t5_literal)
_row("type3", "BDl", "G(BD(l(2k+1)), Z(2k+1), BD(l), 1, aff(a,b)) x D",
     lambda p: (_BD(p["l"] * (2 * p["k"] + 1)), _Z(2 * p["k"] + 1), _BD(p["l"]), "Z(1)"),
     lambda p: f"aff({p['a']},{p['b']})", _t6_domain, _t6_literal)

# type III
_row("qfinal", "a", "G(Z(kl), Z(k), Z(pl), Z(p), pow(r)) x D",
     lambda p: (_Z(p["k"] * p["l"]), _Z(p["k"]), _Z(p["p"] * p["l"]), _Z(p["p"])),
     lambda p: f"pow({p['r']})", lambda p: min(p["k"], p["l"], p["p"]) >= 2,
     lambda p: _ms_table(p["D"], _qa_ms(p)))
_row("qfinal", "b", "G(Z(3n), Z(n), 2T, BD(2), pow(r)) x D",
     lambda p: (_Z(3 * p["n"]), _Z(p["n"]), "2T", "BD(2)"),
     lambda p: f"pow({p['r']})", lambda p: p["n"] >= 2, _qb_literal)
_row("qfinal", "c", "G(BD(l(2k+1)), Z(2k+1), BD(l(2p+1)), Z(2p+1), aff(a,b)) x D",
     lambda p: (_BD(p["l"] * (2 * p["k"] + 1)), _Z(2 * p["k"] + 1),
                _BD(p["l"] * (2 * p["p"] + 1)), _Z(2 * p["p"] + 1)),
     lambda p: f"aff({p['a']},{p['b']})", lambda p: p["l"] > 2, _qc_literal)
_row("qfinal", "d", "G(BD(2k+1), Z(2k+1), Z(4p), Z(p), pow(r)) x D",
     lambda p: (_BD(2 * p["k"] + 1), _Z(2 * p["k"] + 1), _Z(4 * p["p"]), _Z(p["p"])),
     lambda p: f"pow({p['r']})", lambda p: p["p"] % 2 == 0, _qd_literal)
_row("qfinal", "e", "G(BD(2k+1), Z(2k+1), BD(2p+1), Z(2p+1), pow(r)) x D",
     lambda p: (_BD(2 * p["k"] + 1), _Z(2 * p["k"] + 1), _BD(2 * p["p"] + 1), _Z(2 * p["p"] + 1)),
     lambda p: f"pow({p['r']})", _never, _never)
_row("qfinal", "f", "G(Z(2(2k+1)), Z(2k+1), 2O, 2T, id) x D",
     lambda p: (_Z(2 * (2 * p["k"] + 1)), _Z(2 * p["k"] + 1), "2O", "2T"),
     lambda p: "id", _always, _qf_literal)
_row("qfinal", "g", "G(Z(2(2k+1)), Z(2k+1), BD(2p), BD(p), id) x D",
     lambda p: (_Z(2 * (2 * p["k"] + 1)), _Z(2 * p["k"] + 1), _BD(2 * p["p"]), _BD(p["p"])),
     lambda p: "id", _never, _never)

_row("qfinal2", "R1", "G(2I, Z(2), 2I, Z(2), theta) x Z(m)",
     lambda p: ("2I", "Z(2)", "2I", "Z(2)"),
     lambda p: p["theta"],
     lambda p: p["theta"] == "out2I" and _odd_cyclic(p["D"]) is not None,
     lambda p: _odd_cyclic(p["D"]) % 3 != 0)
_row("qfinal2", "R2", "G(BD(3k), Z(2k), 2O, BD(2), theta) x Z(m)",
     lambda p: (_BD(3 * p["k"]), _Z(2 * p["k"]), "2O", "BD(2)"),
     lambda p: p["theta"],
     lambda p: _odd_cyclic(p["D"]) is not None,
     lambda p: p["k"] % 3 == 0)
_row("qfinal2", "R3", "G(BD(kl), Z(2k), BD(pl), Z(2p), aff(a,b)) x Z(m)",
     lambda p: (_BD(p["k"] * p["l"]), _Z(2 * p["k"]), _BD(p["p"] * p["l"]), _Z(2 * p["p"])),
     lambda p: f"aff({p['a']},{p['b']})",
     lambda p: p["l"] >= 3 and _odd_cyclic(p["D"]) is not None,
     _r3_literal)


def row_of(spec: FamilySpec) -> Row:
    try:
        return ROWS[(spec.theorem, spec.row)]
    except KeyError:
        raise ValueError(f"unknown row {spec.theorem}/{spec.row}") from None


def _semi_predicate(spec: FamilySpec) -> bool:
    row = row_of(spec)
    p = spec.p
    if row.domain(p) and row.literal(p):
        return True
    A, _, B, _ = row.quad(p)
    return splittable_envelope(A, B, p["D"])


def predicate_typeI(spec: FamilySpec) -> bool:
    return _semi_predicate(spec)


def predicate_typeII(spec: FamilySpec) -> bool:
    return _semi_predicate(spec)


def predicate_typeIII(spec: FamilySpec) -> bool:
    return _semi_predicate(spec)


def predicate(spec: FamilySpec) -> bool:
    """Paper-side verdict for any family member."""
    p = spec.p
    if spec.theorem == "simple":
        return predicate_simple(p["p"], p["r"], p["s"])
    if spec.theorem == "main":
        return predicate_splittable(spec.row, **{k: v for k, v in p.items() if k in ("n", "m", "l")})
    if spec.theorem == "typeB":
        return predicate_typeI(spec)
    if spec.theorem == "type3":
        return predicate_typeII(spec)
    if spec.theorem in ("qfinal", "qfinal2"):
        return predicate_typeIII(spec)
    raise ValueError(f"unknown theorem {spec.theorem!r}")


# ---------------------------------------------------------------- a priori restriction for type III


def _odd(n):
    return n % 2 == 1


def _match_one(A, A0, B, B0) -> bool:
    a, a0, b, b0 = (_kind(x) for x in (A, A0, B, B0))
    if not (a0.family == "Z" and _odd(a0.n)):
        return False
    o = a0.n
    if a.family == "BD" and b.family == "BD" and b0.family == "Z" and _odd(b0.n):
        # (BD(l o), Z(o), BD(l q), Z(q)), including l = 1
        return a.n % o == 0 and b.n % b0.n == 0 and a.n // o == b.n // b0.n
    if a.family == "Z" and a.n == 3 * o and b.family == "2T" and b0.family == "BD" and b0.n == 2:
        return True
    if a.family == "Z" and b.family == "Z" and b0.family == "Z":
        return a.n % o == 0 and b.n % b0.n == 0 and a.n // o == b.n // b0.n
    if a.family == "Z" and a.n == 2 * o and b.family == "2O" and b0.family == "2T":
        return True
    if a.family == "Z" and a.n == 2 * o and b.family == "BD" and b0.family == "BD" and b.n == 2 * b0.n:
        return True
    if a.family == "Z" and a.n == 4 * o and b.family == "BD" and b0.family == "Z" and b0.n == b.n and _odd(b.n):
        return True
    if a.family == "BD" and a.n == o and b.family == "Z" and b0.family == "Z" and b.n == 4 * b0.n:
        return True
    return False


def form_strict(A: str, A0: str, B: str, B0: str, D: str) -> bool:
    """Necessary condition for a free type III group C x D: D odd cyclic or the quadruple is in the short list."""
    if _odd_cyclic(D) is not None:
        return True
    return _match_one(A, A0, B, B0) or _match_one(B, B0, A, A0)
