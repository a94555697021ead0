"""Run family predicates against the freeness oracle over bounded parameter ranges."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Iterator

from ..congruence import is_prime
from ..freeness import DEFAULT_BUDGET, format_witness, is_free
from .families import ROWS, SPLITTABLE_ROWS, THEOREMS, FamilySpec, predicate
from .materialize import materialize

__all__ = [
    "VerificationReport",
    "ACCEPTANCE_BOUNDS",
    "third_factors",
    "enumerate_family",
    "crosscheck",
    "mismatch_key",
    "load_expected",
    "compare_with_expected",
]

# "n": cap on the family parameters; "m": cap on the third factor,
# Z(m) with m <= cap and BD(m) with 2m <= cap.
ACCEPTANCE_BOUNDS = {
    "simple": {"n": 31},
    "main": {"n": 12},
    "typeB": {"n": 30, "m": 30},
    "type3": {"n": 10, "m": 10},
    "qfinal": {"n": 6, "m": 30},
    "qfinal2": {"n": 6, "m": 30},
}


@dataclass(frozen=True)
class VerificationReport:
    spec: FamilySpec
    predicate: bool
    oracle: bool
    witness: str | None = None

    @property
    def mismatch(self) -> bool:
        return self.predicate != self.oracle

    def to_record(self) -> dict:
        rec = {
            "family": self.spec.theorem,
            "row": self.spec.row,
            "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.spec.params},
            "predicate": self.predicate,
            "oracle": self.oracle,
        }
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec


def third_factors(cap: int) -> list[str]:
    out = [f"Z({m})" for m in range(2, cap + 1)]
    out += [f"BD({m})" for m in range(2, cap // 2 + 1)]
    return out + ["2T", "2O", "2I"]


def _units(n: int) -> list[int]:
    return [r for r in range(1, n) if math.gcd(r, n) == 1] if n > 1 else [0]


def _bounds(theorem: str, bounds: dict | None) -> tuple[int, int]:
    b = dict(ACCEPTANCE_BOUNDS[theorem])
    if bounds:
        b.update(bounds)
    return int(b["n"]), int(b.get("m", b["n"]))


def _with_D(theorem, row, ds, **params) -> Iterator[FamilySpec]:
    for d in ds:
        yield FamilySpec.make(theorem, row, **params, D=d)


def enumerate_family(theorem: str, bounds: dict | None = None, row: str | None = None) -> Iterator[FamilySpec]:
    """Family members in a fixed, lexicographic order.  ``row`` restricts to one row."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    N, M = _bounds(theorem, bounds)
    if theorem == "simple":
        for p in range(2, N + 1):
            if is_prime(p):
                for r in range(1, p):
                    for s in range(1, p):
                        yield FamilySpec.make("simple", "C(p,r,s)", p=p, r=r, s=s)
        return
    if theorem == "main":
        yield from _enumerate_main(N, row)
        return
    ds = third_factors(M)
    gen = {"typeB": _enum_typeB, "type3": _enum_type3, "qfinal": _enum_qfinal, "qfinal2": _enum_qfinal2}[theorem]
    for spec in gen(N, ds):
        if row is None or spec.row == row:
            yield spec


def _enumerate_main(N, only):
    rng = range(2, N + 1)
    for row in SPLITTABLE_ROWS:
        if only is not None and row != only:
            continue
        nparams = row.count("(")
        if nparams == 1:
            for n in rng:
                yield FamilySpec.make("main", row, n=n)
        elif nparams == 2:
            for n in rng:
                for m in rng:
                    yield FamilySpec.make("main", row, n=n, m=m)
        else:
            for n in rng:
                for m in rng:
                    for l in rng:
                        yield FamilySpec.make("main", row, n=n, m=m, l=l)
    if only in (None, "no cyclic factor"):
        pool = ["BD(2)", "BD(3)", "BD(4)", "2T", "2O", "2I"]
        for i, a in enumerate(pool):
            for j in range(i, len(pool)):
                for k in range(j, len(pool)):
                    yield FamilySpec.make("main", "no cyclic factor", factors=(a, pool[j], pool[k]))


def _enum_typeB(N, ds):
    for n in range(2, N + 1):
        for a in _units(2 * n):
            for b in range(2 * n):
                yield from _with_D("typeB", "aff", ds, n=n, a=a, b=b)
    for n in range(2, N + 1):
        for r in _units(n):
            yield from _with_D("typeB", "pow", ds, n=n, r=r)
    for e in ("2T", "2O", "2I"):
        yield from _with_D("typeB", "out", ds, E=e)


def _enum_type3(N, ds):
    for r in (1, 2):
        yield from _with_D("type3", "2T", ds, r=r)
    for k in range(2, N + 1):
        yield from _with_D("type3", "BD2k", ds, k=k)
    yield from _with_D("type3", "2O", ds)
    for k in range(2, N + 1):
        yield from _with_D("type3", "BDk", ds, k=k)
    for k in range(2, N + 1):
        for l in range(2, N + 1):
            for r in _units(k):
                yield from _with_D("type3", "Zkl", ds, k=k, l=l, r=r)
    for l in range(2, N + 1):
        for k in range(1, N + 1):
            for a in _units(2 * l):
                for b in range(2 * l):
                    yield from _with_D("type3", "BDl", ds, l=l, k=k, a=a, b=b)


def _enum_qfinal(N, ds):
    for k in range(2, N + 1):
        for l in range(2, N + 1):
            for p in range(2, N + 1):
                for r in _units(l):
                    yield from _with_D("qfinal", "a", ds, k=k, l=l, p=p, r=r)
    for n in range(2, 2 * N + 1):
        for r in (1, 2):
            yield from _with_D("qfinal", "b", ds, n=n, r=r)
    for l in range(2, N + 1):
        for k in range(1, N + 1):
            for p in range(1, N + 1):
                for a in _units(2 * l):
                    for b in range(2 * l):
                        yield from _with_D("qfinal", "c", ds, l=l, k=k, p=p, a=a, b=b)
    for k in range(1, N + 1):
        for p in range(2, N + 1):
            for r in (1, 3):
                yield from _with_D("qfinal", "d", ds, k=k, p=p, r=r)
    for k in range(1, N + 1):
        for p in range(1, N + 1):
            for r in (1, 3):
                yield from _with_D("qfinal", "e", ds, k=k, p=p, r=r)
    for k in range(1, N + 1):
        yield from _with_D("qfinal", "f", ds, k=k)
    for k in range(1, N + 1):
        for p in range(2, N + 1):
            yield from _with_D("qfinal", "g", ds, k=k, p=p)


def _enum_qfinal2(N, ds):
    for theta in ("id", "out2I"):
        yield from _with_D("qfinal2", "R1", ds, theta=theta)
    for k in range(1, N + 1):
        for theta in range(6):
            yield from _with_D("qfinal2", "R2", ds, k=k, theta=theta)
    for l in range(3, N + 1):
        for k in range(1, N + 1):
            for p in range(1, N + 1):
                for a in _units(l):
                    for b in range(l):
                        yield from _with_D("qfinal2", "R3", ds, l=l, k=k, p=p, a=a, b=b)


def verify_one(spec: FamilySpec, budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    pred = predicate(spec)
    free, witness = is_free(materialize(spec), budget=budget)
    return VerificationReport(spec, pred, free, format_witness(witness))


def crosscheck(theorem: str, bounds: dict | None = None, budget: int | None = DEFAULT_BUDGET,
               row: str | None = None) -> list[VerificationReport]:
    """One report per family member, in enumeration order."""
    return [verify_one(s, budget) for s in enumerate_family(theorem, bounds, row)]


def mismatch_key(spec: FamilySpec) -> tuple:
    return (spec.theorem, spec.row, tuple((k, tuple(v) if isinstance(v, list) else v) for k, v in spec.params))


def load_expected() -> dict:
    """Shipped discrepancy data: crosscheck mismatches and table-level findings."""
    text = resources.files(__package__).joinpath("discrepancies.json").read_text()
    return json.loads(text)


def expected_keys(theorem: str | None = None) -> set:
    out = set()
    for item in load_expected()["crosscheck"]:
        if theorem is None or item["family"] == theorem:
            params = tuple((k, tuple(v) if isinstance(v, list) else v) for k, v in item["params"])
            out.add((item["family"], item["row"], params))
    return out


def compare_with_expected(reports: list[VerificationReport], theorem: str,
                          bounds: dict | None = None) -> tuple[set, set]:
    """(unexpected mismatches, expected-but-missing) restricted to the members that were checked."""
    observed = {mismatch_key(r.spec) for r in reports if r.mismatch}
    checked = {mismatch_key(r.spec) for r in reports}
    expected = expected_keys(theorem) & checked
    return observed - expected, expected - observed



