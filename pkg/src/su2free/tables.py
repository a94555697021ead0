"""Regenerate the reference tables (catalog, real parts, conjugacy classes) from the groups.

Everything here is computed by building the groups and enumerating classes;
the published values live in ``PUBLISHED_*`` only as comparison data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import cos_turn, parse_realpart, realpart_float, realpart_key, realpart_str
from .groups import build_group, conjugacy_class_labels, parse_kind, real_part_set, realpart_value
from .quaternions import parse_element, qre

__all__ = [
    "CatalogRow",
    "ConjRow",
    "catalog_rows",
    "expected_real_parts",
    "published_real_parts",
    "conjugacy_table",
    "full_conjugacy_classes",
    "PUBLISHED_CONJ",
    "render_catalog",
    "render_real_parts",
    "render_conjugacy",
    "render_all",
]

_GENERATORS = {
    "2O": {"s": "q(1/2,1/2,1/2,1/2)", "t": "q(1/2*s2,1/2*s2,0,0)"},
    "2I": {"s": "q(1/2,1/2,1/2,1/2)", "t": "q(1/4 + 1/4*s5,-1/4 + 1/4*s5,1/2,0)"},
}

# (representative word, class size, real part) as published
PUBLISHED_CONJ = {
    "2O": [("1", 1, "1"), ("-1", 1, "-1"), ("s", 8, "1/2"), ("t", 6, "1/2*s2"),
           ("s^2", 8, "-1/2"), ("t^2", 8, "0"), ("t^3", 6, "-1/2*s2"), ("st", 12, "0")],
    "2I": [("1", 1, "1"), ("-1", 1, "-1"), ("t", 12, "1/4 + 1/4*s5"), ("t^2", 12, "-1/4 + 1/4*s5"),
           ("t^3", 12, "1/4 - 1/4*s5"), ("t^4", 12, "-1/4 - 1/4*s5"), ("s", 20, "1/2"),
           ("s^4", 20, "-1/2"), ("st", 30, "0")],
}

_PUBLISHED_E_REALPARTS = {
    "2T": ["0", "1", "-1", "1/2", "-1/2"],
    # the last pair is printed as +-1/(2 sqrt 2)
    "2O": ["0", "1", "-1", "1/2", "-1/2", "1/2*s2", "-1/2*s2", "1/4*s2", "-1/4*s2"],
    "2I": ["0", "1", "-1", "1/2", "-1/2", "1/4 + 1/4*s5", "1/4 - 1/4*s5", "-1/4 + 1/4*s5", "-1/4 - 1/4*s5"],
}


@dataclass(frozen=True)
class CatalogRow:
    label: str
    name: str
    order: int
    expected_order: int


@dataclass(frozen=True)
class ConjRow:
    rep: str
    size: int
    real_part: object


def _formula_order(desc: str) -> int:
    k = parse_kind(desc)
    return {"Z": k.n, "BD": 4 * k.n, "2T": 24, "2O": 48, "2I": 120}[k.family]


def _label(desc: str) -> str:
    k = parse_kind(desc)
    return {"Z": f"A{k.n - 1}", "BD": f"D{k.n + 2}", "2T": "E6", "2O": "E7", "2I": "E8"}[k.family]


def catalog_rows(max_cyclic: int = 30, max_dicyclic: int = 15) -> list[CatalogRow]:
    descs = [f"Z({n})" for n in range(1, max_cyclic + 1)]
    descs += [f"BD({n})" for n in range(2, max_dicyclic + 1)]
    descs += ["2T", "2O", "2I"]
    return [CatalogRow(_label(d), d, build_group(d).order, _formula_order(d)) for d in descs]


def expected_real_parts(desc: str) -> set:
    """Real parts from the closed-form description of the group's elements.

    For Z(n) these are cos(2 pi x/n); for BD(n) they are 0 and cos(pi x/n).
    """
    k = parse_kind(desc)
    if k.family == "Z":
        vals = {cos_turn(Fraction(x, k.n)) for x in range(1, k.n + 1)}
    elif k.family == "BD":
        vals = {cos_turn(Fraction(1, 4))} | {cos_turn(Fraction(x, 2 * k.n)) for x in range(1, 2 * k.n + 1)}
    else:
        return published_real_parts(desc)
    return {realpart_key(v) for v in vals}


def published_real_parts(desc: str) -> set:
    k = parse_kind(desc)
    if k.family in ("Z", "BD"):
        return expected_real_parts(desc)
    return {realpart_key(parse_realpart(s)) for s in _PUBLISHED_E_REALPARTS[k.family]}


def _word(g, gens, word: str) -> int:
    if word == "1":
        return 0
    if word == "-1":
        return g.index_of(parse_element("q(-1,0,0,0)"))
    x = 0
    i = 0
    while i < len(word):
        letter = gens[word[i]]
        i += 1
        power = 1
        if i < len(word) and word[i] == "^":
            j = i + 1
            while j < len(word) and word[j].isdigit():
                j += 1
            power = int(word[i + 1:j])
            i = j
        x = g.mul(x, g.power(letter, power))
    return int(x)


def conjugacy_table(name: str) -> list[ConjRow]:
    """Computed class size and real part for each published representative word."""
    g = build_group(name)
    gens = {k: g.index_of(parse_element(v)) for k, v in _GENERATORS[name].items()}
    lab = conjugacy_class_labels(g)
    rows = []
    for word, _, _ in PUBLISHED_CONJ[name]:
        x = _word(g, gens, word)
        size = int((lab == lab[x]).sum())
        rows.append(ConjRow(word, size, qre(g.element(x))))
    return rows


def full_conjugacy_classes(name: str) -> list[ConjRow]:
    """Every class of ``name`` (representative = smallest element index)."""
    g = build_group(name)
    lab = conjugacy_class_labels(g)
    out = []
    for rep in sorted(set(lab.tolist())):
        out.append(ConjRow(str(g.element(rep)), int((lab == rep).sum()), realpart_value(int(g.rp_ids[rep]))))
    return out


def _fmt_set(values) -> str:
    return "{" + ", ".join(realpart_str(v) for v in sorted(values, key=realpart_float)) + "}"


def render_catalog(max_cyclic: int = 30, max_dicyclic: int = 15) -> str:
    lines = ["# finite subgroups of SU(2)", "label\tname\torder\tformula"]
    for r in catalog_rows(max_cyclic, max_dicyclic):
        lines.append(f"{r.label}\t{r.name}\t{r.order}\t{r.expected_order}")
    return "\n".join(lines)


def render_real_parts(params=(2, 3, 4, 5, 6)) -> str:
    lines = ["# real parts of elements", "name\treal parts"]
    for n in params:
        lines.append(f"Z({n})\t{_fmt_set(real_part_set(build_group(f'Z({n})')))}")
    for n in params:
        if n >= 2:
            lines.append(f"BD({n})\t{_fmt_set(real_part_set(build_group(f'BD({n})')))}")
    for e in ("2T", "2O", "2I"):
        lines.append(f"{e}\t{_fmt_set(real_part_set(build_group(e)))}")
    return "\n".join(lines)


def render_conjugacy(name: str) -> str:
    lines = [f"# conjugacy classes in {name}", "rep\tsize\treal part"]
    for r in conjugacy_table(name):
        lines.append(f"{r.rep}\t{r.size}\t{realpart_str(r.real_part)}")
    total = sum(r.size for r in full_conjugacy_classes(name))
    lines.append(f"classes\t{len(full_conjugacy_classes(name))}\ttotal {total}")
    return "\n".join(lines)


def render_all() -> str:
    return "\n\n".join([render_catalog(), render_real_parts(), render_conjugacy("2O"), render_conjugacy("2I")]) + "\n"
