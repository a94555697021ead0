"""Command-line front end: check, enumerate, verify, tables, lemma.

Exit status: 0 ok or free, 2 parse error, 3 not free, 4 budget exceeded,
5 verification mismatches beyond the shipped expected list.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from contextlib import contextmanager
from pathlib import Path

from . import congruence
from .freeness import DEFAULT_BUDGET, BudgetExceeded, SemiSplittable, Simple, Splittable, format_witness, is_free
from .goursat import build_goursat, quintuple_from_descriptors
from .groups import GroupError, build_group, parse_kind

EXIT_OK, EXIT_PARSE, EXIT_NOT_FREE, EXIT_BUDGET, EXIT_MISMATCH = 0, 2, 3, 4, 5

__all__ = ["SpecError", "parse_spec", "parse_bounds", "build_parser", "main"]


class SpecError(ValueError):
    """A group specification could not be parsed; ``pos`` is a 0-based character offset."""

    def __init__(self, msg: str, text: str, pos: int):
        self.text, self.pos = text, pos
        super().__init__(f"{msg} at position {pos}\n  {text}\n  {' ' * pos}^")


_SIMPLE_RE = re.compile(r"\s*(?:Simple|C)\(\s*(\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*")


def _group(desc: str, text: str, pos: int):
    try:
        return build_group(str(parse_kind(desc.strip())))
    except (GroupError, ValueError) as e:
        raise SpecError(f"bad group descriptor {desc.strip()!r} ({e})", text, pos) from None


def _infix(text: str):
    parts, pos = [], 0
    for m in re.finditer(r"\s+x\s+", text):
        parts.append((text[pos:m.start()], pos))
        pos = m.end()
    parts.append((text[pos:], pos))
    if len(parts) != 3:
        raise SpecError(f"expected three factors separated by ' x ', found {len(parts)}", text, pos)
    groups = []
    for chunk, start in parts:
        lead = len(chunk) - len(chunk.lstrip())
        groups.append(_group(chunk, text, start + lead))
    return Splittable(*groups)


def _field(doc: dict, key: str, text: str):
    if key not in doc:
        raise SpecError(f"missing field {key!r}", text, 0)
    return doc[key]


def _from_document(doc, text: str):
    if not isinstance(doc, dict):
        raise SpecError("a spec document must be an object", text, 0)
    kind = _field(doc, "kind", text)
    try:
        if kind == "splittable":
            factors = _field(doc, "factors", text)
            if len(factors) != 3:
                raise SpecError("'factors' needs three descriptors", text, 0)
            return Splittable(*(_group(f, text, 0) for f in factors))
        if kind == "simple":
            return Simple(int(_field(doc, "p", text)), int(_field(doc, "r", text)), int(_field(doc, "s", text)))
        if kind in ("semisplittable", "goursat3"):
            q = quintuple_from_descriptors(_field(doc, "A", text), _field(doc, "A0", text),
                                           _field(doc, "B", text), _field(doc, "B0", text),
                                           doc.get("theta", "id"))
            single = _group(_field(doc, "D", text), text, 0)
            return SemiSplittable(int(doc.get("position", 3)), build_goursat(q), single)
        if kind == "family":
            from .classify import FamilySpec, materialize

            spec = FamilySpec.make(_field(doc, "theorem", text), _field(doc, "row", text),
                                   **_field(doc, "params", text))
            return materialize(spec)
    except SpecError:
        raise
    except (GroupError, ValueError, KeyError, TypeError) as e:
        raise SpecError(f"invalid {kind} document ({e})", text, 0) from None
    raise SpecError(f"unknown kind {kind!r}", text, 0)


def parse_spec(text: str):
    """Parse 'A x B x C', 'Simple(p,r,s)' or a JSON spec document into a product group."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecError(f"malformed document: {e.msg}", text, e.pos) from None
        return _from_document(doc, text)
    m = _SIMPLE_RE.fullmatch(text)
    if m:
        try:
            return Simple(*(int(g) for g in m.groups()))
        except ValueError as e:
            raise SpecError(str(e), text, m.start(1)) from None
    return _infix(text)


def parse_bounds(text: str | None) -> dict:
    """'n=5,m=10' or a JSON object; ``kinds`` may list families joined by '+'."""
    if not text:
        return {}
    if text.strip().startswith("{"):
        try:
            out = json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecError(e.msg, text, e.pos) from None
    else:
        out = {}
        pos = 0
        for item in text.split(","):
            key, sep, val = item.partition("=")
            key = key.strip()
            if not sep:
                raise SpecError("bounds entry is not key=value", text, pos)
            if key == "kinds":
                out[key] = val.strip().split("+")
            else:
                try:
                    out[key] = int(val)
                except ValueError:
                    raise SpecError(f"bound {key} is not an integer", text, pos + len(item) - len(val)) from None
            pos += len(item) + 1
    for k, v in out.items():
        if k != "kinds" and (not isinstance(v, int) or v < 1):
            raise SpecError(f"bound {k} must be a positive integer", text, text.find(k))
    return out


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit(fh, fmt: str, record: dict, text: str):
    fh.write((json.dumps(record, sort_keys=False) if fmt == "records" else text) + "\n")


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    src = args.spec
    if Path(src).is_file():
        src = Path(src).read_text()
    g = parse_spec(src)
    free, witness = is_free(g, budget=args.budget)
    rec = {"spec": str(g), "free": free, "order": g.order}
    if witness is not None:
        rec["witness"] = format_witness(witness)
    verdict = "free" if free else f"not free, witness {rec['witness']}"
    with _sink(args.out) as fh:
        _emit(fh, args.format, rec, f"{g}: {verdict} (order {g.order})")
    return EXIT_OK if free else EXIT_NOT_FREE


def _splittable_members(bounds: dict):
    n = bounds.get("n", 5)
    kinds = bounds.get("kinds", ["Z", "BD", "2T", "2O", "2I"])
    if isinstance(kinds, str):
        kinds = kinds.split("+")
    pool = []
    if "Z" in kinds:
        pool += [f"Z({i})" for i in range(2, n + 1)]
    if "BD" in kinds:
        pool += [f"BD({i})" for i in range(2, n + 1)]
    pool += [e for e in ("2T", "2O", "2I") if e in kinds]
    for i in range(len(pool)):
        for j in range(i, len(pool)):
            for k in range(j, len(pool)):
                yield (pool[i], pool[j], pool[k])


def cmd_enumerate(args) -> int:
    from .classify import enumerate_family, materialize

    bounds = parse_bounds(args.bounds)
    with _sink(args.out) as fh:
        if args.family == "splittable":
            for fac in _splittable_members(bounds):
                rec = {"family": "splittable", "params": {"factors": list(fac)}}
                try:
                    free, w = is_free(Splittable(*(build_group(f) for f in fac)), budget=args.budget)
                    rec["free"] = free
                    if w is not None:
                        rec["witness"] = format_witness(w)
                except BudgetExceeded as e:
                    rec["error"] = str(e)
                _emit(fh, args.format, rec, _enum_text(" x ".join(fac), rec))
            return EXIT_OK
        for spec in enumerate_family(args.family, bounds, args.row):
            rec = {"family": spec.theorem, "row": spec.row,
                   "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in spec.params}}
            try:
                free, w = is_free(materialize(spec), budget=args.budget)
                rec["free"] = free
                if w is not None:
                    rec["witness"] = format_witness(w)
            except BudgetExceeded as e:
                rec["error"] = str(e)
            _emit(fh, args.format, rec, _enum_text(str(spec), rec))
    return EXIT_OK


def _enum_text(name: str, rec: dict) -> str:
    if "error" in rec:
        return f"{name}\terror: {rec['error']}"
    return f"{name}\t{'free' if rec['free'] else 'not free'}"


def cmd_verify(args) -> int:
    from .classify import compare_with_expected, crosscheck

    bounds = parse_bounds(args.bounds)
    reports = crosscheck(args.theorem, bounds, budget=args.budget)
    with _sink(args.out) as fh:
        for r in reports:
            rec = r.to_record()
            _emit(fh, args.format, rec,
                  f"{r.spec}\tpredicate={r.predicate}\toracle={r.oracle}" + ("\tMISMATCH" if r.mismatch else ""))
    unexpected, missing = compare_with_expected(reports, args.theorem)
    mism = sum(r.mismatch for r in reports)
    summary = (f"{args.theorem}: {len(reports)} checked, {mism} mismatches, "
               f"{len(unexpected)} unexpected, {len(missing)} expected but not observed")
    print(summary, file=sys.stderr if args.out is None else sys.stdout)
    for key in sorted(unexpected, key=str)[:20]:
        print(f"  unexpected: {key}", file=sys.stderr)
    for key in sorted(missing, key=str)[:20]:
        print(f"  missing: {key}", file=sys.stderr)
    return EXIT_OK if not unexpected and not missing else EXIT_MISMATCH


def cmd_tables(args) -> int:
    from .tables import render_all

    with _sink(args.out) as fh:
        fh.write(render_all())
    return EXIT_OK


def cmd_lemma(args) -> int:
    v = args.values
    name = args.lemma
    if name == "solve":
        lat = congruence.solve_linear(*v[:3])
        rec = None if lat is None else {"base": list(lat.base), "step": list(lat.steps[0])}
    elif name == "neg":
        rec = {"n1": congruence.neg_congruence(v[0], v[1])}
    elif name == "cos":
        fam = congruence.cos_equality_lattice(v[0], v[1])
        rec = {"k": fam.k, "n1": fam.n1, "m1": fam.m1, "residues": sorted(map(list, fam.residues()))}
    elif name == "res":
        target = 0.5 if v[2] > 0 else -0.5
        rec = {"solvable": congruence.res_solvable(v[0], v[1], target)}
    else:
        rec = {"trivial_only": congruence.simple_system_trivial_only(*v[:3])}
    with _sink(args.out) as fh:
        _emit(fh, "records", {"lemma": name, "args": v, "result": rec}, "")
    return EXIT_OK


_LEMMA_ARITY = {"solve": 3, "neg": 2, "cos": 2, "res": 3, "simple": 3}


def build_parser() -> argparse.ArgumentParser:
    from .classify import THEOREMS

    p = argparse.ArgumentParser(prog="su2free", description="Free actions of finite subgroups of SU(2)^3 on S^3 x S^3.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on the number of group elements")
    common.add_argument("--out", default=None, help="write output to PATH")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="decide freeness of one group")
    c.add_argument("spec", help="'A x B x C', 'Simple(p,r,s)', a JSON document, or a file holding one")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate", parents=[common], help="verdicts for every member of a family")
    e.add_argument("--family", required=True, choices=("splittable",) + THEOREMS)
    e.add_argument("--row", default=None, help="restrict to one row of the family")
    e.add_argument("--bounds", default=None, help="e.g. 'n=5,m=10' or JSON; splittable also takes kinds")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", parents=[common], help="cross-check a theorem against the oracle")
    v.add_argument("theorem", choices=THEOREMS)
    v.add_argument("--bounds", default=None)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", parents=[common], help="regenerate the reference tables")
    t.set_defaults(func=cmd_tables)

    lm = sub.add_parser("lemma", parents=[common], help="evaluate one congruence lemma")
    lm.add_argument("lemma", choices=sorted(_LEMMA_ARITY))
    lm.add_argument("values", type=int, nargs="+")
    lm.set_defaults(func=cmd_lemma)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lemma" and len(args.values) != _LEMMA_ARITY[args.lemma]:
        parser.error(f"lemma {args.lemma} takes {_LEMMA_ARITY[args.lemma]} integers")
    try:
        return args.func(args)
    except SpecError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
