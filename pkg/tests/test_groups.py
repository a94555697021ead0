from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from su2free.exact import SurdValue, parse_realpart, realpart_key
from su2free.groups import (
    GroupError,
    all_automorphisms,
    apply_automorphism,
    build_group,
    closure,
    conjugacy_class_labels,
    conjugacy_classes,
    identify,
    is_homomorphism,
    normal_subgroups,
    parse_kind,
    quotient,
    real_part_set,
    standard_subgroup,
)
from su2free.quaternions import AngleQ, parse_element, qmul, qre
from su2free.tables import expected_real_parts

ORDER = {"Z": lambda n: n, "BD": lambda n: 4 * n}


@pytest.mark.parametrize("desc", [f"Z({n})" for n in range(1, 31)] + [f"BD({n})" for n in range(2, 16)]
                         + ["2T", "2O", "2I"])
def test_orders_closure_and_inverses(desc):
    g = build_group(desc)
    k = parse_kind(desc)
    expected = {"2T": 24, "2O": 48, "2I": 120}.get(desc) or ORDER[k.family](k.n)
    assert g.order == expected
    els = [g.element(i) for i in range(g.order)]
    assert len(set(els)) == g.order
    tab = g.table()
    assert all(sorted(row) == list(range(g.order)) for row in tab.tolist())
    assert all(g.mul(i, g.inv(i)) == 0 for i in range(g.order))


@pytest.mark.parametrize("desc", ["2T", "BD(3)", "2O", "Z(9)"])
def test_table_agrees_with_quaternion_product(desc):
    g = build_group(desc)
    for a in range(g.order):
        for b in range(0, g.order, 5):
            assert g.element(int(g.mul(a, b))) == qmul(g.element(a), g.element(b))


def test_element_descriptions():
    t = build_group("2T")
    coords = [tuple(float(c) for c in t.element(i).coords) for i in range(24)]
    units = [c for c in coords if sorted(map(abs, c)) == [0, 0, 0, 1]]
    halves = [c for c in coords if all(abs(abs(x) - 0.5) < 1e-12 for x in c)]
    assert len(units) == 8 and len(halves) == 16
    assert build_group("Z(1)").order == 1
    bd = build_group("BD(3)")
    expected = {AngleQ(e, Fraction(x, 6)) for e in (0, 1) for x in range(6)}
    assert {bd.element(i) for i in range(12)} == expected


def test_generators_regenerate_the_group():
    for desc in ["2T", "2O", "2I", "BD(7)", "Z(11)"]:
        g = build_group(desc)
        assert closure(g, g.generators()).size == g.order


def _keys(strings):
    return {realpart_key(parse_realpart(s)) for s in strings}


def test_real_part_sets():
    assert real_part_set(build_group("Z(2)")) == _keys(["1", "-1"])
    assert real_part_set(build_group("2T")) == _keys(["0", "1", "-1", "1/2", "-1/2"])
    assert real_part_set(build_group("2I")) == _keys(
        ["0", "1", "-1", "1/2", "-1/2", "1/4 + 1/4*s5", "1/4 - 1/4*s5", "-1/4 + 1/4*s5", "-1/4 - 1/4*s5"])
    # computed 2O set: the +-sqrt(2)/4 entries of the published row do not occur
    assert real_part_set(build_group("2O")) == _keys(["0", "1", "-1", "1/2", "-1/2", "1/2*s2", "-1/2*s2"])


@pytest.mark.parametrize("n", range(2, 25))
def test_cyclic_and_dicyclic_real_parts(n):
    assert real_part_set(build_group(f"Z({n})")) == expected_real_parts(f"Z({n})")
    assert real_part_set(build_group(f"BD({n})")) == expected_real_parts(f"BD({n})")


def test_conjugacy_classes():
    cl = conjugacy_classes(build_group("2I"))
    assert sorted(c[1] for c in cl) == [1, 1, 12, 12, 12, 12, 20, 20, 30]
    assert len(conjugacy_classes(build_group("Z(9)"))) == 9
    cl = conjugacy_classes(build_group("2O"))
    assert len(cl) == 8 and sum(c[1] for c in cl) == 48
    assert sorted(c[1] for c in cl) == [1, 1, 6, 6, 6, 8, 8, 12]


@pytest.mark.parametrize("desc", ["2T", "2O", "2I", "BD(5)"])
def test_class_real_parts_constant(desc):
    g = build_group(desc)
    lab = conjugacy_class_labels(g)
    for rep in np.unique(lab):
        assert len({int(g.rp_ids[i]) for i in np.flatnonzero(lab == rep)}) == 1


def test_normal_subgroups():
    subs = normal_subgroups(build_group("Z(7)"))
    assert [s.order for s, _ in subs] == [1, 7]
    found = {(s.order, name) for s, name in normal_subgroups(build_group("2O"))}
    assert (24, "Z(2)") in found and (8, "D(3)") in found and (2, "O") in found


@pytest.mark.parametrize("big,small,qname", [
    ("2O", "2T", "Z(2)"), ("2T", "BD(2)", "Z(3)"), ("2O", "BD(2)", "D(3)"), ("2T", "Z(2)", "T"),
    ("2O", "Z(2)", "O"), ("2I", "Z(2)", "I"), ("BD(6)", "Z(4)", "D(3)"), ("BD(15)", "Z(5)", "BD(3)"),
    ("BD(5)", "Z(5)", "Z(4)"), ("BD(8)", "BD(4)", "Z(2)"), ("Z(12)", "Z(3)", "Z(4)"),
])
def test_quotients_match_subgroup_tables(big, small, qname):
    g = build_group(big)
    q, proj = quotient(g, standard_subgroup(g, small))
    assert q.order == g.order // standard_subgroup(g, small).order
    assert identify(q) == qname


def test_quotient_by_whole_group_is_trivial():
    g = build_group("2T")
    q, _ = quotient(g, g.all)
    assert q.order == 1


def test_automorphism_examples():
    z = build_group("Z(9)")
    assert np.array_equal(apply_automorphism("pow(1)", z), z.all)
    g = build_group("2I")
    psi = apply_automorphism("out2I", g)
    t = g.index_of(parse_element("q(1/4 + 1/4*s5,-1/4 + 1/4*s5,1/2,0)"))
    assert qre(g.element(int(psi[t]))) == SurdValue(Fraction(1, 4), 0, Fraction(-1, 4))


@pytest.mark.parametrize("spec,desc", [
    ("out2I", "2I"), ("out2O", "2O"), ("out2T", "2T"), ("aff(5,3)", "BD(6)"), ("pow(2)", "Z(9)"),
    ("inner(q(1/2*s2,1/2*s2,0,0))", "BD(2)"),
])
def test_automorphisms_are_bijective_homomorphisms(spec, desc):
    g = build_group(desc)
    f = apply_automorphism(spec, g)
    assert np.unique(f).size == g.order
    tab = g.table()
    assert np.array_equal(f[tab], tab[np.ix_(f, f)])


def test_inner_automorphisms_preserve_real_part_multiset():
    g = build_group("2O")
    for h in range(0, 48, 7):
        f = g.mul(g.mul(h, g.all), g.inv(h))
        assert Counter(g.rp_ids[f].tolist()) == Counter(g.rp_ids.tolist())


def test_automorphism_group_orders():
    assert len(all_automorphisms(build_group("Z(7)"))) == 6
    assert len(all_automorphisms(build_group("2T"))) == 24


def test_bad_inputs():
    with pytest.raises(GroupError):
        build_group("BD(1)")
    with pytest.raises(ValueError):
        parse_kind("2J")
    with pytest.raises(GroupError):
        apply_automorphism("pow(3)", build_group("Z(9)"))
