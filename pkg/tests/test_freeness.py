import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from su2free.exact import ONE, realpart_equal, realpart_float
from su2free.freeness import (
    BudgetExceeded,
    Explicit,
    SemiSplittable,
    Simple,
    Splittable,
    coincidence_set,
    is_free,
    splittable_free_test,
)
from su2free.goursat import build_goursat, graph_of, quintuple_from_descriptors
from su2free.groups import build_group, real_part_set
from su2free.quaternions import AngleQ, SurdQ, parse_element, qfloat, qinv, qmul, qre
from quintuple_library import LIBRARY

DESCS = [f"Z({n})" for n in range(1, 13)] + [f"BD({n})" for n in range(2, 7)] + ["2T", "2O", "2I"]


def _witness_ok(w):
    rps = [qre(q) for q in w]
    return realpart_equal(rps[0], rps[1]) and realpart_equal(rps[1], rps[2]) and not realpart_equal(rps[0], ONE)


def float_oracle(groups):
    """Brute-force float check over real-part values, independent of the kernels."""
    vals = [{round(realpart_float(qre(g.element(i))), 9) for i in range(g.order)} for g in groups]
    return vals[0] & vals[1] & vals[2] <= {1.0}


def test_examples():
    free, w = is_free(Splittable(*(build_group("Z(2)"),) * 3))
    assert not free and [str(q) for q in w] == ["e(1/2)"] * 3
    assert is_free(Splittable(build_group("Z(7)"), build_group("2I"), build_group("2I")))[0]
    assert is_free(Simple(7, 2, 4)) == (True, None)


def test_coincidence_sets():
    keys = {qre(parse_element(x)) for x in ["e(0)", "e(1/2)", "e(1/3)", "e(1/6)", "e(1/4)"]}
    assert coincidence_set(graph_of("out2O", build_group("2O"))) == keys
    assert coincidence_set(graph_of("id", build_group("BD(5)"))) == real_part_set(build_group("BD(5)"))
    c = build_goursat(quintuple_from_descriptors("BD(6)", "BD(3)", "Z(2)", "Z(1)"))
    assert coincidence_set(c) == {ONE}


def test_splittable_free_test_examples():
    g = build_group
    assert splittable_free_test(g("Z(7)"), g("2T"), g("2O"))
    assert not splittable_free_test(g("Z(2)"), g("Z(2)"), g("Z(2)"))
    assert not splittable_free_test(g("Z(3)"), g("Z(6)"), g("Z(15)"))
    assert splittable_free_test(g("Z(3)"), g("Z(5)"), g("Z(15)"))


def test_splittable_test_equals_oracle_exhaustively():
    pool = [f"Z({n})" for n in range(1, 21)] + [f"BD({n})" for n in range(2, 11)] + ["2T", "2O", "2I"]
    for a, b, c in itertools.combinations_with_replacement(pool, 3):
        gs = [build_group(x) for x in (a, b, c)]
        free, w = is_free(Splittable(*gs))
        assert free == splittable_free_test(*gs)
        if not free:
            assert _witness_ok(w)


@pytest.mark.parametrize("seed", range(10))
def test_splittable_matches_float_oracle(seed):
    rng = random.Random(seed)
    for _ in range(20):
        gs = [build_group(rng.choice(DESCS)) for _ in range(3)]
        assert is_free(Splittable(*gs))[0] == float_oracle(gs)


spl = st.lists(st.sampled_from(DESCS), min_size=3, max_size=3)


@given(spl)
def test_permutation_invariance_splittable(descs):
    gs = [build_group(d) for d in descs]
    verdicts = {is_free(Splittable(*(gs[i] for i in p)))[0] for p in itertools.permutations(range(3))}
    assert len(verdicts) == 1


@given(st.sampled_from(LIBRARY[:16]), st.sampled_from(DESCS), st.integers(1, 3))
def test_semisplittable_position_invariance_and_witness(entry, d, pos):
    c = build_goursat(quintuple_from_descriptors(*entry[:5]))
    single = build_group(d)
    base = is_free(SemiSplittable(3, c, single))
    other = is_free(SemiSplittable(pos, c, single))
    assert base[0] == other[0]
    if not other[0]:
        assert _witness_ok(other[1])


@pytest.mark.parametrize("entry", LIBRARY[:14])
def test_semisplittable_equals_coincidence_criterion(entry):
    c = build_goursat(quintuple_from_descriptors(*entry[:5]))
    w = coincidence_set(c)
    pairs = c.pairs()
    for d in ["Z(2)", "Z(3)", "Z(5)", "Z(8)", "BD(3)", "2T", "2I"]:
        single = build_group(d)
        if c.order * single.order > 10**5:
            continue
        crit = (w & real_part_set(single)) == {ONE}
        assert is_free(SemiSplittable(3, c, single))[0] == crit
        # direct scan of every triple with exact real parts
        drp = {qre(single.element(i)) for i in range(single.order)}
        brute = not any(
            realpart_equal(qre(a), qre(b)) and not realpart_equal(qre(a), ONE)
            and any(realpart_equal(qre(a), r) for r in drp)
            for a, b in pairs
        )
        assert brute == crit


def _as_surd(q: AngleQ) -> SurdQ:
    w, x, y, z = qfloat(q)
    text = {0.0: "0", 1.0: "1", -1.0: "-1"}
    return SurdQ(*(text[round(v, 12) + 0.0] for v in (w, x, y, z)))


def _closure(gens):
    els = {g for g in gens}
    frontier = list(els)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                p = tuple(qmul(x, y) for x, y in zip(a, g))
                if p not in els:
                    els.add(p)
                    new.append(p)
        frontier = new
    return els


@pytest.mark.parametrize("conj", ["q(1/2,1/2,1/2,1/2)", "q(1/2*s2,1/2*s2,0,0)", "q(1/4 + 1/4*s5,-1/4 + 1/4*s5,1/2,0)"])
@pytest.mark.parametrize("other", ["Z(4)", "Z(3)", "Z(6)"])
def test_conjugation_invariance(conj, other):
    h = parse_element(conj)
    z4 = [_as_surd(AngleQ(0, Fraction(x, 4))) for x in range(4)]
    moved = [qmul(qmul(h, q), qinv(h)) for q in z4]
    b = build_group(other)
    bs = [b.element(i) for i in range(b.order)]
    third = [SurdQ(1, 0, 0, 0), SurdQ(-1, 0, 0, 0)]
    ex1 = Explicit(tuple((a, x, t) for a in z4 for x in bs for t in third))
    ex2 = Explicit(tuple((a, x, t) for a in moved for x in bs for t in third))
    assert is_free(ex1)[0] == is_free(ex2)[0]
    assert is_free(ex1)[0] == is_free(Splittable(build_group("Z(4)"), b, build_group("Z(2)")))[0]


@pytest.mark.parametrize("seed", range(50))
def test_subgroups_of_free_groups_are_free(seed):
    rng = random.Random(seed)
    while True:
        gs = [build_group(rng.choice(DESCS[:17])) for _ in range(3)]
        if is_free(Splittable(*gs))[0] and np.prod([g.order for g in gs]) <= 200:
            break
    gens = [tuple(g.element(rng.randrange(g.order)) for g in gs) for _ in range(2)]
    sub = _closure(gens)
    assert is_free(Explicit(tuple(sub)))[0]


def test_simple_witness_and_scan():
    free, w = is_free(Simple(5, 1, 1))
    assert not free and _witness_ok(w)


def test_budget():
    with pytest.raises(BudgetExceeded):
        is_free(Splittable(build_group("2I"), build_group("2I"), build_group("2I")), budget=10**6)


def test_explicit_requires_closure():
    q = parse_element("e(1/4)")
    with pytest.raises(ValueError):
        Explicit(((q, q, q),))
