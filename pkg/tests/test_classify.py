import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from su2free.classify import (
    FamilySpec,
    ROWS,
    THEOREMS,
    compare_with_expected,
    crosscheck,
    enumerate_family,
    form_strict,
    materialize,
    predicate,
    splittable_envelope,
    verify_one,
)
from su2free.classify.crosscheck import expected_keys, load_expected, mismatch_key, third_factors
from su2free.classify.families import SPLITTABLE_ROWS, predicate_simple, predicate_splittable, row_of
from su2free.classify.materialize import splittable_factors
from su2free.freeness import is_free, splittable_free_test
from su2free.groups import build_group


def test_predicate_simple_examples():
    assert predicate_simple(7, 2, 4)
    # r, s = +-1 is excluded from the list even though it can be free
    assert not predicate_simple(7, 1, 6)
    assert predicate_simple(5, 2, 3)


@pytest.mark.parametrize("row,params,expected", [
    ("Z(n) x 2I x 2I", {"n": 7}, True),
    ("Z(n) x 2I x 2I", {"n": 5}, False),
    ("Z(n) x 2T x 2O", {"n": 5}, True),
    ("Z(n) x Z(m) x Z(l)", {"n": 2, "m": 3, "l": 4}, True),
    ("Z(n) x Z(m) x Z(l)", {"n": 2, "m": 4, "l": 6}, False),
    ("Z(n) x Z(m) x BD(l)", {"n": 3, "m": 3, "l": 2}, True),
    ("Z(n) x BD(m) x BD(l)", {"n": 2, "m": 3, "l": 3}, False),
    ("Z(n) x Z(m) x 2I", {"n": 5, "m": 10}, False),
    ("Z(n) x Z(m) x 2I", {"n": 7, "m": 7}, True),
])
def test_predicate_splittable_examples(row, params, expected):
    assert predicate_splittable(row, **params) == expected
    spec = FamilySpec.make("main", row, **params)
    assert is_free(materialize(spec))[0] == expected


def test_splittable_factor_expansion():
    spec = FamilySpec.make("main", "Z(n) x BD(m) x BD(l)", n=3, m=4, l=5)
    assert splittable_factors(spec) == ("Z(3)", "BD(4)", "BD(5)")


def test_envelope_is_the_splittable_test():
    for a, b, d in itertools.product(["Z(5)", "BD(3)", "2T", "2I"], repeat=3):
        gs = [build_group(x) for x in (a, b, d)]
        assert splittable_envelope(a, b, d) == splittable_free_test(*gs)


def test_every_theorem_enumerates_and_rows_exist():
    small = {"n": 3, "m": 4}
    for th in THEOREMS:
        specs = list(enumerate_family(th, small))
        assert specs, th
        if th not in ("simple", "main"):
            assert {s.row for s in specs} == {k for (t, k) in ROWS if t == th}
            for s in specs[:5]:
                assert row_of(s).theorem == th


@pytest.mark.parametrize("theorem", THEOREMS)
def test_enumeration_is_deterministic(theorem):
    b = {"n": 3, "m": 4}
    assert list(enumerate_family(theorem, b)) == list(enumerate_family(theorem, b))


def test_row_filter_and_unknown_theorem():
    specs = list(enumerate_family("typeB", {"n": 3, "m": 3}, row="pow"))
    assert specs and all(s.row == "pow" for s in specs)
    with pytest.raises(ValueError):
        list(enumerate_family("nope"))


def test_third_factors():
    assert third_factors(6) == ["Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "BD(2)", "BD(3)", "2T", "2O", "2I"]


def test_type3_bd2k_row_is_free_only_through_the_literal_condition():
    for spec in enumerate_family("type3", {"n": 5, "m": 8}, row="BD2k"):
        rep = verify_one(spec)
        assert rep.predicate == rep.oracle


def test_form_strict_is_necessary_for_free_type_iii_members():
    for spec in enumerate_family("qfinal", {"n": 3, "m": 10}):
        rep = verify_one(spec)
        if rep.oracle:
            A, A0, B, B0 = row_of(spec).quad(spec.p)
            assert form_strict(A, A0, B, B0, spec.p["D"]), spec


def test_form_strict_examples():
    assert form_strict("Z(4)", "Z(2)", "Z(4)", "Z(2)", "Z(9)")
    assert not form_strict("2I", "Z(2)", "2I", "Z(2)", "Z(4)")
    assert form_strict("Z(6)", "Z(3)", "2O", "2T", "Z(2)")


def test_report_records():
    rep = verify_one(FamilySpec.make("typeB", "pow", n=4, r=3, D="Z(2)"))
    rec = rep.to_record()
    assert rec["family"] == "typeB" and rec["row"] == "pow"
    assert rec["params"] == {"n": 4, "r": 3, "D": "Z(2)"}
    assert rec["predicate"] == rep.predicate and rec["oracle"] == rep.oracle
    assert ("witness" in rec) == (not rep.oracle)


def test_discrepancy_data_shape():
    data = load_expected()
    assert set(data) == {"crosscheck", "tables"}
    for item in data["crosscheck"]:
        assert set(item) >= {"family", "row", "params", "predicate", "oracle", "reason"}
        assert item["predicate"] != item["oracle"]
        assert item["family"] in THEOREMS
    counts = {th: len(expected_keys(th)) for th in THEOREMS}
    assert counts == {"simple": 0, "main": 2, "typeB": 30, "type3": 39, "qfinal": 901, "qfinal2": 0}
    assert len(data["tables"]) == 3


def test_shipped_discrepancies_reproduce_at_small_bounds():
    for th, b in [("main", {"n": 10}), ("typeB", {"n": 6, "m": 10}), ("type3", {"n": 4, "m": 10})]:
        reports = crosscheck(th, b)
        unexpected, missing = compare_with_expected(reports, th, b)
        assert not unexpected and not missing, th


def test_qfinal_g_row_is_free_with_trivial_coincidences():
    # the row predicate is never true, but C x Z(2) is free for k = 1, p = 2
    spec = FamilySpec.make("qfinal", "g", k=1, p=2, D="Z(2)")
    rep = verify_one(spec)
    assert rep.oracle and not rep.predicate
    assert mismatch_key(spec) in expected_keys("qfinal")


@given(st.sampled_from(sorted(SPLITTABLE_ROWS)), st.integers(2, 12), st.integers(2, 12), st.integers(2, 12))
def test_splittable_predicate_matches_oracle_off_expected_list(row, n, m, l):
    params = {"n": n}
    if row.count("(") >= 2:
        params["m"] = m
    if row.count("(") >= 3:
        params["l"] = l
    spec = FamilySpec.make("main", row, **params)
    rep = verify_one(spec)
    assert rep.mismatch == (mismatch_key(spec) in expected_keys("main"))
    assert predicate(spec) == rep.predicate
