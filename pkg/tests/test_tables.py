from su2free.exact import parse_realpart, realpart_key
from su2free.groups import build_group, real_part_set
from su2free.tables import (
    PUBLISHED_CONJ,
    catalog_rows,
    conjugacy_table,
    expected_real_parts,
    full_conjugacy_classes,
    published_real_parts,
    render_all,
)


def test_catalog_labels_and_orders():
    rows = {r.name: r for r in catalog_rows(6, 4)}
    assert rows["Z(6)"].label == "A5" and rows["BD(4)"].label == "D6"
    assert [rows[e].order for e in ("2T", "2O", "2I")] == [24, 48, 120]


def test_closed_form_real_parts_for_cyclic_and_dicyclic():
    for d in ["Z(1)", "Z(5)", "Z(12)", "BD(2)", "BD(7)", "BD(10)"]:
        assert {realpart_key(v) for v in real_part_set(build_group(d))} == expected_real_parts(d)


def test_e_kind_real_parts_against_published_lists():
    for e in ("2T", "2I"):
        assert {realpart_key(v) for v in real_part_set(build_group(e))} == published_real_parts(e)
    got = {realpart_key(v) for v in real_part_set(build_group("2O"))}
    # the published 2O list adds +-sqrt(2)/4, which no element has
    assert published_real_parts("2O") - got == {realpart_key(parse_realpart(s)) for s in ("1/4*s2", "-1/4*s2")}
    assert got <= published_real_parts("2O")


def test_conjugacy_2i_matches_published():
    for row, (word, size, rp) in zip(conjugacy_table("2I"), PUBLISHED_CONJ["2I"]):
        assert (row.rep, row.size) == (word, size)
        assert realpart_key(row.real_part) == realpart_key(parse_realpart(rp))


def test_conjugacy_2o_t_squared_class():
    sizes = {r.rep: r.size for r in conjugacy_table("2O")}
    assert sizes["t^2"] == 6
    assert sorted(r.size for r in full_conjugacy_classes("2O")) == [1, 1, 6, 6, 6, 8, 8, 12]


def test_class_real_parts_are_constant_and_sizes_sum_to_order():
    for name in ("2T", "2O", "2I"):
        classes = full_conjugacy_classes(name)
        assert sum(c.size for c in classes) == build_group(name).order


def test_render_all_is_stable():
    assert render_all() == render_all()
