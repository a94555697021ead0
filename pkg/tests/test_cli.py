import json

import pytest

from su2free.cli import SpecError, main, parse_bounds, parse_spec
from su2free.freeness import SemiSplittable, Simple, Splittable


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_check_free_and_not_free(capsys):
    rc, out, _ = run(capsys, "check", "Z(7) x 2I x 2I")
    assert rc == 0 and "free" in out and "100800" in out
    rc, out, _ = run(capsys, "check", "Z(2) x Z(2) x Z(2)", "--format", "records")
    rec = json.loads(out)
    assert rc == 3 and rec["free"] is False and "witness" in rec


def test_check_simple_and_json(capsys):
    assert run(capsys, "check", "Simple(7,2,4)")[0] == 0
    doc = json.dumps({"kind": "semisplittable", "A": "2I", "A0": "Z(2)", "B": "2I", "B0": "Z(2)",
                      "theta": "out2I", "D": "Z(7)", "position": 3})
    rc, out, _ = run(capsys, "check", doc, "--format", "records")
    assert rc == 0 and json.loads(out)["order"] == 120 * 2 * 7


def test_check_reads_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("2T x 2O x Z(5)")
    assert run(capsys, "check", str(f))[0] == 0


def test_parse_errors_carry_positions(capsys):
    with pytest.raises(SpecError) as e:
        parse_spec("Z(7) x Q(3) x 2I")
    assert e.value.pos == 7
    rc, _, err = run(capsys, "check", "Z(7) x Q(3) x 2I")
    assert rc == 2 and "^" in err
    with pytest.raises(SpecError) as e:
        parse_spec('{"kind": "splittable", "factors": ')
    assert e.value.pos is not None


def test_parse_spec_kinds():
    assert isinstance(parse_spec("Z(3) x BD(4) x 2T"), Splittable)
    assert isinstance(parse_spec("C(5,2,3)"), Simple)
    doc = {"kind": "family", "theorem": "typeB", "row": "pow", "params": {"n": 4, "r": 3, "D": "Z(3)"}}
    assert isinstance(parse_spec(json.dumps(doc)), SemiSplittable)


def test_parse_bounds():
    assert parse_bounds("n=5,m=10") == {"n": 5, "m": 10}
    assert parse_bounds('{"n": 4}') == {"n": 4}
    assert parse_bounds(None) == {}
    with pytest.raises(SpecError):
        parse_bounds("n=five")


def test_budget_exit_code(capsys):
    assert run(capsys, "check", "2I x 2I x 2I", "--budget", "1000")[0] == 4


def test_enumerate_records(capsys):
    rc, out, _ = run(capsys, "enumerate", "--family", "splittable", "--bounds", "n=3,kinds=Z", "--format", "records")
    recs = [json.loads(line) for line in out.splitlines()]
    assert rc == 0 and len(recs) == 4
    assert recs[0]["params"]["factors"] == ["Z(2)", "Z(2)", "Z(2)"] and recs[0]["free"] is False
    rc, out, _ = run(capsys, "enumerate", "--family", "typeB", "--row", "pow", "--bounds", "n=3,m=3")
    assert rc == 0 and out.count("\n") > 0


def test_verify_summary(capsys, tmp_path):
    rc, _, err = run(capsys, "verify", "simple", "--bounds", "n=7")
    assert rc == 0 and "0 unexpected" in err
    out = tmp_path / "v.jsonl"
    rc, _, _ = run(capsys, "verify", "main", "--bounds", "n=5", "--format", "records", "--out", str(out))
    assert rc == 0
    assert all(json.loads(line)["family"] == "main" for line in out.read_text().splitlines())


def test_tables_deterministic(capsys):
    _, first, _ = run(capsys, "tables")
    _, second, _ = run(capsys, "tables")
    assert first == second and "conjugacy classes in 2I" in first


@pytest.mark.parametrize("argv,key,value", [
    (["solve", "4", "6", "2"], "step", [3, -2]),
    (["res", "2", "1", "1"], "solvable", True),
    (["simple", "7", "2", "4"], "trivial_only", True),
])
def test_lemma(capsys, argv, key, value):
    rc, out, _ = run(capsys, "lemma", *argv)
    rec = json.loads(out)
    assert rc == 0 and rec["result"][key] == value


def test_lemma_arity(capsys):
    with pytest.raises(SystemExit):
        main(["lemma", "neg", "5"])
