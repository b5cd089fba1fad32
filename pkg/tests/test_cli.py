import json

from liemould.cli import main
from liemould.serialize import ncpoly_to_json
from liemould.words import A, B, ad_pow


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "e4", "--on", "a")
    assert code == 0
    assert json.loads(out) == ncpoly_to_json(ad_pow(A, 4, B))


def test_eval_deterministic(capsys):
    _, first, _ = run(capsys, "eval", "--expr", "[e4,[e6,e8]]", "--on", "a")
    _, second, _ = run(capsys, "eval", "--expr", "[e4,[e6,e8]]", "--on", "a")
    assert first == second


def test_eval_bad_expr(capsys):
    code, _, err = run(capsys, "eval", "--expr", "[e4,", "--on", "a")
    assert code == 2
    assert "error" in err


def test_dims_tsv(capsys):
    code, out, _ = run(capsys, "dims", "--from", "9", "--to", "13")
    assert code == 0
    assert out == "9\t0\t0\n11\t1\t1\n13\t2\t2\n"


def test_dims_json(capsys):
    code, out, _ = run(capsys, "dims", "--from", "9", "--to", "11", "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"n": 9, "computed": 0, "formula": 0},
        {"n": 11, "computed": 1, "formula": 1},
    ]


def test_mould_mi(capsys, tmp_path):
    path = tmp_path / "poly.json"
    path.write_text(json.dumps(ncpoly_to_json(ad_pow(A, 2, B))))
    code, out, _ = run(capsys, "mould", "--op", "mi", "--input", str(path), "--depth", "1")
    assert code == 0
    assert json.loads(out) == {"arity": 1, "terms": [{"exp": [2], "coeff": "1"}]}


def test_mould_alternal(capsys, tmp_path):
    path = tmp_path / "comm.json"
    path.write_text(
        json.dumps({"arity": 2, "terms": [{"exp": [1, 0], "coeff": "1"}, {"exp": [0, 1], "coeff": "-1"}]})
    )
    code, out, _ = run(capsys, "mould", "--op", "alternal", "--input", str(path))
    assert code == 0 and json.loads(out) == {"alternal": True}

    path.write_text(
        json.dumps({"arity": 2, "terms": [{"exp": [1, 0], "coeff": "1"}, {"exp": [0, 1], "coeff": "1"}]})
    )
    code, out, _ = run(capsys, "mould", "--op", "alternal", "--input", str(path))
    assert code == 1 and json.loads(out) == {"alternal": False}


def test_appendix_check(capsys):
    code, out, _ = run(capsys, "appendix-check", "--max-index", "4")
    assert code == 0
    report = json.loads(out)
    assert report["closed_forms_match"] and report["identity_holds"]


def test_check_relation_delta_d3(capsys):
    code, out, _ = run(capsys, "check-relation", "--fixture", "delta-d3")
    assert code == 0
    report = json.loads(out)
    assert report["member"] is True
    assert report["certificate"]["residual"] == []


def test_check_relation_delta_d2_unimplemented(capsys):
    code, _, err = run(capsys, "check-relation", "--fixture", "delta-d2")
    assert code == 2
    assert "d = 3" in err or "d = 2" in err


def test_check_relation_periods_file(capsys, tmp_path):
    path = tmp_path / "periods.json"
    path.write_text(json.dumps({"2": "4", "4": "-25", "6": "21"}))
    code, out, _ = run(
        capsys, "check-relation", "--periods", str(path), "--d", "3", "--weight", "16"
    )
    assert code == 0
    assert json.loads(out)["member"] is True


def test_lift_expr(capsys):
    code, out, _ = run(capsys, "lift", "--expr", "[e4,[e4,e6]]")
    assert code == 0
    report = json.loads(out)
    assert report["lifted"] is True
    assert report["certificate"]["coefficients"] == [{"label": [4, 4, 6], "coeff": "1"}]


def test_lift_negative(capsys):
    code, out, _ = run(capsys, "lift", "--expr", "h(2,10,3)")
    assert code == 1
    assert json.loads(out)["lifted"] is False


def test_lift_missing_args(capsys):
    code, _, err = run(capsys, "lift")
    assert code == 2


def test_acceptance_only(capsys):
    code, out, err = run(capsys, "acceptance", "--only", "A1,A2")
    assert code == 0
    report = json.loads(out)
    assert [entry["id"] for entry in report["criteria"]] == ["A1", "A2"]
    assert "A1 PASS" in err and "A2 PASS" in err


def test_acceptance_unknown_criterion(capsys):
    code, _, _ = run(capsys, "acceptance", "--only", "A42")
    assert code == 2
