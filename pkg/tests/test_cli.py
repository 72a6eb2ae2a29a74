import json

import pytest

from g2bwb.cli import EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_bott_text(capsys):
    code, out = run(capsys, "bott", "3", "-2")
    assert code == EXIT_OK
    assert out.strip() == "H^1 = nabla(0,0)"
    code, out = run(capsys, "bott", "1", "1")
    assert out.strip() == "H^0 = nabla(1,1)"
    code, out = run(capsys, "bott", "1", "-1")
    assert out.strip() == "VANISHES"


def test_bott_json_roundtrip(capsys):
    code, out = run(capsys, "bott", "3", "-2", "--format", "json")
    data = json.loads(out)
    assert data == json.loads(json.dumps(data))
    assert data["degree"] == 1 and data["weight"] == [0, 0]


def test_bott_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["bott", "x", "2"])
    assert exc.value.code == EXIT_USAGE


def test_ext_command(capsys):
    code, out = run(capsys, "ext", "--parabolic", "short", "M", "E(s2s1s2)", "--p", "11")
    assert code == EXIT_OK
    assert "Ext^1: L(0,0)" in out

    code, out = run(capsys, "ext", "--parabolic", "short", "E(e)", "E(s2)")
    assert code == EXIT_OK
    assert out.strip().endswith("0")

    code, out = run(capsys, "ext", "--parabolic", "long", "E(s1s2s1)", "E(s1s2s1)")
    assert code == EXIT_OK
    assert "Ext^0: L(0,0)" in out


def test_ext_unknown_name(capsys):
    code, _ = run(capsys, "ext", "--parabolic", "short", "E(s1)", "E(e)")
    assert code == EXIT_USAGE
    code, _ = run(capsys, "ext", "--parabolic", "long", "M", "E(e)")
    assert code == EXIT_USAGE


def test_ext_json(capsys):
    code, out = run(capsys, "ext", "M", "M", "--format", "json")
    data = json.loads(out)
    assert data["exact"] is True
    assert data["degrees"]["0"] == [["L", 0, 0]]
    assert data["degrees"]["1"] == [["L", 1, 0]]


def test_tensor_command(capsys):
    code, out = run(capsys, "tensor", "1", "0", "0", "1")
    assert code == EXIT_OK
    assert out.strip() == "nabla(1,1) + nabla(2,0) + nabla(1,0)"
    code, out = run(capsys, "tensor", "1", "0", "0", "1", "--format", "latex")
    assert "\\nabla(1,1)" in out


def test_restrict_command(capsys):
    code, out = run(capsys, "restrict", "1", "0", "--parabolic", "short")
    assert code == EXIT_OK
    assert out.strip() == "nablaP(1,0) / nablaP(2,-1) / nablaP(1,-1)"
    code, out = run(capsys, "restrict", "0", "1", "--parabolic", "short", "--format", "latex")
    assert "\\begin{tabular}{|c|}" in out


def test_report_chevalley(capsys):
    code, out = run(capsys, "report", "chevalley")
    assert code == EXIT_OK
    assert "PASS" in out


def test_report_collection_json(capsys):
    code, out = run(capsys, "report", "collection", "--parabolic", "long", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["passed"] is True
    assert data["verdicts"]["hom_matches_bruhat"] is True


def test_report_frobenius(capsys):
    code, out = run(capsys, "report", "frobenius", "--parabolic", "short")
    assert code == EXIT_OK
    assert "NONZERO" in out and "witness" in out


def test_report_karoubi_small_box(capsys):
    code, out = run(capsys, "report", "karoubi", "--parabolic", "long", "--box", "14")
    assert code == EXIT_OK
    assert "PASS" in out


def test_modchar_command(capsys):
    code, out = run(capsys, "modchar", "--p", "11", "--w", "s1s2")
    assert code == EXIT_OK
    assert "dim 4284" in out
    code, out = run(capsys, "modchar", "--p", "11", "--w", "e")
    assert "dim 1" in out


def test_latex_unavailable_is_usage_error(capsys):
    code, _ = run(capsys, "report", "chevalley", "--format", "latex")
    assert code == EXIT_USAGE


def test_all_report_jsons_roundtrip(capsys):
    for argv in (["report", "collection", "--parabolic", "short", "--format", "json"],
                 ["report", "frobenius", "--parabolic", "long", "--format", "json"],
                 ["report", "chevalley", "--format", "json"],
                 ["report", "karoubi", "--parabolic", "long", "--format", "json"]):
        code, out = run(capsys, *argv)
        data = json.loads(out)
        assert json.loads(json.dumps(data)) == data
