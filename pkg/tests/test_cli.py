import json

import pytest

from hecnum import cli

TABLE_53 = """1 81
2 2603
3 149139
4 7895683
5 418126881
6 22164362483
7 1174708903995
8 62259735011555
9 3299763597822513
10 174887472456640063
11 9269035932800128137
12 491258904185947375819
13 26036721926414947795674
"""


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lpoly_text(capsys):
    code, out, _ = run_cli(
        capsys, "lpoly", "--ell", "13", "--q", "53", "--a", "44", "--b", "23",
        "--char-base", "2")
    assert code == 0
    assert "class_number: 35580222353" in out
    assert "c: 1 27 261 573 -6577 -31251 28913" in out


def test_classnum_json(capsys):
    code, out, _ = run_cli(
        capsys, "classnum", "--ell", "13", "--q", "53", "--a", "44", "--b", "23",
        "--char-base", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"class_number": "35580222353"}


def test_points_table_verbatim(capsys):
    code, out, _ = run_cli(
        capsys, "points", "--ell", "13", "--q", "53", "--a", "44", "--b", "23",
        "--char-base", "2", "--t", "1..13")
    assert code == 0
    assert out == TABLE_53


def test_trace_range(capsys):
    code, out, _ = run_cli(
        capsys, "trace", "--ell", "13", "--q", "53", "--a", "44", "--b", "23",
        "--char-base", "2", "--t", "13")
    assert code == 0
    assert out.strip() == "13 -808461599700"


def test_extension_field_grammar(capsys):
    code, out, _ = run_cli(
        capsys, "classnum", "--ell", "31", "--q", "5^2", "--a", "g^14",
        "--b", "g^17")
    assert code == 0
    assert out.strip() == "917199559306470093824"


def test_coefficient_list_grammar(capsys):
    # [c0, c1] lists denote the same elements as g^k powers
    code_a, out_a, _ = run_cli(
        capsys, "classnum", "--ell", "5", "--q", "31", "--a", "3", "--b", "7")
    code_b, out_b, _ = run_cli(
        capsys, "classnum", "--ell", "5", "--q", "31", "--a", "[3]", "--b", "[7]")
    assert code_a == code_b == 0
    assert out_a == out_b


def test_closed_form_large(capsys):
    code, out, _ = run_cli(capsys, "closed-form", "--ell", "199", "--q", "11")
    assert code == 0
    h = str((11**11 + 1) ** 9)
    assert len(h) == 104
    assert f"class_number: {h}" in out


def test_closed_form_split(capsys):
    code, out, _ = run_cli(
        capsys, "closed-form", "--ell", "7", "--q", "11",
        "--kappa-square", "true")
    assert code == 0
    assert "class_number: 1288" in out


def test_jacobi_report(capsys):
    code, out, _ = run_cli(
        capsys, "jacobi", "--ell", "5", "--q", "31", "--char-base", "3",
        "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["jacobi"]["coeffs"] == [2, 0, 2, -4, -1]
    assert doc["identities"]["all_passed"] is True


def test_average_json(capsys):
    code, out, _ = run_cli(
        capsys, "average", "--ell", "5", "--q", "31", "--split", "square",
        "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["average"] == {"num": "1024", "den": "1"}
    assert doc["family_size"] == 465


def test_average_trace_mode(capsys):
    code, out, _ = run_cli(
        capsys, "average", "--ell", "5", "--q", "31", "--t", "5")
    assert code == 0
    assert "t=5 split=square average_trace=-9196" in out
    assert "t=5 split=non-square average_trace=9196" in out


def test_verify_ok(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--ell", "13", "--q", "53", "--a", "44", "--b", "23",
        "--t", "1..3")
    assert code == 0
    assert out.count("ok") == 3


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "count_points_naive", lambda *a, **k: 0)
    code, _, err = run_cli(
        capsys, "verify", "--ell", "13", "--q", "53", "--a", "44", "--b", "23",
        "--t", "1")
    assert code == 3
    assert "mismatch" in err.lower()


def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "classnum", "--ell", "5", "--q", "9^1", "--a", "1", "--b", "2")
    assert code == 1
    assert "error" in err


def test_budget_error_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--ell", "13", "--q", "53", "--a", "44", "--b", "23",
        "--t", "5", "--max-elements", "1000")
    assert code == 2


def test_genus_zero_classnum(capsys):
    code, out, _ = run_cli(
        capsys, "classnum", "--ell", "5", "--q", "31", "--a", "2", "--b", "1")
    assert code == 0
    assert out.strip() == "1"


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"char-base": "2"}))
    code, out, _ = run_cli(
        capsys, "classnum", "--ell", "13", "--q", "53", "--a", "44", "--b", "23",
        "--config", str(cfg))
    assert code == 0
    assert out.strip() == "35580222353"


def test_t_single_and_range_parse():
    assert list(cli.parse_t_range("4")) == [4]
    assert list(cli.parse_t_range("2..5")) == [2, 3, 4, 5]


def test_field_size_parse():
    assert cli.parse_field_size("53") == (53, 1)
    assert cli.parse_field_size("5^6") == (5, 6)
