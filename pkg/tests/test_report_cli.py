import json

import pytest

from krfusion.cli import main
from krfusion.groupring import LaurentPoly
from krfusion.nu import format_nu, parse_nu
from krfusion.report import CSV_COLUMNS, SCHEMA, emit_report, exit_code, parse_csv
from krfusion.verify import VerificationReport, verify_md, verify_xm


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_nu():
    assert parse_nu(" (1, 1) ; (2,2)") == ((1, 1), (2, 2))
    assert parse_nu("") == ()
    assert format_nu(((1, 1), (2, 2))) == "(1,1);(2,2)"
    with pytest.raises(ValueError):
        parse_nu("(1;1)")


def test_verify_examples():
    assert verify_md("A", 1, ((1, 1), (1, 1))).verdict
    r = verify_md("D", 4, ((2, 1),))
    assert r.verdict
    assert r.sides["mside"] == {(0, 1, 0, 0): LaurentPoly({0: 1}), (0, 0, 0, 0): LaurentPoly({-1: 1})}
    assert verify_md("A", 2, ((1, 1), (2, 2))).verdict
    for nu in (((1, 1), (1, 1)), ((1, 2), (1, 1))):
        assert verify_xm("A", 1, nu).verdict
    assert verify_xm("A", 2, ((1, 1), (1, 1), (2, 1))).verdict


def test_failing_report_exit_code_and_diff():
    bad = VerificationReport(check="md", family="A", rank=1, nu=((1, 1),),
                             sides={"dside": {(1,): LaurentPoly({0: 1})},
                                    "mside": {(1,): LaurentPoly({-1: 1})}},
                             verdict=False, diff=[((1,), LaurentPoly({0: 1}), LaurentPoly({-1: 1}))])
    assert exit_code([bad]) == 1
    assert exit_code([]) == 0
    text = emit_report([bad], "text")
    assert "[FAIL]" in text and "! 1*w1: 1 != 1*q^-1" in text
    doc = json.loads(emit_report([bad], "json"))
    assert doc["all_ok"] is False
    assert doc["reports"][0]["diff"][0]["mside"] == [{"exponent": "-1", "coeff": 1}]


def test_csv_roundtrip():
    reports = [verify_md("A", 2, ((1, 1), (2, 1), (1, 1))), verify_xm("A", 1, ((1, 1),) * 3)]
    text = emit_report(reports, "csv")
    assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
    back = parse_csv(text)
    for r in reports:
        assert back[(r.check, r.family, r.rank, r.nu)] == r.sides


def test_json_schema():
    doc = json.loads(emit_report([verify_md("A", 1, ((1, 1),))], "json"))
    assert doc["schema"] == SCHEMA
    item = doc["reports"][0]
    assert item["C"] == "1/4"
    assert item["sides"]["dside"] == [{"mu": "1*w1", "poly": [{"exponent": "0", "coeff": 1}]}]


def test_cli_dside_text(capsys):
    code, out, _ = run(capsys, "dside", "--type", "A", "--rank", "1", "--nu", "(1,1);(1,1)",
                       "--format", "text")
    assert code == 0
    assert out == "C = 1\n2*w1: 1\n0*w1: 1*q^-1\n"


def test_cli_raw_and_json(capsys):
    code, out, _ = run(capsys, "dside", "--type", "A", "--rank", "1", "--nu", "(1,1)", "--raw")
    doc = json.loads(out)
    assert code == 0 and doc["C"] == "1/4" and len(doc["raw"]) == 2


def test_cli_mside_xside_csv(capsys):
    args = ["--type", "A", "--rank", "2", "--nu", "(1,1);(1,1)", "--format", "csv"]
    _, m, _ = run(capsys, "mside", *args)
    _, x, _ = run(capsys, "xside", *args)
    assert m == x == "mu,q_exponent,coeff\n2*w1+0*w2,0,1\n0*w1+1*w2,-1,1\n"


def test_cli_verify_byte_stable(capsys, tmp_path):
    args = ["verify-md", "--type", "A", "--rank", "2", "--nu", "(1,1);(2,1)", "--nu", "(2,2)",
            "--no-timings"]
    code1, a, _ = run(capsys, *args)
    code2, b, _ = run(capsys, *args, "--jobs", "2")
    assert code1 == code2 == 0 and a == b
    assert json.loads(a)["all_ok"] is True


def test_cli_empty_verify(capsys):
    code, out, _ = run(capsys, "verify-xm", "--type", "A", "--rank", "1", "--format", "text")
    assert code == 0 and out.strip() == "0/0 checks passed"


def test_cli_figures(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify-xm", "--type", "A", "--rank", "1", "--nu", "(1,1);(1,2)",
                     "--figures", str(tmp_path / "fig"), "--output", str(out))
    assert code == 0 and out.exists()
    pngs = sorted(p.name for p in (tmp_path / "fig").iterdir())
    assert pngs == ["timings.png", "xm_A1_1-1_1-2.png"]
    assert all((tmp_path / "fig" / p).read_bytes()[:4] == b"\x89PNG" for p in pngs)


def test_cli_dump_crystal(capsys, tmp_path):
    dump = tmp_path / "b.tsv"
    code, _, _ = run(capsys, "xside", "--type", "A", "--rank", "1", "--nu", "(1,1)",
                     "--dump-crystal", str(dump))
    assert code == 0
    lines = dump.read_text().splitlines()
    assert "B1,1\t1\t1\tlower\t2" in lines and "B1,1\t2\t0\tlower\t1" in lines


def test_cli_reduced_word_and_char(capsys):
    code, out, _ = run(capsys, "reduced-word", "--type", "A", "--rank", "1", "--node", "1")
    doc = json.loads(out)
    assert code == 0 and doc["word"] == [1] and doc["sigma"] == [1, 0]
    code, out, _ = run(capsys, "char", "--type", "A", "--rank", "1", "--mu", "2*w1", "--format", "text")
    assert code == 0 and len(out.splitlines()) == 3


@pytest.mark.parametrize("argv,code", [
    (["dside", "--type", "D", "--rank", "3", "--nu", "(1,1)"], 2),
    (["dside", "--type", "A", "--rank", "1", "--nu", "(2,1)"], 2),
    (["xside", "--type", "D", "--rank", "4", "--nu", "(1,1)"], 2),
    (["dside", "--type", "A", "--rank", "1", "--nu", "(1,2);(1,1)"], 2),
    (["char", "--type", "A", "--rank", "2", "--mu", "1*w1+-1*w2"], 2),
    (["dside", "--type", "A", "--rank", "2", "--nu", "(1,2);(2,2)", "--budget", "3"], 3),
    (["mside", "--type", "A", "--rank", "1", "--nu", "(1,1)", "--output", "/proc/nope/x"], 4),
])
def test_cli_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code
