import io
import subprocess
import sys
from pathlib import Path

import pytest

from bivinc import closed_forms
from bivinc.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run_command

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = run_command(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["avoid", "-p", "231|X=1|Y=1", "-n", "7"], "1,2,5,15,53,217,1014\n"),
        (["avoid", "-p", "21|X=1|Y=1", "-p", "12|X=1|Y=1", "-n", "5"], "1,0,0,2,14\n"),
        (["symmetry", "-k", "3", "--count"], "212\n"),
        (["symmetry", "-k", "2", "--count"], "24\n"),
        (["burnside", "-n", "5"], "61924\n"),
        (["burnside", "-n", "3", "--direct"], "212\n"),
        (["bijection", "f", "--input", "0,1,0"], "3,1,2\n"),
        (["bijection", "f", "--input", "312"], "0,1,0\n"),
        (["bijection", "h", "--input", "010"], "2,1\n"),
        (["bijection", "shiftB", "--input", "24315"], "2,5,4,1,3\n"),
        (["bijection", "colswap", "--input", "213"], "2,3,1\n"),
        (["bijection", "reverse1", "--input", "3142"], "3,1,2,4\n"),
        (["bijection", "wilf22", "--input", "1342"], "1,2,4,3\n"),
    ],
)
def test_examples(argv, expected):
    code, out = run(*argv)
    assert code == EXIT_OK
    assert out == expected


def test_burnside_label_note():
    code, out = run("burnside", "-n", "6")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "1478528"
    assert out.splitlines()[1].startswith("note: ")


def test_distribution_output():
    code, out = run("distribution", "-p", "12|X=|Y=", "-n", "3", "--jobs", "1")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "n=3  0:1 1:2 2:2 3:1"


def test_symmetry_listing():
    code, out = run("symmetry", "-k", "2")
    lines = out.splitlines()
    assert len(lines) == 24
    assert lines[0].split("\t")[0] == "12|X=0,1,2|Y="


@pytest.mark.parametrize(
    "argv",
    [
        ["avoid", "-p", "132|X=9|Y=", "-n", "3"],
        ["avoid", "-p", "132|X=0|Y=", "-n", "40"],
        ["frobnicate"],
        ["avoid", "--bogus"],
        ["classify", "-k", "5"],
        ["verify", "--id", "Z99"],
        ["bijection", "f"],
        ["bijection", "h", "--input", "0,0"],
        ["bijection", "shiftB", "--input", "123"],
        ["bijection", "colswap", "--input", "3,1,2"],
        ["bijection", "f", "--input", "1,x"],
        ["oeis", "id", "A00014", "--offline"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == EXIT_USAGE
    assert capsys.readouterr().err


def test_verify_ok():
    code, out = run("verify", "--id", "C14", "-n", "6", "--jobs", "1")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "1 ids, 0 mismatches"


def test_verify_without_formula():
    code, out = run("verify", "--id", "C22", "-n", "5")
    assert code == EXIT_OK and "no closed form" in out


def test_verify_reports_corrupted_formula(monkeypatch):
    formulas = dict(closed_forms._FORMULAS)
    formulas["C13"] = lambda n: 0
    monkeypatch.setattr(closed_forms, "_FORMULAS", formulas)
    code, out = run("verify", "--id", "C13", "-n", "4", "--jobs", "1")
    assert code == EXIT_MISMATCH
    assert "mismatch C13" in out


def test_bijection_checks():
    assert run("bijection", "f", "--check", "roundtrip", "-n", "5")[0] == EXIT_OK
    assert run("bijection", "shiftB", "--check", "roundtrip", "-n", "6")[0] == EXIT_OK
    code, out = run("bijection", "wilf22", "--check", "roundtrip", "-n", "6")
    assert code == EXIT_MISMATCH
    assert out.splitlines()[-1].startswith("n=6\tFAIL")


def test_oeis_offline(capsys):
    code, out = run("oeis", "lookup", "1,2,5,15,53,217", "--offline")
    assert code == EXIT_OK and out.startswith("A022493\t")
    code, out = run("oeis", "lookup", "9", "9", "9", "9", "--offline")
    assert code == EXIT_OK and out.strip() == "snapshot-miss"
    code, _ = run("oeis", "id", "A000744", "--offline")
    assert code == EXIT_MISMATCH
    assert "A000774" in capsys.readouterr().err


def test_classify_formats():
    code, out = run("classify", "-k", "2", "--format", "csv", "--jobs", "1")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 8


def test_report_tables_match_golden(tmp_path):
    code, out = run("report", "tables", "-o", str(tmp_path), "--jobs", "2")
    assert code == EXIT_OK
    for name in ("table1.md", "table2.md"):
        produced = (tmp_path / name).read_bytes()
        assert produced == (GOLDEN / name).read_bytes(), name
    assert out.splitlines() == [str(tmp_path / "table1.md"), str(tmp_path / "table2.md")]


def test_report_output_does_not_depend_on_jobs():
    one = run("report", "tables", "--format", "json", "--jobs", "1")[1]
    eight = run("report", "tables", "--format", "json", "--jobs", "8")[1]
    assert one == eight


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bivinc", "avoid", "-p", "123|X=|Y=", "-n", "6"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1,2,5,14,42,132\n"
    bad = subprocess.run([sys.executable, "-m", "bivinc", "avoid", "-p", "12|X=7|Y="],
                         capture_output=True, text=True, check=False)
    assert bad.returncode == 2 and "error" in bad.stderr
