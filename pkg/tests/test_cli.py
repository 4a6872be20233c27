import subprocess
import sys
from pathlib import Path

import pytest

from lieprops.cli import main
from lieprops.report import parse_records

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return parse_records(out)


@pytest.mark.parametrize("name", ["heisenberg_gf3", "abelian3_gf2"])
def test_frattini_golden(capsys, name):
    code, out, _ = run(capsys, "frattini", GOLDEN / f"{name}.lie", "--no-timing")
    assert code == 0
    assert out == (GOLDEN / f"{name}.frattini").read_text()


def test_check_heisenberg(capsys):
    code, out, _ = run(capsys, "check", GOLDEN / "heisenberg_gf3.lie", "--no-timing")
    assert code == 0
    rec = records(out)[0]
    assert rec["record"] == "properties"
    assert rec["nilpotent"] == "true" and rec["simple"] == "false"
    code, out, _ = run(capsys, "check", GOLDEN / "heisenberg_gf3.lie", "--props", "solvable,abelian")
    rec = records(out)[0]
    assert set(rec) == {"record", "field", "dim", "solvable", "abelian", "time_ms"}


def test_catalog_then_check(capsys, tmp_path):
    f = tmp_path / "x.lie"
    code, _, _ = run(capsys, "catalog", "ev_type_a", "--param", "p=3", "--param", "alpha=1", "-o", f)
    assert code == 0 and f.read_text().startswith("lie-sc v1\n")
    code, out, _ = run(capsys, "check", f)
    assert records(out)[0]["strongly_solvable"] == "false"


def test_catalog_to_stdout(capsys):
    code, out, _ = run(capsys, "catalog", "heisenberg")
    assert code == 0 and out == (GOLDEN / "heisenberg_gf3.lie").read_text().replace("GF(3)", "Q")


def test_theorems_t44_on_sl2(capsys, tmp_path):
    f = tmp_path / "sl2.lie"
    run(capsys, "catalog", "sl2", "--param", "field=GF(5)", "-o", f)
    code, out, _ = run(capsys, "theorems", f, "--suite", "t44", "--no-timing")
    rec = records(out)[0]
    assert rec["hypothesis"] == "met" and rec["conclusion"] == "held"
    checks = rec["checks"].split("|")
    assert len([c for c in checks if c.endswith(":ok")]) >= 4


def test_series_subalgebras_triang_nil_twogen(capsys):
    f = GOLDEN / "heisenberg_gf3.lie"
    _, out, _ = run(capsys, "series", f, "--kind", "lower-central", "--no-timing")
    assert records(out)[0]["dims"] == "3,1,0"
    _, out, _ = run(capsys, "subalgebras", f, "--count-only", "--no-timing")
    # 0, 13 lines, 4 planes through c, and L
    assert records(out)[-1]["count"] == "19"
    _, out, _ = run(capsys, "subalgebras", f, "--maximal", "--no-timing")
    recs = records(out)
    assert len(recs) == 5 and recs[-1]["which"] == "maximal"
    _, out, _ = run(capsys, "triang", f, "--no-timing")
    assert records(out)[0]["triangulable"] == "true"
    _, out, _ = run(capsys, "nil", f, "--subalgebra", "1,0,0;0,0,1", "--no-timing")
    assert records(out)[0]["nil"] == "1,0,0;0,0,1"
    _, out, _ = run(capsys, "twogen", f, "--no-timing")
    assert records(out)[0]["two_generated"] == "true"
    _, out, _ = run(capsys, "twogen", f, "--property", "nilpotent", "--no-timing")
    assert records(out)[0]["status"] == "all_hold"
    _, out, _ = run(capsys, "twogen", f, "--samples", "20", "--seed", "4", "--no-timing")
    assert records(out)[0]["mode"] == "sampled"


def test_timing_field_toggles(capsys):
    f = GOLDEN / "heisenberg_gf3.lie"
    _, out, _ = run(capsys, "frattini", f)
    assert "time_ms=" in out
    _, out, _ = run(capsys, "frattini", f, "--no-timing")
    assert "time_ms=" not in out


def test_exit_codes_and_single_line_diagnostics(capsys, tmp_path):
    bad = tmp_path / "bad.lie"
    bad.write_text("lie-sc v1\nfield GF(3)\ndim 2\nbasis a b\n[b,a] = 1*a\n")
    code, out, err = run(capsys, "check", bad)
    assert code == 1 and "line 5" in err and err.count("\n") == 1
    code, _, err = run(capsys, "check", tmp_path / "missing.lie")
    assert code == 1 and err.count("\n") == 1
    code, _, err = run(capsys, "frobnicate")
    assert code == 2 and err.count("\n") == 1
    code, _, err = run(capsys, "subalgebras", GOLDEN / "heisenberg_gf3.lie", "--max-subspaces", "5")
    assert code == 3 and "CapExceeded" in err
    q = tmp_path / "q.lie"
    run(capsys, "catalog", "sl2", "-o", q)
    code, _, err = run(capsys, "frattini", q)
    assert code == 4 and "Unsupported" in err
    code, _, _ = run(capsys, "triang", GOLDEN / "heisenberg_gf3.lie", "--subalgebra", "1,0,0;0,1,0")
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lieprops", "frattini", str(GOLDEN / "abelian3_gf2.lie"), "--no-timing"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == (GOLDEN / "abelian3_gf2.frattini").read_text()
