import json
import subprocess
import sys
from xml.etree import ElementTree as ET

import pytest

import twobridge.cli_report as cli
from twobridge import AdmissiblePair, CheckOutcome, DomainError, PairReport, RangeAuditReport, render_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "twobridge", *args], capture_output=True, text=True
    )


# ============================================================
# info / decompose
# ============================================================


def test_info_worked_example():
    r = run_cli("info", "4", "3")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["alpha"] == [2, 2]
    assert data["b"] == [2, 1, 0]
    assert data["sigma"] == 1
    assert data["l"] == 2
    assert data["decomposition"] == "T2 T1"
    assert data["components"] == 2
    assert all(data["checks"].values())


def test_info_degenerate_pair():
    r = run_cli("info", "1", "1")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["alpha"] == [1]
    assert data["sigma"] == 0
    assert data["components"] == 1


def test_info_inadmissible_exits_2():
    r = run_cli("info", "6", "3")
    assert r.returncode == 2
    assert "not admissible" in r.stderr


def test_missing_argument_exits_2():
    r = run_cli("info", "4")
    assert r.returncode == 2


def test_decompose_outputs():
    assert run_cli("decompose", "4", "3").stdout == "T2 T1\n"
    assert run_cli("decompose", "5", "3").stdout == "T1 T3 T1\n"
    assert run_cli("decompose", "1", "1").stdout == "\n"
    assert run_cli("decompose", "6", "3").returncode == 2


# ============================================================
# report serialization
# ============================================================


def test_pair_report_round_trip_is_byte_identical():
    rep = PairReport.from_pair(AdmissiblePair(4, 3))
    text = rep.to_json()
    again = PairReport.from_json(text)
    assert again == rep
    assert again.to_json() == text


def test_pair_report_component_invariant():
    rep = PairReport.from_pair(AdmissiblePair(2, 1))
    with pytest.raises(DomainError):
        PairReport(
            p=rep.p, q=rep.q, l=rep.l, alpha=rep.alpha, b=rep.b, sigma=rep.sigma,
            delta_coeffs=rep.delta_coeffs, i0=rep.i0, radius_m=rep.radius_m,
            components=1, checks=rep.checks, decomposition=rep.decomposition,
        )


# ============================================================
# verify / audit
# ============================================================


def test_verify_csv_row_count():
    r = run_cli("verify", "--max-p", "4", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == ",".join(cli.CSV_COLUMNS)
    assert len(lines) == 1 + 9
    assert "t2-formula=b_{l-i}-form" in r.stderr


def test_verify_jsonl_output(tmp_path):
    out = tmp_path / "rows.jsonl"
    r = run_cli("verify", "--max-p", "3", "--out", str(out))
    assert r.returncode == 0
    assert "5 pairs" in r.stdout
    lines = out.read_text().splitlines()
    assert len(lines) == 5 + 1
    for line in lines[:-1]:
        assert PairReport.from_json(line).to_json() == line
    agg = json.loads(lines[-1])["aggregate"]
    assert agg["pair_count"] == 5
    assert agg["failure_count"] == 0
    assert agg["resolved_t2_formula"] == "b_{l-i}-form"


def test_verify_full_q_mode():
    r = run_cli("verify", "--max-p", "6", "--full-q", "13", "--jobs", "1")
    assert r.returncode == 0


def test_verify_bad_bounds_exit_2(tmp_path):
    assert run_cli("verify", "--max-p", "0").returncode == 2
    missing = tmp_path / "no" / "such" / "dir" / "x.json"
    assert run_cli("verify", "--max-p", "2", "--out", str(missing)).returncode == 2


def test_audit_alias_runs_structural_suite():
    r = run_cli("audit", "--max-p", "12")
    assert r.returncode == 0
    assert "t2-formula=n/a" in r.stderr


def test_verify_failure_exits_1(monkeypatch, capsys):
    bad = CheckOutcome("SIG-EQ", AdmissiblePair(2, 1), False, {"diagram": 0, "closed_form": 1})
    fake = RangeAuditReport(
        max_p=2,
        q_mode="canonical",
        max_q=None,
        pair_count=1,
        check_counts={"SIG-EQ": {"passed": 0, "failed": 1, "vacuous": 0}},
        failures=(bad,),
        resolved_t2_formula="both",
    )
    monkeypatch.setattr(cli, "_run_range", lambda *a, **kw: (fake, []))
    rc = cli.main(["verify", "--max-p", "2"])
    assert rc == 1
    err = capsys.readouterr().err
    assert "FAIL SIG-EQ (2,1)" in err


# ============================================================
# svg
# ============================================================


def test_svg_counts_and_signs():
    for (p, q), lines, signs, total in [((4, 3), 3, 3, 1), ((1, 1), 2, 0, 0), ((5, 3), 4, 4, 0)]:
        root = ET.fromstring(render_svg(AdmissiblePair(p, q)))
        over = root.findall(f".//{SVG_NS}line[@class='overarc']")
        marks = root.findall(f".//{SVG_NS}text[@class='crossing-sign']")
        assert len(over) == lines
        assert len(marks) == signs
        assert sum(int(t.get("data-sign")) for t in marks) == total


def test_svg_sign_split_5_3():
    root = ET.fromstring(render_svg(AdmissiblePair(5, 3)))
    signs = [int(t.get("data-sign")) for t in root.findall(f".//{SVG_NS}text[@class='crossing-sign']")]
    assert sorted(signs) == [-1, -1, 1, 1]


def test_svg_underarc_painted_below_overarcs():
    doc = render_svg(AdmissiblePair(4, 3))
    assert doc.index('class="underarc"') < doc.index('class="overarc"')


def test_svg_cli_and_render_bound(tmp_path):
    out = tmp_path / "d.svg"
    r = run_cli("svg", "4", "3", "--out", str(out))
    assert r.returncode == 0
    ET.parse(out)  # well-formed
    assert run_cli("svg", "120", "101").returncode == 2
    assert run_cli("svg", "6", "3").returncode == 2


def test_render_bound_is_exclusive():
    # (100, 99): p + q = 199 renders; one more point does not
    render_svg(AdmissiblePair(100, 99))
    with pytest.raises(DomainError):
        render_svg(AdmissiblePair(100, 101))
