"""Command-line front end: single-pair reports, range verification with
JSON/CSV output, decompositions, and SVG rendering of extended diagrams.

Exit codes: 0 all checks pass, 1 at least one check failed (witnesses on
stderr), 2 usage or environment error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, fields
from xml.etree import ElementTree as ET

from .errors import DomainError
from .extended_diagram import (
    ARC_CONNECTING,
    trace_principal_underarc,
    signed_crossings,
    trace_summary,
)
from .pair_core import AdmissiblePair, decompose
from .theorem_audit import (
    CheckOutcome,
    RangeAuditReport,
    _audit_pair_impl,
    _audit_structural_impl,
    _audit_t1_impl,
    _audit_t2_t3_impl,
    _row_data,
    _run_range,
)

SVG_POINT_BOUND = 200
CSV_COLUMNS = (
    "p",
    "q",
    "l",
    "alpha",
    "b",
    "sigma",
    "delta",
    "i0",
    "radius",
    "components",
    "all_checks_pass",
    "decomposition",
)


@dataclass(frozen=True)
class PairReport:
    """Everything the artifact knows about one pair, serialization-stable:
    emitting, parsing and re-emitting the JSON form is byte-identical."""

    p: int
    q: int
    l: int
    alpha: list[int]
    b: list[int]
    sigma: int
    delta_coeffs: list[int]
    i0: int | None
    radius_m: int | None
    components: int
    checks: dict[str, bool]
    decomposition: str

    def __post_init__(self) -> None:
        if self.components not in (1, 2):
            raise DomainError(f"components must be 1 or 2, got {self.components}")
        if (self.components == 1) != (self.l % 2 == 1):
            raise DomainError(f"components={self.components} contradicts l={self.l}")

    @classmethod
    def from_pair(cls, x: AdmissiblePair) -> "PairReport":
        s = trace_summary(x)
        outcomes = _audit_pair_impl(x, s)
        outcomes += _audit_t1_impl(x, s)
        outcomes += _audit_t2_t3_impl(x, s)[0]
        outcomes += _audit_structural_impl(x, s)
        return cls(**_row_data(x, s, outcomes))

    @classmethod
    def from_json(cls, text: str) -> "PairReport":
        return cls(**json.loads(text))

    def all_checks_pass(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> str:
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        return json.dumps(data, separators=(",", ":"))

    def to_csv_row(self) -> list[str]:
        return [
            str(self.p),
            str(self.q),
            str(self.l),
            ";".join(map(str, self.alpha)),
            ";".join(map(str, self.b)),
            str(self.sigma),
            ";".join(map(str, self.delta_coeffs)),
            "" if self.i0 is None else str(self.i0),
            "" if self.radius_m is None else str(self.radius_m),
            str(self.components),
            "true" if self.all_checks_pass() else "false",
            self.decomposition,
        ]


# ============================================================
# SVG rendering
# ============================================================


def render_svg(x: AdmissiblePair) -> str:
    """Draw the extended diagram: vertical overarc lines 0..l, the
    principal underarc threaded through them, and a sign at each crossing."""
    p, q = x.p, x.q
    if p + q >= SVG_POINT_BOUND:
        raise DomainError(f"diagram too large to render: p+q={p + q} (bound {SVG_POINT_BOUND})")
    t = trace_principal_underarc(x)
    crossings = signed_crossings(t)
    l = t.length_l
    lo_label = -((q - 1) // 2)
    hi_label = p + (q - 1) // 2

    colw, rowh, margin = 48, 16, 36
    x_of = lambda i: margin + i * colw
    y_of = lambda j: margin + (j - lo_label) * rowh
    width = 2 * margin + l * colw
    height = 2 * margin + (hi_label - lo_label) * rowh

    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
        },
    )
    ET.SubElement(root, "title").text = f"extended diagram ({p}, {q})"
    style = ET.SubElement(root, "style")
    style.text = (
        ".gridline{stroke:#bbb;stroke-width:1}"
        ".overarc{stroke:#222;stroke-width:4;stroke-linecap:round}"
        ".underarc{stroke:#c33;stroke-width:2;fill:none}"
        ".mark{fill:#222}.mark-ext{fill:#bbb}"
        ".label{font:10px monospace;fill:#555}"
        ".crossing-sign{font:bold 11px monospace;fill:#06c}"
    )

    # underarc first so the overarc strands paint over it
    under = ET.SubElement(root, "g")
    parts: list[str] = []
    pt0 = t.points[0]
    parts.append(f"M {x_of(pt0.line)} {y_of(pt0.label)}")
    for arc in t.arcs:
        ax, ay = x_of(arc.start.line), y_of(arc.start.label)
        bx, by = x_of(arc.end.line), y_of(arc.end.label)
        if arc.kind == ARC_CONNECTING:
            parts.append(f"L {bx} {by}")
        else:
            # loops rejoin the same line; bulge sideways, wider for taller loops
            bulge = colw // 2 + abs(by - ay) // 4
            cx = ax - bulge if arc.kind == "bottom_loop" else ax + bulge
            parts.append(f"C {cx} {ay} {cx} {by} {bx} {by}")
    ET.SubElement(under, "path", {"class": "underarc", "d": " ".join(parts)})

    lines = ET.SubElement(root, "g")
    thin = (l + 1) * (p + q) > 5000
    for i in range(l + 1):
        xi = x_of(i)
        if lo_label < 0 or hi_label > p:
            ET.SubElement(
                lines,
                "line",
                {
                    "class": "gridline",
                    "x1": str(xi),
                    "y1": str(y_of(lo_label)),
                    "x2": str(xi),
                    "y2": str(y_of(hi_label)),
                },
            )
        ET.SubElement(
            lines,
            "line",
            {
                "class": "overarc",
                "x1": str(xi),
                "y1": str(y_of(0)),
                "x2": str(xi),
                "y2": str(y_of(p)),
            },
        )
        if not thin:
            for j in range(lo_label, hi_label + 1):
                ET.SubElement(
                    lines,
                    "circle",
                    {
                        "class": "mark" if 0 <= j <= p else "mark-ext",
                        "cx": str(xi),
                        "cy": str(y_of(j)),
                        "r": "2",
                    },
                )
    if not thin:
        for j in range(lo_label, hi_label + 1):
            lab = ET.SubElement(
                root,
                "text",
                {"class": "label", "x": str(margin - 26), "y": str(y_of(j) + 3)},
            )
            lab.text = str(j)

    signs = ET.SubElement(root, "g")
    for c in crossings:
        el = ET.SubElement(
            signs,
            "text",
            {
                "class": "crossing-sign",
                "data-sign": f"{c.sign:+d}",
                "x": str(x_of(c.at.line) + 5),
                "y": str(y_of(c.at.label) - 5),
            },
        )
        el.text = "+" if c.sign > 0 else "-"

    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode")


# ============================================================
# commands
# ============================================================


def _fail_dump(failures: tuple[CheckOutcome, ...]) -> None:
    for o in failures:
        print(f"FAIL {o.check_id} ({o.pair.p},{o.pair.q}): {o.details}", file=sys.stderr)


def _aggregate_json(report: RangeAuditReport) -> str:
    data = {
        "aggregate": {
            "max_p": report.max_p,
            "q_mode": report.q_mode,
            "max_q": report.max_q,
            "pair_count": report.pair_count,
            "failure_count": report.failure_count,
            "resolved_t2_formula": report.resolved_t2_formula,
            "check_counts": report.check_counts,
            "failures": [
                {"check_id": o.check_id, "p": o.pair.p, "q": o.pair.q, "details": o.details}
                for o in report.failures
            ],
        }
    }
    return json.dumps(data, separators=(",", ":"))


def cmd_info(args: argparse.Namespace) -> int:
    report = PairReport.from_pair(AdmissiblePair(args.p, args.q))
    print(report.to_json())
    return 0 if report.all_checks_pass() else 1


def cmd_decompose(args: argparse.Namespace) -> int:
    print(str(decompose(AdmissiblePair(args.p, args.q))))
    return 0


def cmd_svg(args: argparse.Namespace) -> int:
    doc = render_svg(AdmissiblePair(args.p, args.q))
    if args.out is None:
        sys.stdout.write(doc)
    else:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(doc)
    return 0


def cmd_verify(args: argparse.Namespace, suite: str) -> int:
    q_mode = "full" if args.full_q is not None else "canonical"
    t0 = time.monotonic()
    report, rows = _run_range(
        args.max_p, q_mode, args.full_q, args.jobs, suite, with_rows=True
    )
    elapsed_ms = int((time.monotonic() - t0) * 1000)

    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        if args.format == "json":
            for row in rows:
                out.write(PairReport(**row).to_json() + "\n")
            out.write(_aggregate_json(report) + "\n")
        else:
            writer = csv.writer(out)
            writer.writerow(CSV_COLUMNS)
            for row in rows:
                writer.writerow(PairReport(**row).to_csv_row())
    finally:
        if args.out:
            out.close()

    formula = report.resolved_t2_formula if suite == "full" else "n/a"
    summary = (
        f"{report.pair_count} pairs audited in {elapsed_ms} ms, "
        f"{report.failure_count} failures, t2-formula={formula}"
    )
    # keep stdout machine-readable when the rows went there
    print(summary, file=sys.stdout if args.out else sys.stderr)
    if report.failures:
        _fail_dump(report.failures)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="twobridge",
        description="Invariants, audits and diagrams for two-bridge pairs.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="JSON report for one pair")
    info.add_argument("p", type=int)
    info.add_argument("q", type=int)

    for name, help_text in (
        ("verify", "audit every pair up to a bound (full check suite)"),
        ("audit", "structural checks only, over the same ranges"),
    ):
        v = sub.add_parser(name, help=help_text)
        v.add_argument("--max-p", type=int, required=True)
        v.add_argument("--full-q", type=int, default=None, metavar="N",
                       help="audit all odd coprime q <= N instead of 0 < q < 2p")
        v.add_argument("--jobs", type=int, default=None,
                       help="worker processes (default: all CPUs)")
        v.add_argument("--format", choices=("json", "csv"), default="json")
        v.add_argument("--out", default=None, metavar="PATH")

    dec = sub.add_parser("decompose", help="move word reaching the pair from (1, 1)")
    dec.add_argument("p", type=int)
    dec.add_argument("q", type=int)

    svg = sub.add_parser("svg", help="render the extended diagram")
    svg.add_argument("p", type=int)
    svg.add_argument("q", type=int)
    svg.add_argument("--out", default=None, metavar="PATH")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "info":
            return cmd_info(args)
        if args.command == "decompose":
            return cmd_decompose(args)
        if args.command == "svg":
            return cmd_svg(args)
        if args.command == "verify":
            return cmd_verify(args, suite="full")
        if args.command == "audit":
            return cmd_verify(args, suite="structural")
        raise AssertionError(args.command)
    except DomainError as e:
        print(f"twobridge {args.command}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"twobridge {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
