"""Empirical audits of the structural claims, per pair and over ranges.

Per-pair checks (audit_pair):

    TRAPEZOID   arc sequence is trapezoidal with a centred plateau
    RADIUS-BOUND floor((|sigma|+1)/2) >= plateau radius
    REL         alpha_i - alpha_{i-1} = b_i - b_{l-i}  (alpha_l = 0)
    IH1/IH2/IH3 the three bottom-sequence properties
    SIG-EQ      crossing-sum signature equals the closed-form floor sum
    DELTA-EQ    arc sequence equals the partial-sum oracle coefficients
    DET         sum of the arc sequence equals p
    PARITY      sigma = l - 1 (mod 2) and l = p (mod 2)
    SIGBOUND    |sigma| <= l - 1

Move checks (audit_t1, audit_t2_t3), all stated on the traced data:

    T1-SIGMA / T1-LENGTH / T1-BOTTOM    sigma + 1, l + 1, b extended by 0
    T1-TWO-STABLE      plateau of length 1 (l odd) grows to exactly 2
    T1-PLATEAU-INDEX   otherwise i0 grows by one, or stays with b_i = 0
                       from index i0 on
    T2-SIGMA / T2-LENGTH / T2-COEFF-DIFF   sigma, l and the coefficient
                       differences are unchanged
    T2-NO-ZEROS        bottom sequence of T2 x has no zero entry
    T2-FORM            bottom sequence of T2 x matches at least one of the
                       two candidate transforms 2*alpha_i + b_i or
                       2*alpha_i + b_{l-i} (alpha_l = 0); which candidate
                       holds across a whole range is reported separately
    T3-SIGMA / T3-LENGTH / T3-COEFF-DIFF   sigma negated, l and the
                       coefficient differences unchanged (needs p > q)
    T3-FORM            bottom sequence of T3 x is 2*alpha_i - b_i
    T3T1-SINGLE-ZERO   bottom sequence of T3(T1 x) vanishes exactly at its
                       last index

Structural checks (audit_structural), firing only when the bottom
sequence is a positive prefix followed by zeros, first zero at index
i0 <= floor(l/2):

    STRUCT-SIGMA-NONNEG   sigma >= 0
    STRUCT-T1-TAIL        the greedy decomposition ends with at least
                          l - i0 consecutive T1 moves

audit_range runs the suites over every admissible pair in a range,
in parallel when asked, and merges into a deterministic report.
"""

from __future__ import annotations

import multiprocessing
import os
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .errors import DomainError, OracleShapeError
from .extended_diagram import TraceSummary, trace_summary
from .invariants import check_alpha_b_relation, check_ih, hm_check, trapezoid_profile
from .oracle import alexander_oracle
from .pair_core import AdmissiblePair, TMove, decompose, signature_closed_form

PAIR_CHECKS = (
    "TRAPEZOID",
    "RADIUS-BOUND",
    "REL",
    "IH1",
    "IH2",
    "IH3",
    "SIG-EQ",
    "DELTA-EQ",
    "DET",
    "PARITY",
    "SIGBOUND",
)
T1_CHECKS = ("T1-SIGMA", "T1-LENGTH", "T1-BOTTOM", "T1-TWO-STABLE", "T1-PLATEAU-INDEX")
T2T3_CHECKS = (
    "T2-SIGMA",
    "T2-LENGTH",
    "T2-COEFF-DIFF",
    "T2-NO-ZEROS",
    "T2-FORM",
    "T3-SIGMA",
    "T3-LENGTH",
    "T3-COEFF-DIFF",
    "T3-FORM",
    "T3T1-SINGLE-ZERO",
)
STRUCT_CHECKS = ("STRUCT-SIGMA-NONNEG", "STRUCT-T1-TAIL")

FORM_B_I = "b_i-form"
FORM_B_L_I = "b_{l-i}-form"


@dataclass(frozen=True)
class CheckOutcome:
    """One check on one pair.  details carries witness data exactly when
    the check failed."""

    check_id: str
    pair: AdmissiblePair
    passed: bool
    details: dict | None = None

    def __post_init__(self) -> None:
        if self.passed and self.details:
            raise DomainError(f"{self.check_id}: passing outcome must not carry details")
        if not self.passed and not self.details:
            raise DomainError(f"{self.check_id}: failing outcome needs witness details")


@dataclass(frozen=True)
class RangeAuditReport:
    """Aggregate of a range sweep.

    check_counts maps check id to passed/failed/vacuous tallies summing to
    pair_count; failures lists every failing outcome sorted by (p, q,
    check id); resolved_t2_formula names which T2 bottom transform held on
    every probed pair ("both" / "neither" when both / no candidate did).
    """

    max_p: int
    q_mode: str
    max_q: int | None
    pair_count: int
    check_counts: dict[str, dict[str, int]]
    failures: tuple[CheckOutcome, ...]
    resolved_t2_formula: str

    def __post_init__(self) -> None:
        if self.resolved_t2_formula not in (FORM_B_I, FORM_B_L_I, "both", "neither"):
            raise DomainError(f"bad formula tag {self.resolved_t2_formula!r}")
        for cid, c in self.check_counts.items():
            if c["passed"] + c["failed"] + c["vacuous"] != self.pair_count:
                raise DomainError(f"counts for {cid} do not sum to {self.pair_count}: {c}")

    @property
    def failure_count(self) -> int:
        return len(self.failures)


def _ok(cid: str, x: AdmissiblePair) -> CheckOutcome:
    return CheckOutcome(cid, x, True, None)


def _bad(cid: str, x: AdmissiblePair, **details) -> CheckOutcome:
    return CheckOutcome(cid, x, False, details)


def _check(cid: str, x: AdmissiblePair, cond: bool, **details) -> CheckOutcome:
    return _ok(cid, x) if cond else _bad(cid, x, **details)


# ============================================================
# per-pair suites
# ============================================================


def _audit_pair_impl(x: AdmissiblePair, s: TraceSummary) -> list[CheckOutcome]:
    out: list[CheckOutcome] = []
    l, alpha, b, sigma = s.l, s.alpha, s.b, s.sigma

    prof = trapezoid_profile(alpha)
    out.append(_check("TRAPEZOID", x, prof.is_trapezoidal, alpha=list(alpha)))
    if prof.is_trapezoidal:
        holds, slack = hm_check(prof, sigma)
        out.append(
            _check("RADIUS-BOUND", x, holds, sigma=sigma, radius_m=prof.radius_m, slack=slack)
        )
    else:
        out.append(_bad("RADIUS-BOUND", x, reason="no trapezoid shape", alpha=list(alpha)))

    out.append(
        _check("REL", x, check_alpha_b_relation(alpha, b), alpha=list(alpha), b=list(b))
    )

    ih = check_ih(b, l)
    out.append(_check("IH1", x, ih.ih1, b=list(b)))
    out.append(_check("IH2", x, ih.ih2, b=list(b), witness=ih.witness))
    out.append(_check("IH3", x, ih.ih3, b=list(b)))

    formula = signature_closed_form(x)
    out.append(_check("SIG-EQ", x, sigma == formula, diagram=sigma, closed_form=formula))

    try:
        oracle_coeffs: tuple[int, ...] | None = alexander_oracle(x).coeffs
        oracle_err = None
    except (OracleShapeError, DomainError) as e:
        oracle_coeffs = None
        oracle_err = str(e)
    if oracle_coeffs is None:
        out.append(_bad("DELTA-EQ", x, oracle_error=oracle_err))
    else:
        out.append(
            _check(
                "DELTA-EQ",
                x,
                alpha == oracle_coeffs,
                diagram=list(alpha),
                oracle=list(oracle_coeffs),
            )
        )

    out.append(_check("DET", x, sum(alpha) == x.p, total=sum(alpha), p=x.p))
    out.append(
        _check(
            "PARITY",
            x,
            (sigma - (l - 1)) % 2 == 0 and (l - x.p) % 2 == 0,
            sigma=sigma,
            l=l,
            p=x.p,
        )
    )
    out.append(_check("SIGBOUND", x, abs(sigma) <= l - 1, sigma=sigma, l=l))
    return out


def _audit_t1_impl(x: AdmissiblePair, s: TraceSummary) -> list[CheckOutcome]:
    out: list[CheckOutcome] = []
    y = AdmissiblePair(x.p + x.q, x.q)
    sy = trace_summary(y)

    out.append(_check("T1-SIGMA", x, sy.sigma == s.sigma + 1, before=s.sigma, after=sy.sigma))
    out.append(_check("T1-LENGTH", x, sy.l == s.l + 1, before=s.l, after=sy.l))
    out.append(_check("T1-BOTTOM", x, sy.b == s.b + (0,), before=list(s.b), after=list(sy.b)))

    prof = trapezoid_profile(s.alpha)
    prof_y = trapezoid_profile(sy.alpha)
    if not (prof.is_trapezoidal and prof_y.is_trapezoidal):
        out.append(_bad("T1-TWO-STABLE", x, reason="profile not trapezoidal"))
        out.append(_bad("T1-PLATEAU-INDEX", x, reason="profile not trapezoidal"))
        return out

    if prof.plateau_length == 1 and s.l % 2 == 1:
        out.append(
            _check(
                "T1-TWO-STABLE",
                x,
                prof_y.plateau_length == 2,
                after_plateau=prof_y.plateau_length,
                after_alpha=list(sy.alpha),
            )
        )
    assert prof.i0 is not None and prof_y.i0 is not None
    if prof.i0 - 1 < s.l - prof.i0:
        grew = prof_y.i0 == prof.i0 + 1
        stayed = prof_y.i0 == prof.i0 and all(v == 0 for v in s.b[prof.i0 :])
        out.append(
            _check(
                "T1-PLATEAU-INDEX",
                x,
                grew or stayed,
                i0=prof.i0,
                i0_after=prof_y.i0,
                b=list(s.b),
            )
        )
    return out


def _coeff_diffs(alpha: tuple[int, ...]) -> list[int]:
    return [alpha[i] - alpha[i - 1] for i in range(1, len(alpha))]


def _audit_t2_t3_impl(
    x: AdmissiblePair, s: TraceSummary
) -> tuple[list[CheckOutcome], bool, bool]:
    """Returns (outcomes, t2 matched b_i form, t2 matched b_{l-i} form)."""
    out: list[CheckOutcome] = []
    p, q = x.p, x.q
    l, alpha, b = s.l, s.alpha, s.b
    a_ext = alpha + (0,)

    y2 = AdmissiblePair(p, 2 * p + q)
    s2 = trace_summary(y2)
    out.append(_check("T2-SIGMA", x, s2.sigma == s.sigma, before=s.sigma, after=s2.sigma))
    out.append(_check("T2-LENGTH", x, s2.l == l, before=l, after=s2.l))
    out.append(
        _check(
            "T2-COEFF-DIFF",
            x,
            _coeff_diffs(s2.alpha) == _coeff_diffs(alpha),
            before=list(alpha),
            after=list(s2.alpha),
        )
    )
    out.append(_check("T2-NO-ZEROS", x, all(v > 0 for v in s2.b), after_b=list(s2.b)))
    want_bi = tuple(2 * a_ext[i] + b[i] for i in range(l + 1))
    want_bli = tuple(2 * a_ext[i] + b[l - i] for i in range(l + 1))
    table_ok = s2.b == want_bi
    proof_ok = s2.b == want_bli
    out.append(
        _check(
            "T2-FORM",
            x,
            table_ok or proof_ok,
            actual=list(s2.b),
            candidate_b_i=list(want_bi),
            candidate_b_l_i=list(want_bli),
        )
    )

    if p > q:
        y3 = AdmissiblePair(p, 2 * p - q)
        s3 = trace_summary(y3)
        out.append(_check("T3-SIGMA", x, s3.sigma == -s.sigma, before=s.sigma, after=s3.sigma))
        out.append(_check("T3-LENGTH", x, s3.l == l, before=l, after=s3.l))
        out.append(
            _check(
                "T3-COEFF-DIFF",
                x,
                _coeff_diffs(s3.alpha) == _coeff_diffs(alpha),
                before=list(alpha),
                after=list(s3.alpha),
            )
        )
        want3 = tuple(2 * a_ext[i] - b[i] for i in range(l + 1))
        out.append(_check("T3-FORM", x, s3.b == want3, actual=list(s3.b), expected=list(want3)))

    z = AdmissiblePair(p + q, 2 * p + q)
    sz = trace_summary(z)
    single = (
        sz.l == l + 1
        and sz.b[l + 1] == 0
        and all(v > 0 for v in sz.b[: l + 1])
    )
    out.append(_check("T3T1-SINGLE-ZERO", x, single, l=l, after_b=list(sz.b)))
    return out, table_ok, proof_ok


def _audit_structural_impl(x: AdmissiblePair, s: TraceSummary) -> list[CheckOutcome]:
    b, l = s.b, s.l
    first_zero = None
    for k, v in enumerate(b):
        if v == 0:
            first_zero = k
            break
    if first_zero is None or first_zero < 1:
        return []
    if any(v != 0 for v in b[first_zero:]):
        return []
    if first_zero > l // 2:
        return []

    out = [_check("STRUCT-SIGMA-NONNEG", x, s.sigma >= 0, sigma=s.sigma, b=list(b))]
    word = decompose(x).moves
    tail = 0
    for m in reversed(word):
        if m is TMove.T1:
            tail += 1
        else:
            break
    out.append(
        _check(
            "STRUCT-T1-TAIL",
            x,
            tail >= l - first_zero,
            tail=tail,
            needed=l - first_zero,
            word=[m.value for m in word],
        )
    )
    return out


def audit_pair(x: AdmissiblePair) -> list[CheckOutcome]:
    """Run the per-pair checks on one pair."""
    return _audit_pair_impl(x, trace_summary(x))


def audit_t1(x: AdmissiblePair) -> list[CheckOutcome]:
    """Check the T1 transformation laws starting from x."""
    return _audit_t1_impl(x, trace_summary(x))


def audit_t2_t3(x: AdmissiblePair) -> list[CheckOutcome]:
    """Check the T2/T3 transformation laws starting from x.  The T3 checks
    are skipped (vacuous) when p <= q."""
    return _audit_t2_t3_impl(x, trace_summary(x))[0]


def audit_structural(x: AdmissiblePair) -> list[CheckOutcome]:
    """Check the trailing-zero consequences on one pair; empty when the
    bottom sequence does not have the firing shape."""
    return _audit_structural_impl(x, trace_summary(x))


# ============================================================
# range sweeps
# ============================================================


def iter_admissible(max_p: int, q_mode: str = "canonical", max_q: int | None = None):
    """Yield admissible (p, q) with p <= max_p in (p, q) order.

    canonical mode ranges over 0 < q < 2p; full mode over 0 < q <= max_q.
    """
    if max_p < 1:
        raise DomainError(f"max_p must be >= 1, got {max_p}")
    if q_mode == "canonical":
        if max_q is not None:
            raise DomainError("max_q only applies to full q mode")
    elif q_mode == "full":
        if max_q is None or max_q < 1:
            raise DomainError("full q mode needs max_q >= 1")
    else:
        raise DomainError(f"unknown q mode {q_mode!r}")
    for p in range(1, max_p + 1):
        top = 2 * p - 1 if q_mode == "canonical" else max_q
        for q in range(1, top + 1, 2):
            if gcd(p, q) == 1:
                yield p, q


@dataclass
class _Partial:
    counts: Counter = field(default_factory=Counter)
    failures: list[CheckOutcome] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)
    t2_b_i_all: bool = True
    t2_b_l_i_all: bool = True
    pairs: int = 0


def _suite_checks(suite: str) -> tuple[str, ...]:
    if suite == "full":
        return PAIR_CHECKS + T1_CHECKS + T2T3_CHECKS + STRUCT_CHECKS
    return STRUCT_CHECKS


def _row_data(x: AdmissiblePair, s: TraceSummary, outcomes: list[CheckOutcome]) -> dict:
    prof = trapezoid_profile(s.alpha)
    checks = {o.check_id: o.passed for o in outcomes}
    return {
        "p": x.p,
        "q": x.q,
        "l": s.l,
        "alpha": list(s.alpha),
        "b": list(s.b),
        "sigma": s.sigma,
        "delta_coeffs": list(s.alpha),
        "i0": prof.i0,
        "radius_m": prof.radius_m,
        "components": 1 if x.p % 2 == 1 else 2,
        "checks": checks,
        "decomposition": str(decompose(x)),
    }


def _process_chunk(args: tuple[list[tuple[int, int]], str, bool]) -> _Partial:
    pairs, suite, with_rows = args
    part = _Partial()
    for p, q in pairs:
        x = AdmissiblePair(p, q)
        s = trace_summary(x)
        outcomes: list[CheckOutcome] = []
        if suite == "full":
            outcomes += _audit_pair_impl(x, s)
            outcomes += _audit_t1_impl(x, s)
            t23, table_ok, proof_ok = _audit_t2_t3_impl(x, s)
            outcomes += t23
            part.t2_b_i_all = part.t2_b_i_all and table_ok
            part.t2_b_l_i_all = part.t2_b_l_i_all and proof_ok
        outcomes += _audit_structural_impl(x, s)
        for o in outcomes:
            part.counts[(o.check_id, o.passed)] += 1
            if not o.passed:
                part.failures.append(o)
        if with_rows:
            part.rows.append(_row_data(x, s, outcomes))
        part.pairs += 1
    return part


def _merge(parts: list[_Partial]) -> _Partial:
    total = _Partial()
    for part in parts:
        total.counts.update(part.counts)
        total.failures.extend(part.failures)
        total.rows.extend(part.rows)
        total.t2_b_i_all = total.t2_b_i_all and part.t2_b_i_all
        total.t2_b_l_i_all = total.t2_b_l_i_all and part.t2_b_l_i_all
        total.pairs += part.pairs
    total.failures.sort(key=lambda o: (o.pair.p, o.pair.q, o.check_id))
    return total


def _chunks(pairs: list[tuple[int, int]], n: int) -> list[list[tuple[int, int]]]:
    if not pairs:
        return []
    n = max(1, min(n, len(pairs)))
    size, extra = divmod(len(pairs), n)
    out = []
    at = 0
    for k in range(n):
        step = size + (1 if k < extra else 0)
        out.append(pairs[at : at + step])
        at += step
    return out


def _run_range(
    max_p: int,
    q_mode: str,
    max_q: int | None,
    jobs: int | None,
    suite: str,
    with_rows: bool,
) -> tuple[RangeAuditReport, list[dict]]:
    if suite not in ("full", "structural"):
        raise DomainError(f"unknown suite {suite!r}")
    pairs = list(iter_admissible(max_p, q_mode, max_q))
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")

    if jobs == 1 or len(pairs) < 2:
        parts = [_process_chunk((pairs, suite, with_rows))]
    else:
        work = [(c, suite, with_rows) for c in _chunks(pairs, jobs * 8)]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_process_chunk, work)
    total = _merge(parts)

    if suite == "full":
        if total.t2_b_i_all and total.t2_b_l_i_all:
            resolved = "both"
        elif total.t2_b_i_all:
            resolved = FORM_B_I
        elif total.t2_b_l_i_all:
            resolved = FORM_B_L_I
        else:
            resolved = "neither"
    else:
        resolved = "both"

    check_counts: dict[str, dict[str, int]] = {}
    for cid in _suite_checks(suite):
        passed = total.counts.get((cid, True), 0)
        failed = total.counts.get((cid, False), 0)
        check_counts[cid] = {
            "passed": passed,
            "failed": failed,
            "vacuous": total.pairs - passed - failed,
        }
    report = RangeAuditReport(
        max_p=max_p,
        q_mode=q_mode,
        max_q=max_q,
        pair_count=total.pairs,
        check_counts=check_counts,
        failures=tuple(total.failures),
        resolved_t2_formula=resolved,
    )
    return report, total.rows


def audit_range(
    max_p: int,
    q_mode: str = "canonical",
    max_q: int | None = None,
    jobs: int | None = None,
    suite: str = "full",
) -> RangeAuditReport:
    """Audit every admissible pair with p <= max_p.

    q ranges over the canonical window 0 < q < 2p, or over 0 < q <= max_q
    in full mode.  jobs controls worker processes (default: the machine's
    CPU count); the merged report is identical for any jobs value.
    """
    report, _ = _run_range(max_p, q_mode, max_q, jobs, suite, with_rows=False)
    return report
