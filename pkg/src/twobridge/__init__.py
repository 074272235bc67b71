"""Invariants of two-bridge pairs read off extended diagrams.

The package traces the principal underarc of the extended diagram of an
admissible pair (p, q), reads off the arc sequence (the Alexander
coefficients), the bottom sequence, the length and the signature, checks
them against independent closed-form oracles, and audits the structural
laws (trapezoid shape, signature bound, T-move transforms) over whole
ranges of pairs.  The `twobridge` CLI exposes reports, range audits and
SVG rendering.
"""

from .errors import DomainError, ModelViolationError, MoveError, OracleShapeError
from .extended_diagram import (
    DiagramArc,
    GridPoint,
    SignedCrossing,
    TraceSummary,
    UnderarcTrace,
    arc_sequence,
    bottom_sequence,
    diagram_signature,
    signed_crossings,
    trace_principal_underarc,
    trace_summary,
)
from .invariants import (
    AlexanderPolynomial,
    IHReport,
    TrapezoidProfile,
    alexander,
    check_alpha_b_relation,
    check_ih,
    hm_check,
    trapezoid_profile,
)
from .oracle import EpsilonSequence, alexander_oracle, epsilon_sequence
from .pair_core import (
    AdmissiblePair,
    MoveSequence,
    TMove,
    apply_move,
    canonical_type,
    decompose,
    is_admissible,
    signature_closed_form,
)
from .theorem_audit import (
    CheckOutcome,
    RangeAuditReport,
    audit_pair,
    audit_range,
    audit_structural,
    audit_t1,
    audit_t2_t3,
    iter_admissible,
)
from .cli_report import PairReport, render_svg

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePair",
    "AlexanderPolynomial",
    "CheckOutcome",
    "DiagramArc",
    "DomainError",
    "EpsilonSequence",
    "GridPoint",
    "IHReport",
    "ModelViolationError",
    "MoveError",
    "MoveSequence",
    "OracleShapeError",
    "PairReport",
    "RangeAuditReport",
    "SignedCrossing",
    "TMove",
    "TraceSummary",
    "TrapezoidProfile",
    "UnderarcTrace",
    "alexander",
    "alexander_oracle",
    "apply_move",
    "arc_sequence",
    "audit_pair",
    "audit_range",
    "audit_structural",
    "audit_t1",
    "audit_t2_t3",
    "bottom_sequence",
    "canonical_type",
    "check_alpha_b_relation",
    "check_ih",
    "decompose",
    "diagram_signature",
    "epsilon_sequence",
    "hm_check",
    "is_admissible",
    "iter_admissible",
    "render_svg",
    "signature_closed_form",
    "signed_crossings",
    "trace_principal_underarc",
    "trace_summary",
    "trapezoid_profile",
]
