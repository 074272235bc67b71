"""Extended diagrams of two-bridge pairs and the principal underarc.

The diagram for (p, q) lives on a family of parallel grid lines W_i.  Each
line carries p + q points, labelled -(q-1)/2 .. p + (q-1)/2; the segment
of a line between labels 0 and p is an overarc of the diagram.  Points are
joined by three kinds of arcs:

    connecting   x_{i,j} -- x_{i+1,j+q}   for -(q-1)/2 <= j <= p-(q+1)/2,
                 lying between W_i and W_{i+1} (region i)
    bottom loop  x_{i,j} -- x_{i,-j}      for 1 <= j <= (q-1)/2,
                 bulging left of W_i (region i-1)
    top loop     x_{i,p-j} -- x_{i,p+j}   for 1 <= j <= (q-1)/2,
                 bulging right of W_i (region i)

Every point has exactly one arc on each side of its line, except the
points labelled 0 and p, which have a single arc (on the right for label
0, on the left for label p).  The arcs decompose into simple paths running
from a label-0 point to a label-p point: the underarcs.  The principal
underarc is the one through x_{0,0}, traced from its label-0 end.  Each
visit to an interior label 0 < j < p is a crossing under an overarc;
passing the line left to right counts +1, right to left counts -1.

The walk follows the unique continuation rule.  Standing at (i, j) and
leaving on the right side: a connecting arc if j <= p - (q+1)/2, else the
top loop to (i, 2p - j).  Leaving on the left side: a connecting arc if
j >= (q+1)/2, else the bottom loop to (i, -j).  Traversing a rightward
connecting arc lands on the left side of the next line, so the walk keeps
exiting right; leftward connecting keeps exiting left; a bottom loop flips
the exit side to right, a top loop to left.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ModelViolationError
from .pair_core import AdmissiblePair

ARC_CONNECTING = "connecting"
ARC_BOTTOM_LOOP = "bottom_loop"
ARC_TOP_LOOP = "top_loop"


class GridPoint(NamedTuple):
    line: int
    label: int


class DiagramArc(NamedTuple):
    kind: str
    start: GridPoint
    end: GridPoint
    region: int


class SignedCrossing(NamedTuple):
    at: GridPoint
    sign: int


class UnderarcTrace(NamedTuple):
    """Principal underarc, line-reindexed so the leftmost line visited at a
    label in [0, p] is W_0.

    points and arcs are in traversal order; len(points) == len(arcs) + 1.
    length_l is the index of the rightmost line visited at a label in
    [0, p]; line_offset is the shift that was added to raw line indices.
    """

    pair: AdmissiblePair
    points: tuple[GridPoint, ...]
    arcs: tuple[DiagramArc, ...]
    length_l: int
    line_offset: int


class TraceSummary(NamedTuple):
    """Arc and bottom sequences plus the crossing-sum signature, computed
    in one pass without materialising the trace.  Agrees with the data
    derived from trace_principal_underarc (tests enforce this); the range
    audits lean on this lighter form."""

    l: int
    alpha: tuple[int, ...]
    b: tuple[int, ...]
    sigma: int


# ============================================================
# core walk
# ============================================================


def _raw_walk(p: int, q: int) -> tuple[list[int], list[int], list[str], list[int]]:
    """Trace the principal underarc in raw (unshifted) coordinates.

    Returns (lines, labels, kinds, regions): point k is (lines[k],
    labels[k]); arc k joins points k and k+1 with kind kinds[k] in region
    regions[k].  The walk must end on a label-p point after visiting
    exactly p + q points; anything else raises ModelViolationError.
    """
    half_up = (q + 1) // 2
    conn_max = p - half_up
    n = p + q
    lines = [0]
    labels = [0]
    kinds: list[str] = []
    regions: list[int] = []
    i = 0
    j = 0
    exit_right = True
    for _ in range(n - 1):
        if exit_right:
            if j <= conn_max:
                kinds.append(ARC_CONNECTING)
                regions.append(i)
                i += 1
                j += q
            else:
                kinds.append(ARC_TOP_LOOP)
                regions.append(i)
                j = 2 * p - j
                exit_right = False
        else:
            if j >= half_up:
                kinds.append(ARC_CONNECTING)
                i -= 1
                j -= q
                regions.append(i)
            else:
                kinds.append(ARC_BOTTOM_LOOP)
                regions.append(i - 1)
                j = -j
                exit_right = True
        lines.append(i)
        labels.append(j)
        if j == 0 or j == p:
            break
    if len(labels) != n:
        raise ModelViolationError(
            f"walk for ({p}, {q}) visited {len(labels)} points, expected {n}"
        )
    if labels[-1] != p:
        raise ModelViolationError(f"walk for ({p}, {q}) ended at label {labels[-1]}, expected {p}")
    return lines, labels, kinds, regions


def _span(p: int, lines: list[int], labels: list[int]) -> tuple[int, int]:
    """Shift and length: leftmost/rightmost lines visited at labels in [0, p]."""
    i_min = i_max = lines[0]
    for k, lab in enumerate(labels):
        if 0 <= lab <= p:
            i = lines[k]
            if i < i_min:
                i_min = i
            elif i > i_max:
                i_max = i
    return -i_min, i_max - i_min


def trace_principal_underarc(pair: AdmissiblePair) -> UnderarcTrace:
    """Build the full normalized trace for a pair.

    Beyond the walk's own termination checks this asserts that no point is
    visited twice, that every point lies on a line in [0, l], and that the
    connecting arcs touch every region 0 .. l-1.
    """
    p, q = pair.p, pair.q
    lines, labels, kinds, regions = _raw_walk(p, q)
    shift, l = _span(p, lines, labels)

    seen: set[tuple[int, int]] = set()
    points: list[GridPoint] = []
    for i, lab in zip(lines, labels):
        raw = (i, lab)
        if raw in seen:
            raise ModelViolationError(f"walk for ({p}, {q}) revisited point {raw}")
        seen.add(raw)
        ni = i + shift
        if ni < 0 or ni > l:
            raise ModelViolationError(f"point {raw} lies on line {ni} outside [0, {l}]")
        points.append(GridPoint(ni, lab))

    arcs: list[DiagramArc] = []
    region_touched = [0] * l
    for k, kind in enumerate(kinds):
        r = regions[k] + shift
        if kind == ARC_CONNECTING:
            if r < 0 or r >= l:
                raise ModelViolationError(f"connecting arc in region {r} outside [0, {l - 1}]")
            region_touched[r] += 1
        arcs.append(DiagramArc(kind, points[k], points[k + 1], r))
    if any(c == 0 for c in region_touched):
        raise ModelViolationError(f"walk for ({p}, {q}) misses a region: counts {region_touched}")

    return UnderarcTrace(pair, tuple(points), tuple(arcs), l, shift)


# ============================================================
# derived sequences
# ============================================================


def arc_sequence(t: UnderarcTrace) -> list[int]:
    """alpha_i: connecting arcs of the trace in region i, for 0 <= i < l."""
    alpha = [0] * t.length_l
    for arc in t.arcs:
        if arc.kind == ARC_CONNECTING:
            alpha[arc.region] += 1
    return alpha


def bottom_sequence(t: UnderarcTrace) -> list[int]:
    """b_i over lines 0..l: twice the bottom loops at W_i, plus one on the
    start line."""
    b = [0] * (t.length_l + 1)
    for arc in t.arcs:
        if arc.kind == ARC_BOTTOM_LOOP:
            b[arc.start.line] += 2
    b[t.points[0].line] += 1
    return b


def signed_crossings(t: UnderarcTrace) -> list[SignedCrossing]:
    """Crossings in traversal order: each interior-label point, signed +1
    when the underarc passes its line left to right."""
    p = t.pair.p
    out: list[SignedCrossing] = []
    for k in range(1, len(t.points) - 1):
        lab = t.points[k].label
        if 0 < lab < p:
            sign = 1 if t.arcs[k].region > t.arcs[k - 1].region else -1
            out.append(SignedCrossing(t.points[k], sign))
    if len(out) != p - 1:
        raise ModelViolationError(f"trace of {t.pair} has {len(out)} crossings, expected {p - 1}")
    return out


def diagram_signature(t: UnderarcTrace) -> int:
    """Sum of the crossing signs along the trace."""
    return sum(c.sign for c in signed_crossings(t))


# ============================================================
# one-pass summary (the range audits' workhorse)
# ============================================================


def _summarize(p: int, q: int) -> TraceSummary:
    """Same continuation rule as _raw_walk, tallying alpha, b and the
    crossing sum inline instead of storing the trace.

    Shares the final structural checks with the full builder: endpoint,
    point count, crossing count, and the region tally covering exactly
    0 .. l-1.
    """
    half_up = (q + 1) // 2
    conn_max = p - half_up
    n = p + q
    alpha_at: dict[int, int] = {}
    b_at: dict[int, int] = {}
    i = 0
    j = 0
    exit_right = True
    i_min = 0
    i_max = 0
    sigma = 0
    ncross = 0
    prev_region = 0
    steps = 0
    for _ in range(n - 1):
        lab = j
        if exit_right:
            if j <= conn_max:
                r = i
                alpha_at[r] = alpha_at.get(r, 0) + 1
                i += 1
                j += q
            else:
                r = i
                j = 2 * p - j
                exit_right = False
        else:
            if j >= half_up:
                i -= 1
                j -= q
                r = i
                alpha_at[r] = alpha_at.get(r, 0) + 1
            else:
                r = i - 1
                b_at[i] = b_at.get(i, 0) + 2
                j = -j
                exit_right = True
        if steps and 0 < lab < p:
            sigma += 1 if r > prev_region else -1
            ncross += 1
        prev_region = r
        steps += 1
        if 0 <= j <= p:
            if i < i_min:
                i_min = i
            elif i > i_max:
                i_max = i
        if j == 0 or j == p:
            break
    if steps != n - 1:
        raise ModelViolationError(f"walk for ({p}, {q}) visited {steps + 1} points, expected {n}")
    if j != p:
        raise ModelViolationError(f"walk for ({p}, {q}) ended at label {j}, expected {p}")
    if ncross != p - 1:
        raise ModelViolationError(f"walk for ({p}, {q}) crossed {ncross} times, expected {p - 1}")

    shift = -i_min
    l = i_max - i_min
    alpha = [0] * l
    for r, c in alpha_at.items():
        ri = r + shift
        if ri < 0 or ri >= l:
            raise ModelViolationError(f"connecting arc in region {ri} outside [0, {l - 1}]")
        alpha[ri] = c
    if any(c == 0 for c in alpha):
        raise ModelViolationError(f"walk for ({p}, {q}) misses a region: counts {alpha}")
    b = [0] * (l + 1)
    for line, c in b_at.items():
        li = line + shift
        if li < 0 or li > l:
            raise ModelViolationError(f"bottom loop on line {li} outside [0, {l}]")
        b[li] = c
    b[shift] += 1
    return TraceSummary(l, tuple(alpha), tuple(b), sigma)


def trace_summary(pair: AdmissiblePair) -> TraceSummary:
    """One-pass alpha, b, l and crossing-sum signature for a pair."""
    return _summarize(pair.p, pair.q)
