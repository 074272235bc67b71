from math import gcd

import pytest

from twobridge import (
    AdmissiblePair,
    arc_sequence,
    bottom_sequence,
    diagram_signature,
    signed_crossings,
    signature_closed_form,
    trace_principal_underarc,
    trace_summary,
)
from twobridge.extended_diagram import ARC_BOTTOM_LOOP, ARC_CONNECTING, ARC_TOP_LOOP

# (l, alpha, b, sigma) worked out by hand, walking each diagram
FROZEN = {
    (1, 1): (1, [1], [1, 0], 0),
    (2, 1): (2, [1, 1], [1, 0, 0], 1),
    (2, 3): (2, [1, 1], [1, 2, 0], -1),
    (3, 1): (3, [1, 1, 1], [1, 0, 0, 0], 2),
    (3, 5): (3, [1, 1, 1], [1, 2, 2, 0], -2),
    (4, 3): (2, [2, 2], [2, 1, 0], 1),
    (5, 3): (3, [1, 3, 1], [1, 2, 0, 0], 0),
    (1, 3): (1, [1], [2, 1], 0),
    (1, 5): (1, [1], [3, 2], 0),
    (1, 9): (1, [1], [5, 4], 0),
}


@pytest.mark.parametrize("pq,expected", sorted(FROZEN.items()))
def test_summary_frozen(pq, expected):
    l, alpha, b, sigma = expected
    s = trace_summary(AdmissiblePair(*pq))
    assert s.l == l
    assert list(s.alpha) == alpha
    assert list(s.b) == b
    assert s.sigma == sigma


def test_trace_3_1_points():
    # rightmost-possible walk: every step is a rightward connecting arc
    t = trace_principal_underarc(AdmissiblePair(3, 1))
    assert [(pt.line, pt.label) for pt in t.points] == [(0, 0), (1, 1), (2, 2), (3, 3)]
    assert all(a.kind == ARC_CONNECTING for a in t.arcs)
    assert t.length_l == 3
    assert t.line_offset == 0


def test_trace_4_3_structure():
    t = trace_principal_underarc(AdmissiblePair(4, 3))
    assert len(t.points) == 7
    assert [a.kind for a in t.arcs] == [
        ARC_CONNECTING,
        ARC_TOP_LOOP,
        ARC_CONNECTING,
        ARC_CONNECTING,
        ARC_BOTTOM_LOOP,
        ARC_CONNECTING,
    ]
    assert t.length_l == 2
    assert t.line_offset == 1
    assert arc_sequence(t) == [2, 2]
    assert bottom_sequence(t) == [2, 1, 0]


def test_signed_crossings_4_3():
    t = trace_principal_underarc(AdmissiblePair(4, 3))
    cs = signed_crossings(t)
    assert [c.sign for c in cs] == [1, -1, 1]
    assert [c.at.label for c in cs] == [3, 2, 1]
    assert diagram_signature(t) == 1


def test_trace_visits_every_point_once():
    for p, q in [(4, 3), (5, 3), (7, 5), (9, 11), (1, 9)]:
        t = trace_principal_underarc(AdmissiblePair(p, q))
        assert len(t.points) == p + q
        assert len(set(t.points)) == p + q
        assert all(0 <= pt.line <= t.length_l for pt in t.points)
        assert t.points[0].label == 0
        assert t.points[-1].label == p


def test_crossing_count_is_p_minus_1():
    for p, q in [(2, 1), (5, 7), (8, 3), (11, 5)]:
        t = trace_principal_underarc(AdmissiblePair(p, q))
        assert len(signed_crossings(t)) == p - 1


# ============================================================
# the one-pass summary must agree with the full trace
# ============================================================


def test_summary_matches_full_trace():
    for p in range(1, 31):
        for q in range(1, 4 * p + 1, 2):
            if gcd(p, q) != 1:
                continue
            x = AdmissiblePair(p, q)
            t = trace_principal_underarc(x)
            s = trace_summary(x)
            assert s.l == t.length_l
            assert list(s.alpha) == arc_sequence(t)
            assert list(s.b) == bottom_sequence(t)
            assert s.sigma == diagram_signature(t)


def test_summary_sigma_matches_closed_form():
    for p in range(1, 31):
        for q in range(1, 2 * p, 2):
            if gcd(p, q) != 1:
                continue
            x = AdmissiblePair(p, q)
            assert trace_summary(x).sigma == signature_closed_form(x)
