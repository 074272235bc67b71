from math import gcd

import pytest

from twobridge import (
    AdmissiblePair,
    alexander_oracle,
    epsilon_sequence,
    signature_closed_form,
    trace_summary,
)


def test_epsilon_frozen():
    assert epsilon_sequence(AdmissiblePair(4, 3)).signs == (1, -1, 1)
    assert epsilon_sequence(AdmissiblePair(3, 1)).signs == (1, 1)
    assert epsilon_sequence(AdmissiblePair(3, 5)).signs == (-1, -1)
    assert epsilon_sequence(AdmissiblePair(1, 1)).signs == ()


def test_epsilon_total_is_signature():
    for p in range(1, 40):
        for q in range(1, 2 * p, 2):
            if gcd(p, q) != 1:
                continue
            x = AdmissiblePair(p, q)
            assert epsilon_sequence(x).total() == signature_closed_form(x)


@pytest.mark.parametrize(
    "p,q,coeffs",
    [
        (1, 1, (1,)),
        (2, 1, (1, 1)),
        (3, 1, (1, 1, 1)),
        (4, 3, (2, 2)),
        (5, 3, (1, 3, 1)),
        (3, 5, (1, 1, 1)),
        (7, 5, (2, 3, 2)),
    ],
)
def test_oracle_frozen(p, q, coeffs):
    poly = alexander_oracle(AdmissiblePair(p, q))
    assert poly.coeffs == coeffs


def test_oracle_degree_and_determinant():
    for p in range(1, 40):
        for q in range(1, 2 * p, 2):
            if gcd(p, q) != 1:
                continue
            x = AdmissiblePair(p, q)
            poly = alexander_oracle(x)
            assert sum(poly.coeffs) == p
            assert poly.degree == trace_summary(x).l - 1


def test_oracle_matches_diagram():
    for p in range(1, 40):
        for q in range(1, 2 * p, 2):
            if gcd(p, q) != 1:
                continue
            x = AdmissiblePair(p, q)
            assert alexander_oracle(x).coeffs == trace_summary(x).alpha


def test_oracle_mirror_consistency():
    # the 2p - q partner negates the signature and keeps the coefficients
    for p, q in [(3, 1), (4, 3), (5, 3), (8, 5)]:
        x = AdmissiblePair(p, q)
        m = AdmissiblePair(p, 2 * p - q)
        assert alexander_oracle(m).coeffs == alexander_oracle(x).coeffs
        assert signature_closed_form(m) == -signature_closed_form(x)
