import dataclasses
from math import gcd

import pytest

from twobridge import (
    AdmissiblePair,
    DomainError,
    MoveError,
    MoveSequence,
    TMove,
    apply_move,
    canonical_type,
    decompose,
    is_admissible,
    signature_closed_form,
)


# ============================================================
# admissibility
# ============================================================


@pytest.mark.parametrize(
    "p,q,ok",
    [
        (1, 1, True),
        (4, 3, True),
        (3, 5, True),
        (1, 9, True),
        (4, 2, False),   # q even
        (6, 3, False),   # gcd 3
        (5, 5, False),
        (9, 3, False),
    ],
)
def test_is_admissible(p, q, ok):
    assert is_admissible(p, q) is ok


@pytest.mark.parametrize("p,q", [(0, 1), (1, 0), (-2, 3), (3, -1)])
def test_nonpositive_entries_rejected(p, q):
    with pytest.raises(DomainError):
        is_admissible(p, q)


@pytest.mark.parametrize("p,q", [("3", 1), (3, 1.0), (True, 1), (3, True)])
def test_nonint_entries_rejected(p, q):
    with pytest.raises(DomainError):
        is_admissible(p, q)


def test_pair_constructor_validates():
    with pytest.raises(DomainError):
        AdmissiblePair(6, 3)
    with pytest.raises(DomainError):
        AdmissiblePair(2, 2)
    assert str(AdmissiblePair(4, 3)) == "(4, 3)"


def test_pair_is_frozen():
    x = AdmissiblePair(4, 3)
    with pytest.raises(dataclasses.FrozenInstanceError):
        x.p = 5


# ============================================================
# moves
# ============================================================


def test_apply_moves():
    x = AdmissiblePair(4, 3)
    assert apply_move(TMove.T1, x) == AdmissiblePair(7, 3)
    assert apply_move(TMove.T2, x) == AdmissiblePair(4, 11)
    assert apply_move(TMove.T3, x) == AdmissiblePair(4, 5)


def test_t3_needs_p_greater_than_q():
    with pytest.raises(MoveError):
        apply_move(TMove.T3, AdmissiblePair(3, 5))
    with pytest.raises(MoveError):
        apply_move(TMove.T3, AdmissiblePair(1, 1))


def test_move_sequence_shape():
    MoveSequence((TMove.T1, TMove.T3))
    MoveSequence((TMove.T2, TMove.T1, TMove.T3, TMove.T1))
    with pytest.raises(DomainError):
        MoveSequence((TMove.T3,))
    with pytest.raises(DomainError):
        MoveSequence((TMove.T2, TMove.T3))
    with pytest.raises(DomainError):
        MoveSequence((TMove.T1, TMove.T3, TMove.T3))


def test_move_sequence_str_and_len():
    w = MoveSequence((TMove.T2, TMove.T1))
    assert str(w) == "T2 T1"
    assert len(w) == 2
    assert list(w) == [TMove.T2, TMove.T1]
    assert str(MoveSequence(())) == ""


def test_replay_from_origin():
    assert MoveSequence((TMove.T2, TMove.T1)).replay() == AdmissiblePair(4, 3)
    assert MoveSequence(()).replay() == AdmissiblePair(1, 1)
    assert MoveSequence((TMove.T1,)).replay(AdmissiblePair(4, 3)) == AdmissiblePair(7, 3)


# ============================================================
# decomposition
# ============================================================


@pytest.mark.parametrize(
    "p,q,word",
    [
        (1, 1, ""),
        (4, 3, "T2 T1"),
        (5, 3, "T1 T3 T1"),
        (3, 1, "T1 T1"),
        (2, 3, "T1 T3"),
        (1, 3, "T2"),
    ],
)
def test_decompose_frozen_words(p, q, word):
    assert str(decompose(AdmissiblePair(p, q))) == word


def test_decompose_round_trip_small():
    for p in range(1, 61):
        for q in range(1, 2 * p, 2):
            if gcd(p, q) != 1:
                continue
            x = AdmissiblePair(p, q)
            assert decompose(x).replay() == x


# ============================================================
# closed-form signature, canonical window
# ============================================================


@pytest.mark.parametrize(
    "p,q,sigma",
    [(1, 1, 0), (4, 3, 1), (3, 1, 2), (2, 3, -1), (3, 5, -2), (5, 3, 0), (2, 1, 1)],
)
def test_signature_closed_form_frozen(p, q, sigma):
    assert signature_closed_form(AdmissiblePair(p, q)) == sigma


def test_canonical_type():
    assert canonical_type(AdmissiblePair(4, 11)) == (AdmissiblePair(4, 3), False)
    assert canonical_type(AdmissiblePair(4, 3)) == (AdmissiblePair(4, 3), False)
    assert canonical_type(AdmissiblePair(1, 9)) == (AdmissiblePair(1, 1), False)
    assert canonical_type(AdmissiblePair(3, 7)) == (AdmissiblePair(3, 1), False)
