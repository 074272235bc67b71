"""Admissible pairs and the three elementary moves on them.

A two-bridge type is described by a pair of positive integers (p, q) with
q odd and gcd(p, q) = 1.  Three moves act on these pairs:

    T1: (p, q) -> (p + q, q)
    T2: (p, q) -> (p, 2p + q)
    T3: (p, q) -> (p, 2p - q)      only defined when p > q

Every admissible pair is reachable from (1, 1) by a finite move sequence,
and `decompose` recovers one such sequence by greedy inversion.  The module
also carries the closed-form signature (an alternating floor sum) and the
reduction of a pair to its canonical representative with 0 < q < 2p.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import DomainError, MoveError


class TMove(Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"


def is_admissible(p: int, q: int) -> bool:
    """Return True when (p, q) is an admissible pair.

    Both entries must be positive; q must be odd and coprime to p.
    Non-positive input is a caller error, not a False.
    """
    if not isinstance(p, int) or not isinstance(q, int) or isinstance(p, bool) or isinstance(q, bool):
        raise DomainError(f"pair entries must be integers, got ({p!r}, {q!r})")
    if p < 1 or q < 1:
        raise DomainError(f"pair entries must be positive, got ({p}, {q})")
    return q % 2 == 1 and gcd(p, q) == 1


@dataclass(frozen=True)
class AdmissiblePair:
    """A validated (p, q) pair; q odd, coprime to p, both positive."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not is_admissible(self.p, self.q):
            raise DomainError(f"({self.p}, {self.q}) is not admissible: need q odd and gcd(p, q) = 1")

    def __str__(self) -> str:
        return f"({self.p}, {self.q})"


@dataclass(frozen=True)
class MoveSequence:
    """A finite word in the moves, applied left to right from (1, 1).

    A T3 entry only makes sense straight after a T1 (the move needs p > q,
    which is exactly what a preceding T1 guarantees); the constructor
    enforces that shape.
    """

    moves: tuple[TMove, ...]

    def __post_init__(self) -> None:
        for k, m in enumerate(self.moves):
            if m is TMove.T3 and (k == 0 or self.moves[k - 1] is not TMove.T1):
                raise DomainError(f"T3 at position {k} is not immediately preceded by T1")

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __str__(self) -> str:
        return " ".join(m.value for m in self.moves)

    def replay(self, start: AdmissiblePair | None = None) -> AdmissiblePair:
        """Apply the whole word starting from `start` (default (1, 1))."""
        x = start if start is not None else AdmissiblePair(1, 1)
        for m in self.moves:
            x = apply_move(m, x)
        return x


def apply_move(move: TMove, x: AdmissiblePair) -> AdmissiblePair:
    """Apply one move to an admissible pair and return the new pair."""
    p, q = x.p, x.q
    if move is TMove.T1:
        return AdmissiblePair(p + q, q)
    if move is TMove.T2:
        return AdmissiblePair(p, 2 * p + q)
    if move is TMove.T3:
        if p <= q:
            raise MoveError(f"T3 needs p > q, got ({p}, {q})")
        return AdmissiblePair(p, 2 * p - q)
    raise DomainError(f"unknown move {move!r}")


def decompose(x: AdmissiblePair) -> MoveSequence:
    """Write x as a move word from (1, 1), by greedy inversion.

    Working backwards from (p, q): when p > q undo a T1, when q > 2p undo
    a T2, and when p < q < 2p undo a T3.  Exactly one case applies to any
    admissible pair other than (1, 1) (p = q forces p = q = 1, and q = 2p
    is impossible for odd q), and each inverse strictly decreases p + q,
    so the walk reaches (1, 1).  The word is returned in forward order.
    """
    p, q = x.p, x.q
    rev: list[TMove] = []
    while (p, q) != (1, 1):
        if p > q:
            p -= q
            rev.append(TMove.T1)
        elif q > 2 * p:
            q -= 2 * p
            rev.append(TMove.T2)
        else:
            q = 2 * p - q
            rev.append(TMove.T3)
    return MoveSequence(tuple(reversed(rev)))


def signature_closed_form(x: AdmissiblePair) -> int:
    """Signature of the pair as the alternating floor sum.

    sum over i = 1 .. p-1 of (-1) ** floor(i*q / p).  Exact integers only.
    """
    p, q = x.p, x.q
    s = 0
    for i in range(1, p):
        s += -1 if ((i * q) // p) & 1 else 1
    return s


def canonical_type(x: AdmissiblePair) -> tuple[AdmissiblePair, bool]:
    """Reduce q modulo 2p into the canonical window 0 < q < 2p.

    The reduction never needs a mirror flip, so the second component is
    always False; it is kept so callers see the orientation question was
    considered rather than forgotten.
    """
    r = x.q % (2 * x.p)
    return AdmissiblePair(x.p, r), False
