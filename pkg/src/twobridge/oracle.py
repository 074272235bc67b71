"""Closed-form cross-checks, independent of the diagram walk.

Everything here is derived from the sign sequence

    eps_j = (-1) ** floor(j * q / p),   j = 1 .. p-1,

using integer arithmetic only.  Its sum reproduces the signature, and the
partial-sum exponent trick below reproduces the Alexander coefficients, so
the two modules can audit each other without sharing any code path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import OracleShapeError
from .invariants import AlexanderPolynomial
from .pair_core import AdmissiblePair


@dataclass(frozen=True)
class EpsilonSequence:
    """Signs eps_1 .. eps_{p-1}; empty when p = 1."""

    pair: AdmissiblePair
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.signs) == self.pair.p - 1
        assert all(s in (-1, 1) for s in self.signs)

    def total(self) -> int:
        return sum(self.signs)


def epsilon_sequence(pair: AdmissiblePair) -> EpsilonSequence:
    """The sign sequence of a pair."""
    p, q = pair.p, pair.q
    signs = tuple(-1 if ((j * q) // p) & 1 else 1 for j in range(1, p))
    return EpsilonSequence(pair, signs)


def alexander_oracle(pair: AdmissiblePair) -> AlexanderPolynomial:
    """Alexander coefficients from partial sums of the sign sequence.

    Form sum over k = 0 .. p-1 of (-1)^k t^{h_k}, where h_0 = 0 and h_k is
    the k-th partial sum of the signs.  Collect like powers, shift the
    lowest exponent to 0, and normalise the overall sign so the constant
    coefficient is positive.  The result must have no zero coefficient
    inside its range and strictly alternating signs; a break in that shape
    raises OracleShapeError (a reportable finding, not a crash: the audits
    catch it).
    """
    eps = epsilon_sequence(pair)
    coeff: Counter[int] = Counter()
    h = 0
    coeff[0] += 1
    for k, s in enumerate(eps.signs, start=1):
        h += s
        coeff[h] += -1 if k & 1 else 1
    coeff = Counter({e: c for e, c in coeff.items() if c != 0})
    if not coeff:
        raise OracleShapeError(f"all terms cancelled for {pair}")
    lo = min(coeff)
    hi = max(coeff)
    span = hi - lo
    c = [coeff.get(lo + i, 0) for i in range(span + 1)]
    if c[0] < 0:
        c = [-x for x in c]
    for i, x in enumerate(c):
        if x == 0:
            raise OracleShapeError(f"zero coefficient at t^{i} for {pair}: {c}")
        if (x < 0) != (i % 2 == 1):
            raise OracleShapeError(f"sign break at t^{i} for {pair}: {c}")
    return AlexanderPolynomial(tuple(abs(x) for x in c))
