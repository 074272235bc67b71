"""Invariants read off the principal underarc.

The arc sequence alpha of a trace gives the Alexander polynomial up to
units: Delta(t) = sum of (-1)^i alpha_i t^i.  The coefficient list of a
two-bridge pair is expected to be trapezoidal: strictly increasing, then a
plateau, then strictly decreasing, with the plateau centred.  With i0 the
first plateau position (1-based, plateau spanning indices i0-1 .. l-i0),
the plateau radius is m = floor((l - 2*(i0 - 1)) / 2), and the signature
is expected to bound it: floor((|sigma| + 1) / 2) >= m.

The bottom sequence b_0..b_l carries three structural properties, checked
by check_ih: an interleaved chain (ih1), a dominance inequality (ih2), and
constancy between equal values (ih3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .extended_diagram import UnderarcTrace, arc_sequence

__all__ = [
    "AlexanderPolynomial",
    "TrapezoidProfile",
    "IHReport",
    "alexander",
    "trapezoid_profile",
    "hm_check",
    "check_ih",
    "check_alpha_b_relation",
]


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Coefficients a_0..a_{l-1} of sum (-1)^i a_i t^i, all positive.

    The list must be palindromic, and its alternating sum must be +-1 for
    odd length (a knot) or 0 for even length (a two-component link).
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coeffs
        if not c:
            raise DomainError("empty coefficient list")
        if any(a < 1 for a in c):
            raise DomainError(f"coefficients must be positive: {list(c)}")
        if list(c) != list(reversed(c)):
            raise DomainError(f"coefficients must be palindromic: {list(c)}")
        alt = sum(a if i % 2 == 0 else -a for i, a in enumerate(c))
        if abs(alt) != len(c) % 2:
            raise DomainError(f"alternating sum {alt} impossible for length {len(c)}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            power = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coeff = str(a) if (i == 0 or a != 1) else ""
            terms.append(("- " if i % 2 else "+ ") + (coeff + power or "1"))
        return terms[0][2:] + ("" if len(terms) == 1 else " " + " ".join(terms[1:]))


@dataclass(frozen=True)
class TrapezoidProfile:
    """Shape summary of a coefficient list.

    i0 is 1-based: the plateau spans list indices i0-1 .. l-i0.  i0 and
    radius_m are None when the list is not trapezoidal.
    """

    is_trapezoidal: bool
    l: int
    i0: int | None
    radius_m: int | None

    @property
    def plateau_length(self) -> int:
        if not self.is_trapezoidal:
            raise DomainError("no plateau on a non-trapezoidal profile")
        assert self.i0 is not None
        return self.l - 2 * self.i0 + 2


@dataclass(frozen=True)
class IHReport:
    """Outcome of the three bottom-sequence checks.

    witness is the (h, r) pair found for ih1, or None when ih1 fails.
    """

    ih1: bool
    ih2: bool
    ih3: bool
    witness: tuple[int, int] | None


def alexander(t: UnderarcTrace) -> AlexanderPolynomial:
    """Alexander coefficients of a trace, straight from its arc sequence."""
    return AlexanderPolynomial(tuple(arc_sequence(t)))


def _coeffs(a: AlexanderPolynomial | Sequence[int]) -> list[int]:
    if isinstance(a, AlexanderPolynomial):
        return list(a.coeffs)
    return list(a)


def trapezoid_profile(a: AlexanderPolynomial | Sequence[int]) -> TrapezoidProfile:
    """Classify a coefficient list as trapezoidal or not.

    Trapezoidal means: strictly increasing up to the first maximum, the
    maximum held on a centred run (first index s and last index e of the
    maximum satisfy s + e = l - 1), and strictly decreasing after it.
    Then i0 = s + 1 and radius_m = floor((l - 2*(i0 - 1)) / 2).
    """
    c = _coeffs(a)
    l = len(c)
    if l == 0:
        raise DomainError("empty coefficient list")
    if any(x < 1 for x in c):
        raise DomainError(f"coefficients must be positive: {c}")
    top = max(c)
    s = c.index(top)
    e = l - 1 - c[::-1].index(top)
    ok = s + e == l - 1
    if ok:
        for k in range(s, e):
            if c[k] != top:
                ok = False
                break
    if ok:
        for k in range(s):
            if c[k] >= c[k + 1]:
                ok = False
                break
    if ok:
        for k in range(e, l - 1):
            if c[k] <= c[k + 1]:
                ok = False
                break
    if not ok:
        return TrapezoidProfile(False, l, None, None)
    i0 = s + 1
    return TrapezoidProfile(True, l, i0, (l - 2 * (i0 - 1)) // 2)


def hm_check(profile: TrapezoidProfile, sigma: int) -> tuple[bool, int]:
    """Radius bound floor((|sigma|+1)/2) >= radius_m.

    Returns (holds, slack).  A non-trapezoidal profile has no radius and
    is a hard precondition error here; the audits report that case through
    the shape check instead.
    """
    if not profile.is_trapezoidal:
        raise DomainError("radius bound needs a trapezoidal profile")
    assert profile.radius_m is not None
    lhs = (abs(sigma) + 1) // 2
    return lhs >= profile.radius_m, lhs - profile.radius_m


def check_ih(b: Sequence[int], l: int) -> IHReport:
    """Run the three bottom-sequence checks on b_0..b_l.

    ih1: there are h in [1, l] and r <= h with b_i = 0 for all i > h and
    the interleaved chain S_0 <= ... formed by S_{2j} = b_{h-j} and
    S_{2j+1} = b_j satisfying 0 <= S_0 < S_1 < ... < S_r = ... = S_h.
    The witness reported is the smallest such h, then the smallest r.

    ih2: for every h* >= h and 2j <= h*, b_j >= b_{h*-j}, entries beyond l
    reading 0.  Checking h* up to 2l is exhaustive: past that, every
    compared right-hand index exceeds l.

    ih3: if b_i = b_j for i < j then b is constant on [i, j].
    """
    b = list(b)
    if len(b) != l + 1:
        raise DomainError(f"bottom sequence has {len(b)} entries, expected l + 1 = {l + 1}")
    if any(x < 0 for x in b):
        raise DomainError(f"bottom sequence entries must be >= 0: {b}")

    last_nonzero = 0
    for k in range(l, -1, -1):
        if b[k] != 0:
            last_nonzero = k
            break

    ih1 = False
    witness: tuple[int, int] | None = None
    for h in range(max(1, last_nonzero), l + 1):
        s = [0] * (h + 1)
        for k in range(h + 1):
            s[k] = b[h - k // 2] if k % 2 == 0 else b[(k - 1) // 2]
        r = 0
        while r < h and s[r] < s[r + 1]:
            r += 1
        if all(s[k] == s[r] for k in range(r, h + 1)):
            ih1 = True
            witness = (h, r)
            break

    ih2 = True
    if ih1:
        assert witness is not None
        h = witness[0]
        ext = b + [0] * (2 * l + 1 - l)
        # suffix maxima: b_j must dominate every b_i with i >= max(j, h - j)
        suf = list(ext)
        for k in range(len(suf) - 2, -1, -1):
            if suf[k + 1] > suf[k]:
                suf[k] = suf[k + 1]
        for j in range(0, 2 * l + 1):
            lo = max(j, h - j)
            if lo < len(suf) and ext[j] < suf[lo]:
                ih2 = False
                break
    else:
        ih2 = False

    ih3 = True
    runs: list[int] = []
    for x in b:
        if not runs or runs[-1] != x:
            runs.append(x)
    if len(set(runs)) != len(runs):
        ih3 = False

    return IHReport(ih1, ih2, ih3, witness)


def check_alpha_b_relation(alpha: Sequence[int], b: Sequence[int]) -> bool:
    """alpha_i - alpha_{i-1} = b_i - b_{l-i} for 1 <= i <= l, with the
    convention alpha_l = 0."""
    l = len(alpha)
    if len(b) != l + 1:
        raise DomainError(f"need len(b) = len(alpha) + 1, got {len(b)} and {l}")
    a = list(alpha) + [0]
    return all(a[i] - a[i - 1] == b[i] - b[l - i] for i in range(1, l + 1))
