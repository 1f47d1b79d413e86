"""The degree balance inequality, elimination thresholds, and appendix gates.

A configuration with invariant sequence seq, sporadic-zero count gamma and
degree sum A is consistent only if

    0 >= P(seq) - (12*A - 22*gamma),

where P(seq) = d^2 - 5d - 18 - 10*sum2(seq) + 12*sum3(seq).  Everything here
is exact: integers, or Fractions where a formula divides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from ginsurvey.staircase import InvariantSequence, sum2, sum3


def required_penalty(seq: InvariantSequence) -> int:
    """The zero-independent part P that the penalty 12A - 22*gamma must cover."""
    d = seq.d
    return d * d - 5 * d - 18 - 10 * sum2(seq) + 12 * sum3(seq)


@dataclass(frozen=True)
class BalanceEvaluation:
    seq: InvariantSequence
    A: int
    gamma: int
    P: int
    value: int

    @property
    def consistent(self) -> bool:
        return self.value <= 0


def evaluate(seq: InvariantSequence, A: int, gamma: int) -> BalanceEvaluation:
    """Exact value of the balance inequality for given zero statistics."""
    if A < 0 or gamma < 0:
        raise ValueError("zero statistics must be nonnegative")
    P = required_penalty(seq)
    return BalanceEvaluation(seq, A, gamma, P, P - (12 * A - 22 * gamma))


def neg_statistic(seq: InvariantSequence, a_bound: int, z: int) -> int:
    """Balance value at (a_bound, z), divided by 12, rounded up in magnitude.

    Floor division toward minus infinity is the one convention that
    reproduces every tabulated entry.
    """
    return evaluate(seq, a_bound, z).value // 12


@dataclass(frozen=True)
class Threshold:
    seq: InvariantSequence
    z: int
    objective_threshold: int
    a_min: int


def elimination_threshold(seq: InvariantSequence, z: int) -> Threshold:
    """Elimination data: a configuration dies iff max(12A - 22*gamma) < P.

    a_min is the least integer A consistent with the balance at gamma = z,
    i.e. ceil((P + 22z) / 12).
    """
    P = required_penalty(seq)
    a_min = -((-(P + 22 * z)) // 12)
    return Threshold(seq, z, P, a_min)


def _c3(x: Fraction) -> Fraction:
    return x * (x - 1) * (x - 2) / 6


def approx_bounds(d: int, s: int) -> tuple[Fraction, Fraction]:
    """Rational two-sided envelopes: upper bound on 1 + sum2, lower on sum3."""
    if s < 2 or d <= 0:
        raise ValueError("need s >= 2 and d > 0")
    df = Fraction(d)
    upper_sum2 = df * df / (2 * s) + Fraction(s - 4, 2) * df + 1
    lower_sum3 = s * _c3(df / s + Fraction(s - 3, 2)) + 1 - comb(s - 1, 4)
    return upper_sum2, lower_sum3


class GateResult(NamedTuple):
    gate_gamma: Fraction
    cubic_value: Fraction
    d_cap_if_gate_fails: int


def _gate_cubic(s: int, d: Fraction) -> Fraction:
    if s == 4:
        return d**3 / 8 - Fraction(23, 8) * d**2 - Fraction(17, 2) * d + 33
    if s == 5:
        return d**3 / 25 - Fraction(24, 25) * d**2 - 10 * d - 9
    raise ValueError(f"gamma gate cubic only defined for s in (4, 5), got {s}")


def gamma_lower_gate(s: int, d: int) -> GateResult:
    """Few-zeros gate: if gamma stays below the gate, the cubic caps d.

    The cap is the largest integer at which the cubic is nonpositive,
    evaluated exactly (s=4: 25, s=5: 32).
    """
    gate = Fraction(3 * d, 4) if s == 4 else Fraction(2 * d, 5)
    value = _gate_cubic(s, Fraction(d))
    cap = 0
    for cand in range(1000, 2, -1):
        if _gate_cubic(s, Fraction(cand)) <= 0:
            cap = cand
            break
    return GateResult(gate, value, cap)


class LemmaResult(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    contradiction: bool


def plane_curve_lemma(s: int, d: int) -> LemmaResult:
    """Genus comparison ruling out a large plane curve on the surface.

    lhs is the sectional genus upper bound for the given s, rhs the genus of
    a half-degree plane curve.  Only a strict failure (lhs < rhs) counts as a
    contradiction; boundary equality never eliminates.
    """
    df = Fraction(d)
    if s == 4:
        lhs = df * df / 8 + 1 - Fraction(3, 4) * df
    elif s == 5:
        lhs = df * df / 10 + df / 2 + 1 - Fraction(2, 5) * df
    elif s in (6, 7):
        lhs = df * df / (2 * s) + Fraction(s - 4, 2) * df + 1
    else:
        raise ValueError(f"plane curve lemma only defined for s in 4..7, got {s}")
    rhs = (df / 2 - 1) * (df / 2 - 2) / 2
    return LemmaResult(lhs, rhs, lhs < rhs)
