"""Sporadic-zero budgets and the imported structural priors gating the survey."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import NamedTuple

from ginsurvey.staircase import InvariantSequence, acm_class, sum2

S4_TABLE = "s4_table"
S4_PAPER = "s4_paper"
S5 = "s5"

# ACM configurations carry no sporadic zeros, so the balance inequality caps
# their degree outright; beyond the cap they cannot occur.
ACM_DEGREE_CAPS = {4: 10, 5: 17}


class UnsupportedS(ValueError):
    """Budget formulas are only available for 4 or 5 invariants."""


@dataclass(frozen=True)
class BudgetReport:
    seq: InvariantSequence
    z: int
    variant: str


def max_sporadic(seq: InvariantSequence, variant: str | None = None) -> BudgetReport:
    """Largest admissible number of sporadic zeros, exact rational floor.

    For four invariants two published forms circulate: the one carrying a
    leading 1 (``s4_paper``) and the one without it (``s4_table``).  Only the
    latter reproduces all tabulated budgets, so it is the default.
    """
    d = Fraction(seq.d)
    s2 = Fraction(sum2(seq))
    if seq.s == 5:
        if variant not in (None, S5):
            raise ValueError(f"variant {variant!r} is not valid for s=5")
        bound = 1 + s2 - (d * d - 5 * d + 10) / 10
        chosen = S5
    elif seq.s == 4:
        chosen = variant or S4_TABLE
        if chosen == S4_TABLE:
            bound = s2 - (d * d - 9 * d) / 8
        elif chosen == S4_PAPER:
            bound = 1 + s2 - d * d / 8 + 9 * d / 8
        else:
            raise ValueError(f"unknown s=4 variant {chosen!r}")
    else:
        raise UnsupportedS(f"no budget formula for s={seq.s}")
    return BudgetReport(seq, floor(bound), chosen)


@dataclass(frozen=True)
class Priors:
    """Imported bounds that scope the survey; configuration, not computation."""

    s_min: int = 4
    s_max: int = 5
    d_max: int = 66
    d_cap_s3: int = 8
    d_cap_s67: int = 44

    @staticmethod
    def degree_gate(s: int) -> int:
        return (s - 1) ** 2 + 1

    @classmethod
    def from_dict(cls, data: dict) -> "Priors":
        return cls(**data)


class AdmissibleResult(NamedTuple):
    ok: bool
    reason: str | None = None


def admissible(seq: InvariantSequence, priors: Priors | None = None) -> AdmissibleResult:
    """Whether a configuration belongs in the survey at all."""
    priors = priors or Priors()
    gate = Priors.degree_gate(seq.s)
    if seq.d <= gate:
        return AdmissibleResult(False, f"d={seq.d} <= (s-1)^2+1 = {gate}")
    if not priors.s_min <= seq.s <= priors.s_max:
        return AdmissibleResult(
            False, f"s={seq.s} outside survey range [{priors.s_min},{priors.s_max}]"
        )
    cap = ACM_DEGREE_CAPS.get(seq.s)
    if cap is not None and seq.d > cap:
        cls = acm_class(seq)
        if cls.is_acm:
            return AdmissibleResult(False, f"ACM ({cls}) with d={seq.d} > {cap}")
    return AdmissibleResult(True)
