"""Connected invariant sequences and the two-variable staircase they generate.

A configuration of degree d with s invariants is a strictly decreasing
sequence of positive integers lam[0] > lam[1] > ... > lam[s-1] summing to d.
Connectedness caps each consecutive drop at 2.  The attached staircase ideal
in two variables is generated by x0^s together with x0^i * x1^lam[i]; its
membership predicate and two weighted binomial sums feed every later stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import NamedTuple


class Column(NamedTuple):
    """Exponent pair (a, b) of a two-variable monomial x0^a * x1^b."""

    a: int
    b: int


@dataclass(frozen=True, order=True)
class InvariantSequence:
    """Strictly decreasing positive invariants, largest first.

    The constructor enforces positivity and strict decrease.  Connectedness
    (consecutive drops of at most 2) is exposed as a property rather than a
    hard invariant: saturation of a lifted ideal can legitimately produce a
    non-connected sequence, while enumeration only ever emits connected ones.
    """

    lambdas: tuple[int, ...]

    def __post_init__(self) -> None:
        lams = tuple(int(v) for v in self.lambdas)
        object.__setattr__(self, "lambdas", lams)
        if not lams:
            raise ValueError("invariant sequence must be nonempty")
        if any(v < 1 for v in lams):
            raise ValueError(f"invariants must be positive: {lams}")
        for left, right in zip(lams, lams[1:]):
            if left <= right:
                raise ValueError(f"invariants must strictly decrease: {lams}")

    @property
    def s(self) -> int:
        return len(self.lambdas)

    @property
    def d(self) -> int:
        return sum(self.lambdas)

    @property
    def is_connected(self) -> bool:
        return all(
            left <= right + 2 for left, right in zip(self.lambdas, self.lambdas[1:])
        )

    def require_connected(self) -> "InvariantSequence":
        if not self.is_connected:
            raise ValueError(f"invariants are not connected: {self.lambdas}")
        return self

    @classmethod
    def parse(cls, text: str) -> "InvariantSequence":
        """Parse the comma-separated descending form, e.g. "13,11,9,7,6"."""
        return cls(tuple(int(part) for part in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.lambdas)


def staircase_contains(seq: InvariantSequence, col: Column) -> bool:
    """Whether x0^a * x1^b lies in the staircase ideal of seq."""
    a, b = col
    if a < 0 or b < 0:
        raise ValueError(f"column exponents must be nonnegative: {col}")
    if a >= seq.s:
        return True
    return b >= seq.lambdas[a]


def _tail_sum_bounds(value: int, tail: int) -> tuple[int, int] | None:
    """Feasible (min, max) totals of `tail` further invariants below `value`.

    Each further invariant drops 1 or 2 from its predecessor and stays
    positive.  Returns None when not even all-1 drops keep the tail positive.
    The bounds are used only to prune; exactness comes from the recursion.
    """
    if value - tail < 1:
        return None
    hi = tail * value - tail * (tail + 1) // 2
    lo, current = 0, value
    for step in range(1, tail + 1):
        current = max(current - 2, tail - step + 1)
        lo += current
    return lo, hi


def enumerate_sequences(d: int, s: int) -> list[InvariantSequence]:
    """All connected sequences with s invariants summing to d, lex descending."""
    if d < 1 or s < 1:
        raise ValueError("degree and invariant count must be positive")
    results: list[InvariantSequence] = []

    def extend(prefix: list[int], remaining: int) -> None:
        parts = s - len(prefix)
        if parts == 0:
            if remaining == 0:
                results.append(InvariantSequence(tuple(prefix)))
            return
        if prefix:
            candidates = [v for v in (prefix[-1] - 1, prefix[-1] - 2) if v >= 1]
        else:
            candidates = list(range(remaining, 0, -1))
        for value in candidates:
            rest = remaining - value
            if rest < 0:
                continue
            bounds = _tail_sum_bounds(value, parts - 1)
            if bounds is None:
                continue
            if bounds[0] <= rest <= bounds[1]:
                extend(prefix + [value], rest)

    extend([], d)
    return results


def sum2(seq: InvariantSequence) -> int:
    """Sum of C(lam[i], 2) + (i - 1) * lam[i], index i starting at 0."""
    return sum(comb(lam, 2) + (i - 1) * lam for i, lam in enumerate(seq.lambdas))


def _comb3(n: int) -> int:
    return comb(n, 3) if n >= 3 else 0


def sum3(seq: InvariantSequence) -> int:
    """Sum of C(lam[i] + i - 1, 3) - C(i - 1, 3), with C(n, 3) = 0 for n < 3."""
    return sum(
        _comb3(lam + i - 1) - _comb3(i - 1) for i, lam in enumerate(seq.lambdas)
    )


class ACMKind(Enum):
    NOT_ACM = "not_acm"
    COMPLETE_INTERSECTION = "complete_intersection"
    LINKED_TO_LINE = "linked_to_line"


class ACMClass(NamedTuple):
    kind: ACMKind
    s: int | None = None
    ci_degree: int | None = None

    @property
    def is_acm(self) -> bool:
        return self.kind is not ACMKind.NOT_ACM

    def __str__(self) -> str:
        if not self.is_acm:
            return "none"
        tag = "ci" if self.kind is ACMKind.COMPLETE_INTERSECTION else "linked"
        return f"{tag}({self.s},{self.ci_degree})"


def acm_class(seq: InvariantSequence) -> ACMClass:
    """Detect the two gap patterns that force an ACM (no sporadic zeros) curve.

    All gaps exactly 2 puts the configuration on a complete intersection of
    type (s, lam[s-1] + s - 1).  The same with the single exception
    lam[0] = lam[1] + 1 is linked to a line by that complete intersection.
    """
    if seq.s < 2:
        raise ValueError("ACM classification needs at least two invariants")
    gaps = [left - right for left, right in zip(seq.lambdas, seq.lambdas[1:])]
    ci_degree = seq.lambdas[-1] + seq.s - 1
    if all(g == 2 for g in gaps):
        return ACMClass(ACMKind.COMPLETE_INTERSECTION, seq.s, ci_degree)
    if gaps[0] == 1 and all(g == 2 for g in gaps[1:]):
        return ACMClass(ACMKind.LINKED_TO_LINE, seq.s, ci_degree)
    return ACMClass(ACMKind.NOT_ACM)
