"""Three-variable monomial ideals lifting a staircase, and their height model.

A lift of a staircase is a Borel-fixed monomial ideal in x0, x1, x2 whose
x2-saturation is the staircase.  Because membership along each staircase
column (a, b) is upward closed in the x2 exponent, the whole ideal is
captured by one integer per column: the height H(a, b), the least c with
x0^a * x1^b * x2^c in the ideal.  Monomials below a positive height are the
sporadic zeros; their count and degree sum drive the elimination inequality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from ginsurvey.staircase import Column, InvariantSequence, staircase_contains


class NotACurveIdeal(ValueError):
    """The ideal does not have the shape of a saturated curve lift."""


class Monomial(NamedTuple):
    e0: int
    e1: int
    e2: int

    @property
    def degree(self) -> int:
        return self.e0 + self.e1 + self.e2

    def divides(self, other: "Monomial") -> bool:
        return self.e0 <= other.e0 and self.e1 <= other.e1 and self.e2 <= other.e2

    def __str__(self) -> str:
        parts = []
        for name, e in zip(("x0", "x1", "x2"), self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _canonical_order(m: Monomial) -> tuple[int, int, int]:
    # display order used throughout: x0 exponent descending, then x1, x2 ascending
    return (-m.e0, m.e1, m.e2)


def _minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    unique = sorted(set(monomials), key=lambda m: (m.degree, _canonical_order(m)))
    kept: list[Monomial] = []
    for m in unique:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return sorted(kept, key=_canonical_order)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators, canonically ordered."""

    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        gens = tuple(Monomial(*g) for g in self.generators)
        if any(e < 0 for g in gens for e in g):
            raise ValueError("exponents must be nonnegative")
        for g in gens:
            if any(h != g and h.divides(g) for h in gens):
                raise ValueError(f"generator set is not minimal: {g} is redundant")
        object.__setattr__(self, "generators", tuple(sorted(gens, key=_canonical_order)))

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        """Build the ideal generated by arbitrary monomials, minimalizing."""
        return cls(tuple(_minimalize(monomials)))

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    @property
    def max_degree(self) -> int:
        return max(g.degree for g in self.generators)

    def to_json_dict(self) -> dict:
        return {"vars": 3, "generators": [[g.e0, g.e1, g.e2] for g in self.generators]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MonomialIdeal":
        if data.get("vars") != 3:
            raise ValueError("expected a 3-variable ideal ('vars': 3)")
        gens = [Monomial(*map(int, triple)) for triple in data["generators"]]
        if not gens:
            raise ValueError("ideal must have at least one generator")
        return cls.from_monomials(gens)


def is_borel_fixed(ideal: MonomialIdeal) -> bool:
    """Check closure under moving one exponent unit to a lower-index variable."""
    for g in ideal.generators:
        moves = []
        if g.e1 > 0:
            moves.append(Monomial(g.e0 + 1, g.e1 - 1, g.e2))
        if g.e2 > 0:
            moves.append(Monomial(g.e0 + 1, g.e1, g.e2 - 1))
            moves.append(Monomial(g.e0, g.e1 + 1, g.e2 - 1))
        if not all(ideal.contains(m) for m in moves):
            return False
    return True


def saturate(ideal: MonomialIdeal) -> InvariantSequence:
    """Read the staircase invariants off the x2-stripped, minimalized ideal."""
    stripped = _minimalize(Monomial(g.e0, g.e1, 0) for g in ideal.generators)
    pure = [g for g in stripped if g.e1 == 0]
    if not pure:
        raise NotACurveIdeal("no pure x0 power after stripping x2")
    s = min(g.e0 for g in pure)
    lambdas = []
    for a in range(s):
        row = [g.e1 for g in stripped if g.e0 <= a]
        if not row:
            raise NotACurveIdeal(f"row {a} of the stripped staircase is empty")
        lambdas.append(min(row))
    try:
        return InvariantSequence(tuple(lambdas))
    except ValueError as exc:
        raise NotACurveIdeal(f"malformed staircase rows: {exc}") from exc


@dataclass(frozen=True)
class HeightFunction:
    """Per-column least x2 exponent lying in the ideal, zero almost everywhere.

    Only positive heights are stored.  Support must sit inside the staircase
    of the attached sequence.
    """

    seq: InvariantSequence
    heights: dict[Column, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[Column, int] = {}
        for col, h in self.heights.items():
            col = Column(*col)
            h = int(h)
            if h < 0:
                raise ValueError(f"negative height at {col}")
            if h == 0:
                continue
            if not staircase_contains(self.seq, col):
                raise ValueError(f"height support outside the staircase: {col}")
            cleaned[col] = h
        object.__setattr__(self, "heights", cleaned)

    def get(self, col: Column) -> int:
        return self.heights.get(Column(*col), 0)

    def support(self) -> list[tuple[Column, int]]:
        return sorted(self.heights.items())

    @property
    def gamma(self) -> int:
        return sum(self.heights.values())

    def canonical(self) -> tuple[tuple[Column, int], ...]:
        return tuple(self.support())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeightFunction):
            return NotImplemented
        return self.seq == other.seq and self.heights == other.heights

    def __hash__(self) -> int:
        return hash((self.seq, self.canonical()))


def heights_of(ideal: MonomialIdeal) -> HeightFunction:
    """Height function of a Borel-fixed curve lift."""
    seq = saturate(ideal)
    max_e1 = max(g.e1 for g in ideal.generators)
    max_e2 = max(g.e2 for g in ideal.generators)
    b_limit = max_e1 + max_e2 + 1
    heights: dict[Column, int] = {}
    for a in range(seq.s + 1):
        for b in range(b_limit + 1):
            candidates = [g.e2 for g in ideal.generators if g.e0 <= a and g.e1 <= b]
            if not candidates:
                continue
            h = min(candidates)
            if h > 0:
                if b == b_limit:
                    raise NotACurveIdeal(
                        f"column chains do not terminate along row {a}"
                    )
                heights[Column(a, b)] = h
    return HeightFunction(seq, heights)


def zero_stats(h: HeightFunction) -> tuple[int, int]:
    """Total count of sporadic zeros and the sum of their degrees."""
    gamma = 0
    total = 0
    for (a, b), height in h.heights.items():
        gamma += height
        base = a + b
        total += height * base + height * (height - 1) // 2
    return gamma, total


def minimal_generators(h: HeightFunction) -> list[tuple[Monomial, int]]:
    """Minimal generating set of the ideal a height function describes.

    Each positive column contributes x0^a * x1^b * x2^H(a,b); each staircase
    row contributes its first x2-free monomial past the positive prefix; the
    pure power x0^s closes the staircase.  A divisibility sweep keeps the
    result minimal even for inputs that are not Borel-consistent.
    """
    seq = h.seq
    candidates = [Monomial(a, b, height) for (a, b), height in h.heights.items()]
    for a in range(seq.s):
        b = seq.lambdas[a]
        while h.get(Column(a, b)) > 0:
            b += 1
        candidates.append(Monomial(a, b, 0))
    candidates.append(Monomial(seq.s, 0, 0))
    gens = _minimalize(candidates)
    return [(g, g.degree) for g in gens]


def materialize(h: HeightFunction) -> MonomialIdeal:
    """The monomial ideal with exactly the given heights."""
    return MonomialIdeal(tuple(g for g, _ in minimal_generators(h)))


def hilbert_count(ideal: MonomialIdeal, t: int) -> int:
    """Number of degree-t monomials in three variables outside the ideal."""
    if t < 0:
        raise ValueError("degree must be nonnegative")
    count = 0
    for e0 in range(t + 1):
        for e1 in range(t - e0 + 1):
            m = Monomial(e0, e1, t - e0 - e1)
            if not ideal.contains(m):
                count += 1
    return count
