"""Admissibility rules for staircase lifts and exact penalty maximization.

A schedule is a height function over the staircase columns.  The default
rule set admits a schedule when

  R1  the heights respect the Borel moves,
  R2  the sporadic-zero count stays within the budget,
  R3  every generator of degree r with 2r > d is backed by a generator of
      degree r - 1 or by at least six generators of degree >= r,
  R4  a zero height at the last staircase corner forces the whole complete
      intersection sub-staircase to height zero,
  R5  data-driven exclusions hold (by default: the degree-46 corner must
      lift with a positive x2 power, else the curve is linked to a plane
      quartic and cannot carry sporadic zeros at this degree).

maximize_penalty finds the exact maximum of 12*A - 22*gamma over admissible
schedules by branch and bound over per-row height profiles.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, NamedTuple

from ginsurvey import budget as budget_mod
from ginsurvey import lift
from ginsurvey.inequality import required_penalty
from ginsurvey.staircase import Column, InvariantSequence, staircase_contains

INF = 10**9


class Infeasible(RuntimeError):
    """No height function satisfies the rule set."""


class InsufficientBudget(ValueError):
    """The budget cannot pay for even the smallest scheduled chain."""


@dataclass(frozen=True)
class Exclusion:
    """Forbid a zero height at one column of one named configuration."""

    d: int
    lambdas: tuple[int, ...]
    column: Column

    def applies_to(self, seq: InvariantSequence) -> bool:
        return seq.d == self.d and seq.lambdas == self.lambdas


# Degree 46, invariants 13,11,9,7,6: if the last corner x0^4*x1^6 lifted with
# no x2 power the curve would be linked to a plane quartic, hence carry no
# sporadic zeros at all, which its degree forbids.
DEFAULT_EXCLUSIONS = (Exclusion(46, (13, 11, 9, 7, 6), Column(4, 6)),)


@dataclass(frozen=True)
class RuleSet:
    borel: bool = True
    budget_z: int | None = None  # None resolves through the budget formulas
    degree_criteria: bool = True
    ci_forcing: bool = True
    special_exclusions: tuple[Exclusion, ...] = DEFAULT_EXCLUSIONS
    half_degree_strict: bool = True  # criteria trigger iff 2r > d (else 2r >= d)

    @classmethod
    def named(cls, name: str) -> "RuleSet":
        presets = {
            "default": cls(),
            "no-borel": cls(borel=False),
            "no-criteria": cls(degree_criteria=False),
            "no-ci": cls(ci_forcing=False),
            "no-exclusions": cls(special_exclusions=()),
        }
        if name not in presets:
            raise ValueError(f"unknown rule preset {name!r} (choose from {sorted(presets)})")
        return presets[name]

    def identifier(self) -> str:
        flags = []
        if not self.borel:
            flags.append("no-borel")
        if not self.degree_criteria:
            flags.append("no-criteria")
        if not self.ci_forcing:
            flags.append("no-ci")
        if not self.special_exclusions:
            flags.append("no-exclusions")
        if not self.half_degree_strict:
            flags.append("half-inclusive")
        if self.budget_z is not None:
            flags.append(f"z={self.budget_z}")
        return "default" if not flags else "+".join(flags)


DEFAULT_RULES = RuleSet()


class AdmissibilityResult(NamedTuple):
    ok: bool
    violated: str | None = None
    detail: str | None = None


def resolve_budget(seq: InvariantSequence, rules: RuleSet, variant: str | None = None) -> int:
    if rules.budget_z is not None:
        return rules.budget_z
    return budget_mod.max_sporadic(seq, variant).z


def _min_high_degree(seq: InvariantSequence, rules: RuleSet) -> int:
    # smallest generator degree that triggers the support criteria
    return seq.d // 2 + 1 if rules.half_degree_strict else (seq.d + 1) // 2


def _criteria_ok(degrees: Iterable[int], min_high: int) -> tuple[bool, int | None]:
    degs = sorted(degrees)
    degset = set(degs)
    for r in sorted(degset):
        if r < min_high:
            continue
        if r - 1 in degset:
            continue
        if sum(1 for x in degs if x >= r) >= 6:
            continue
        return False, r
    return True, None


def _ci_bound(seq: InvariantSequence, a: int) -> int:
    # column threshold of the complete-intersection sub-staircase in row a
    return seq.lambdas[-1] + 2 * (seq.s - 1 - a)


def is_admissible(
    seq: InvariantSequence,
    h: lift.HeightFunction,
    rules: RuleSet = DEFAULT_RULES,
    z: int | None = None,
    variant: str | None = None,
) -> AdmissibilityResult:
    """Check the rules in order R1..R5 and report the first violation."""
    if h.seq != seq:
        raise ValueError("height function is attached to a different sequence")
    heights = h.heights

    if rules.borel:
        for (a, b), hv in sorted(heights.items()):
            if a >= 1 and staircase_contains(seq, Column(a - 1, b + 1)):
                if hv > h.get(Column(a - 1, b + 1)):
                    return AdmissibilityResult(False, "R1", f"H({a},{b}) > H({a-1},{b+1})")
            if a >= 1 and staircase_contains(seq, Column(a - 1, b)):
                if hv > max(h.get(Column(a - 1, b)) - 1, 0):
                    return AdmissibilityResult(False, "R1", f"H({a},{b}) vs H({a-1},{b})")
            if b >= 1 and staircase_contains(seq, Column(a, b - 1)):
                if hv > max(h.get(Column(a, b - 1)) - 1, 0):
                    return AdmissibilityResult(False, "R1", f"H({a},{b}) vs H({a},{b-1})")

    z = z if z is not None else resolve_budget(seq, rules, variant)
    if h.gamma > z:
        return AdmissibilityResult(False, "R2", f"gamma={h.gamma} > z={z}")

    if rules.degree_criteria:
        degrees = [deg for _, deg in lift.minimal_generators(h)]
        ok, bad = _criteria_ok(degrees, _min_high_degree(seq, rules))
        if not ok:
            return AdmissibilityResult(
                False, "R3", f"generator degree {bad} lacks degree {bad-1} and a crowd of 6"
            )

    if rules.ci_forcing and h.get(Column(seq.s - 1, seq.lambdas[-1])) == 0:
        for (a, b), hv in sorted(heights.items()):
            if b >= _ci_bound(seq, a):
                return AdmissibilityResult(
                    False, "R4", f"corner lifts x2-free but H({a},{b}) = {hv} > 0"
                )

    for exc in rules.special_exclusions:
        if exc.applies_to(seq) and h.get(exc.column) == 0:
            return AdmissibilityResult(
                False, "R5", f"H({exc.column.a},{exc.column.b}) = 0 is excluded"
            )
    return AdmissibilityResult(True)


class ScheduleStats(NamedTuple):
    gamma: int
    A: int
    generator_degrees: tuple[int, ...]


def evaluate_schedule(seq: InvariantSequence, h: lift.HeightFunction) -> ScheduleStats:
    """Zero statistics and generator degrees of a schedule, no admissibility."""
    if h.seq != seq:
        raise ValueError("height function is attached to a different sequence")
    gamma, total = lift.zero_stats(h)
    degrees = tuple(sorted(deg for _, deg in lift.minimal_generators(h)))
    return ScheduleStats(gamma, total, degrees)


def _chain_value(base: int, h: int) -> int:
    # sum of (12t - 22) over the chain's zero degrees base .. base + h - 1
    return h * (12 * base - 22) + 6 * h * (h - 1)


@lru_cache(maxsize=None)
def _tail_ub(tcap: int, basedeg: int, hcap: int, budget: int) -> int:
    """Best value of a strictly decreasing chain tail, ignoring cross-row caps."""
    hmax = min(hcap, budget, tcap - basedeg + 1)
    if hmax <= 0:
        return 0
    best = 0
    for height in range(hmax, 0, -1):
        value = _chain_value(basedeg, height) + _tail_ub(
            tcap, basedeg + 1, height - 1, budget - height
        )
        if value > best:
            best = value
    return best


def _zero_degree_cap(seq: InvariantSequence, z: int, rules: RuleSet) -> int:
    """Sound upper bound on the degree of any admissible sporadic zero."""
    maxbase = max(a + lam for a, lam in enumerate(seq.lambdas))
    if not rules.degree_criteria:
        return maxbase + z - 1
    min_high = _min_high_degree(seq, rules)
    free_top = min_high - 2  # tops below the first criteria-triggering degree

    def ladder_reach(start: int, budget: int) -> int:
        top = start - 1
        g = start
        while budget >= max(1, g - maxbase):
            budget -= max(1, g - maxbase)
            top = g - 1
            g += 1
        return top

    best = max(free_top, ladder_reach(min_high, z))
    # a crowd of six equal-degree generators waives the ladder at its level
    crowd = min_high
    while 6 * max(1, crowd - maxbase) <= z:
        rem = z - 6 * max(1, crowd - maxbase)
        best = max(best, crowd - 1, ladder_reach(crowd + 1, rem))
        crowd += 1
    return max(best, maxbase)


@dataclass(frozen=True)
class OptimizationResult:
    best_objective: int
    best_A: int
    best_gamma: int
    witness: lift.HeightFunction
    eliminated: bool
    nodes_explored: int
    z: int
    required: int


class _Case(NamedTuple):
    forced_rows: tuple[int, ...]  # per row: columns >= this bound are forced to 0
    min_one: tuple[tuple[Column, int], ...]


class _Search:
    """Depth-first branch and bound over per-row height profiles.

    Rows are processed top down (row 0 first); within a row, columns left to
    right with candidate heights descending, a stop branch last.  The Borel
    moves appear as per-column caps derived from the previous row, strict
    decrease along the row, and nothing else; budget and zero-degree caps
    bound the space, and the degree criteria are checked exactly at leaves
    with a rung-completion prune at row boundaries.

    The pruning bound splits every schedule into a part clipped at the last
    criteria-free top and a paid ladder surplus above it; both parts are
    maximized independently (rows uncoupled, ladder hosts unassigned), which
    overestimates, never underestimates.
    """

    def __init__(self, seq: InvariantSequence, z: int, rules: RuleSet, case: _Case):
        self.seq = seq
        self.z = z
        self.rules = rules
        self.case = case
        self.s = seq.s
        self.lams = seq.lambdas
        self.bases = [a + lam for a, lam in enumerate(seq.lambdas)]
        self.min_high = _min_high_degree(seq, rules)
        self.tcap = _zero_degree_cap(seq, z, rules)
        self.free_top = (self.min_high - 2) if rules.degree_criteria else self.tcap
        self.min_one_by_row: dict[int, list[int]] = {}
        for col, _ in case.min_one:
            self.min_one_by_row.setdefault(col.a, []).append(col.b)
        self.nodes = 0
        self.best_value = -(10**18)
        self.best_profiles: list[list[int]] | None = None
        self._surplus = self._surplus_table()
        self._suffix_s, self._pair_s = self._suffix_tables()

    # ---- bound tables ---------------------------------------------------

    def _surplus_table(self) -> list[int]:
        """Best value of zeros above free_top for a given budget of them.

        Chains topping above free_top carry generators that the criteria
        force into consecutive rungs from min_high upward, or crowds of six.
        The DP scans rung degrees upward; host columns are left unassigned,
        so the result dominates every admissible high structure.
        """
        z = self.z
        surplus = [0] * (z + 1)
        if not self.rules.degree_criteria:
            # no criteria: a single chain may climb freely above free_top
            return [0] * (z + 1)
        # dp[alive][spent] = best value, alive = previous rung occupied
        neg = -(10**18)
        dp = [[neg] * (z + 1), [neg] * (z + 1)]
        dp[0][0] = 0
        for g in range(self.min_high, self.tcap + 2):
            cost = g - 1 - self.free_top
            if cost < 1:
                continue
            gain = _chain_value(self.free_top + 1, cost)
            new = [row[:] for row in dp]
            for alive in (0, 1):
                for spent in range(z + 1):
                    base_val = dp[alive][spent]
                    if base_val == neg:
                        continue
                    kmax = (z - spent) // cost
                    for k in range(1, kmax + 1):
                        if alive == 0 and g != self.min_high and k < 6:
                            continue
                        cand = base_val + k * gain
                        tgt = spent + k * cost
                        if cand > new[1][tgt]:
                            new[1][tgt] = cand
            dp = new
        best = 0
        for spent in range(z + 1):
            best = max(best, dp[0][spent], dp[1][spent])
            surplus[spent] = best
        return surplus

    def _suffix_tables(self) -> tuple[list[list[int]], list[list[int]]]:
        z = self.z
        suffix_free = [[0] * (z + 1) for _ in range(self.s + 1)]
        for a in range(self.s - 1, -1, -1):
            row = [
                _tail_ub(self.free_top, self.bases[a], INF, r) for r in range(z + 1)
            ]
            for r in range(z + 1):
                best = 0
                for r1 in range(r + 1):
                    v = row[r1] + suffix_free[a + 1][r - r1]
                    if v > best:
                        best = v
                suffix_free[a][r] = best

        def combine(free_row: list[int]) -> list[int]:
            out = [0] * (z + 1)
            for r in range(z + 1):
                best = 0
                for r1 in range(r + 1):
                    v = free_row[r1] + self._surplus[r - r1]
                    if v > best:
                        best = v
                out[r] = best
            return out

        suffix_s = [combine(suffix_free[a]) for a in range(self.s + 1)]
        pair_s = [combine(suffix_free[a + 1]) for a in range(self.s)]
        return suffix_s, pair_s

    def run(self) -> tuple[int, list[list[int]], int] | None:
        self._dfs_row(0, self.z, [], [], 0, [])
        if self.best_profiles is None:
            return None
        return self.best_value, self.best_profiles, self.nodes

    # ---- row handling -------------------------------------------------

    def _caps_for_row(self, a: int, prev_profile: list[int]) -> list[int]:
        lam = self.lams[a]
        forced_from = self.case.forced_rows[a] if self.case.forced_rows else INF
        length = min(self.z, self.tcap - self.bases[a] + 1) + 1
        if length < 1:
            length = 1
        caps = [INF] * length
        if a > 0:
            lam_prev = self.lams[a - 1]
            prev_len = len(prev_profile)

            def prev_h(col: int) -> int:
                k = col - lam_prev
                return prev_profile[k] if 0 <= k < prev_len else 0

            for j in range(length):
                b = lam + j
                c = INF
                if b >= lam_prev:
                    c = max(prev_h(b) - 1, 0)
                if b + 1 >= lam_prev:
                    c = min(c, prev_h(b + 1))
                caps[j] = c
        for j in range(length):
            if lam + j >= forced_from:
                caps[j] = 0
        return caps

    def _dfs_row(
        self,
        a: int,
        budget: int,
        profiles: list[list[int]],
        prev_profile: list[int],
        value: int,
        high_gens: list[int],
    ) -> None:
        if a == self.s:
            self._leaf(profiles, value, budget)
            return
        if value + self._suffix_s[a][budget] <= self.best_value:
            return
        caps = self._caps_for_row(a, prev_profile)
        self._dfs_col(a, 0, INF, budget, profiles, [], value, high_gens, caps)

    def _dfs_col(
        self,
        a: int,
        j: int,
        prev_h: int,
        budget: int,
        profiles: list[list[int]],
        row: list[int],
        value: int,
        high_gens: list[int],
        caps: list[int],
    ) -> None:
        self.nodes += 1
        b = self.lams[a] + j
        basedeg = a + b
        cap_j = caps[j] if j < len(caps) else 0
        hmax = min(prev_h - 1, cap_j, budget, self.tcap - basedeg + 1)
        free_top = self.free_top
        pair = self._pair_s[a]
        for height in range(hmax, 0, -1):
            gained = _chain_value(basedeg, height)
            rest = budget - height
            bound = (
                value
                + gained
                + _tail_ub(free_top, basedeg + 1, height - 1, rest)
                + pair[rest]
            )
            if bound <= self.best_value:
                continue
            gen_new = basedeg + height
            added_high = gen_new >= self.min_high
            if added_high:
                high_gens.append(gen_new)
            self._dfs_col(
                a,
                j + 1,
                height,
                rest,
                profiles,
                row + [height],
                value + gained,
                high_gens,
                caps,
            )
            if added_high:
                high_gens.pop()
        # stop branch: the rest of the row stays at height zero
        needed = self.min_one_by_row.get(a, [])
        if any(col_b >= b for col_b in needed):
            return
        free_gen = a + b  # the row's x2-free generator degree
        added_high = free_gen >= self.min_high
        if added_high:
            high_gens.append(free_gen)
        if self._rungs_completable(a, budget, high_gens):
            profiles.append(row)
            self._dfs_row(a + 1, budget, profiles, row, value, high_gens)
            profiles.pop()
        if added_high:
            high_gens.pop()

    # ---- pruning helpers ----------------------------------------------

    def _rungs_completable(self, a: int, budget: int, high_gens: list[int]) -> bool:
        """Necessary condition that missing ladder rungs stay affordable."""
        if not high_gens:
            return True
        top = max(high_gens)
        present = set(high_gens)
        remaining_bases = self.bases[a + 1 :]
        maxbase = max(remaining_bases) if remaining_bases else None
        worst = 0
        for rung in range(self.min_high, top):
            if rung in present:
                continue
            if maxbase is None:
                return False
            ladder_cost = max(1, rung - maxbase)
            crowd_cost = (6 - sum(1 for g in high_gens if g >= rung)) * ladder_cost
            worst = max(worst, min(ladder_cost, max(crowd_cost, 0)))
        return worst <= budget

    # ---- leaves --------------------------------------------------------

    def _leaf(self, profiles: list[list[int]], value: int, budget: int) -> None:
        if value <= self.best_value:
            return
        if self.rules.degree_criteria:
            degrees = [self.s]
            for a, row in enumerate(profiles):
                lam = self.lams[a]
                for j, height in enumerate(row):
                    degrees.append(a + lam + j + height)
                degrees.append(a + lam + len(row))
            ok, _ = _criteria_ok(degrees, self.min_high)
            if not ok:
                return
        self.best_value = value
        self.best_profiles = [list(row) for row in profiles]


def _profiles_to_heights(seq: InvariantSequence, profiles: list[list[int]]) -> dict[Column, int]:
    heights: dict[Column, int] = {}
    for a, row in enumerate(profiles):
        for j, height in enumerate(row):
            heights[Column(a, seq.lambdas[a] + j)] = height
    return heights


def _cases_for(seq: InvariantSequence, rules: RuleSet) -> list[_Case]:
    min_one = tuple(
        (exc.column, 1)
        for exc in rules.special_exclusions
        if exc.applies_to(seq)
    )
    if not rules.ci_forcing:
        return [_Case((), min_one)]
    head = Column(seq.s - 1, seq.lambdas[-1])
    forced = tuple(_ci_bound(seq, a) for a in range(seq.s))
    cases = []
    corner_pinned = any(col == head for col, _ in min_one)
    forced_conflict = any(col.b >= forced[col.a] for col, _ in min_one if col.a < seq.s)
    if not corner_pinned and not forced_conflict:
        cases.append(_Case(forced, min_one))
    cases.append(_Case((), min_one + ((head, 1),)))
    return cases


def _exhaustive_max(seq: InvariantSequence, z: int, rules: RuleSet, variant: str | None):
    """Plain enumeration fallback used when the Borel rule is disabled.

    Exponential in the budget; intended for small diagnostic instances only.
    """
    cols = [
        Column(a, b)
        for a in range(seq.s)
        for b in range(seq.lambdas[a], seq.lambdas[a] + z + 1)
    ]
    best: tuple[int, dict[Column, int]] | None = None
    nodes = 0

    def rec(idx: int, budget: int, current: dict[Column, int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if idx == len(cols):
            h = lift.HeightFunction(seq, dict(current))
            if not is_admissible(seq, h, rules, z=z, variant=variant).ok:
                return
            gamma, total = lift.zero_stats(h)
            value = 12 * total - 22 * gamma
            if best is None or value > best[0]:
                best = (value, dict(current))
            return
        col = cols[idx]
        for height in range(min(budget, z), -1, -1):
            if height:
                current[col] = height
            rec(idx + 1, budget - height, current)
            current.pop(col, None)

    rec(0, z, {})
    if best is None:
        raise Infeasible(f"no admissible schedule for {seq} with z={z}")
    value, heights = best
    h = lift.HeightFunction(seq, heights)
    gamma, total = lift.zero_stats(h)
    return OptimizationResult(
        value, total, gamma, h, value < required_penalty(seq), nodes, z, required_penalty(seq)
    )


_MAXIMIZE_CACHE: dict[tuple, OptimizationResult] = {}


def maximize_penalty(
    seq: InvariantSequence,
    rules: RuleSet = DEFAULT_RULES,
    variant: str | None = None,
) -> OptimizationResult:
    """Exact maximum of 12*A - 22*gamma over admissible schedules.

    Deterministic: the witness is the first optimum met in the documented
    branch order (complete-intersection case first, then rows top down with
    heights descending).
    """
    z = resolve_budget(seq, rules, variant)
    key = (seq.lambdas, z, rules)
    cached = _MAXIMIZE_CACHE.get(key)
    if cached is not None:
        return cached
    if z < 0:
        raise Infeasible(f"budget z={z} is negative for {seq}")
    if not rules.borel:
        result = _exhaustive_max(seq, z, rules, variant)
        _MAXIMIZE_CACHE[key] = result
        return result

    best_value = -(10**18)
    best_profiles: list[list[int]] | None = None
    nodes = 0
    for case in _cases_for(seq, rules):
        search = _Search(seq, z, rules, case)
        search.best_value = best_value
        outcome = search.run()
        nodes += search.nodes
        if outcome is not None and outcome[0] > best_value:
            best_value, best_profiles = outcome[0], outcome[1]
    if best_profiles is None:
        raise Infeasible(f"no admissible schedule for {seq} with z={z}")
    witness = lift.HeightFunction(seq, _profiles_to_heights(seq, best_profiles))
    gamma, total = lift.zero_stats(witness)
    P = required_penalty(seq)
    result = OptimizationResult(
        best_value, total, gamma, witness, best_value < P, nodes, z, P
    )
    _MAXIMIZE_CACHE[key] = result
    return result


@dataclass(frozen=True)
class HeuristicResult:
    gamma: int
    A: int
    chains: tuple[tuple[int, int, int], ...]  # (base degree, low, high) per chain
    label: str


def heuristic_schedule(seq: InvariantSequence, z: int, branch: str) -> HeuristicResult:
    """The two coarse scheduling recipes, kept as approximate reporting aids.

    six_high: every row head chains up to floor(d/2), the remainder rides one
    chain just above.  staircase: rows take generator degrees floor(d/2)+1,
    floor(d/2)+2, ... largest base first, the last chain truncated from
    below.  Neither output is guaranteed to be a realizable height function;
    elimination never relies on these numbers.
    """
    if seq.s not in (4, 5):
        raise ValueError("heuristic schedules are defined for 4 or 5 invariants")
    half = seq.d // 2
    bases = [a + lam for a, lam in enumerate(seq.lambdas)]
    chains: list[tuple[int, int, int]] = []
    if branch == "six_high":
        needed = sum(half - base + 1 for base in bases)
        if any(base > half for base in bases) or z < needed:
            raise InsufficientBudget(
                f"budget {z} cannot top every row head at {half}"
            )
        for base in sorted(bases, reverse=True):
            chains.append((base, base, half))
        remainder = z - needed
        if remainder > 0:
            chains.append((half + 1, half + 1, half + remainder))
    elif branch == "staircase":
        order = sorted(range(seq.s), key=lambda a: (-bases[a], a))
        budget = z
        gen = half + 1
        first = True
        for a in order:
            height = gen - bases[a]
            if height < 1:
                raise ValueError(
                    f"row head degree {bases[a]} already sits at or above the "
                    f"scheduled generator degree {gen}"
                )
            if budget < height:
                if first:
                    raise InsufficientBudget(
                        f"budget {z} is below the smallest chain ({height})"
                    )
                if budget > 0:
                    chains.append((bases[a], gen - budget, gen - 1))
                    budget = 0
                break
            chains.append((bases[a], bases[a], gen - 1))
            budget -= height
            gen += 1
            first = False
    else:
        raise ValueError(f"unknown heuristic branch {branch!r}")
    gamma = sum(hi - lo + 1 for _, lo, hi in chains)
    total = sum((lo + hi) * (hi - lo + 1) // 2 for _, lo, hi in chains)
    return HeuristicResult(gamma, total, tuple(chains), branch)
