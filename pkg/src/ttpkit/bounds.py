"""Closed-form travel bounds and exact optima for teams on a line.

The independent lower bound counts the trips each team must make across each
inter-venue bridge regardless of the other teams, giving coefficients
l_k = 2k*ceil((n-k)/3) + 2(n-k)*ceil(k/3).  For n = 6 the bridge-3 coefficient
tightens from 12 to 20, and the optimal total is the tightened baseline plus
the cheapest of seven possible surpluses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .schedule import ROLE_LOWER_BOUND, CrossingVector, LinearInstance

# Baseline bridge coefficients for n = 6 after the bridge-3 tightening.
SIX_TEAM_FLOOR = (14, 16, 20, 16, 14)

# The seven candidate surpluses, as gap-coefficient rows in fixed order
# (set 1 through set 7); surplus i is 2 * dot(row, gaps).
SURPLUS_GAP_COEFFS = (
    (0, 1, 0, 1, 0),  # 2(d2 + d4)
    (1, 0, 0, 1, 0),  # 2(d1 + d4)
    (0, 0, 1, 1, 0),  # 2(d3 + d4)
    (0, 0, 0, 3, 0),  # 6 d4
    (0, 1, 0, 0, 1),  # 2(d2 + d5)
    (0, 1, 1, 0, 0),  # 2(d2 + d3)
    (0, 3, 0, 0, 0),  # 6 d2
)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def trivial_lower_bound(n: int) -> CrossingVector:
    """Independent lower bound on bridge crossings for n teams on a line."""
    if n < 4 or n % 2:
        raise ValueError(f"team count must be even and >= 4, got {n}")
    counts = tuple(
        2 * k * _ceil_div(n - k, 3) + 2 * (n - k) * _ceil_div(k, 3)
        for k in range(1, n)
    )
    return CrossingVector(counts, ROLE_LOWER_BOUND)


def refined_six_team_floor() -> CrossingVector:
    """The n = 6 floor with the bridge-3 coefficient raised to 20."""
    return CrossingVector(SIX_TEAM_FLOOR, ROLE_LOWER_BOUND)


def four_team_optimum(inst: LinearInstance) -> int:
    """Optimal 4-team total: 8(d1 + d2 + d3)."""
    if inst.n != 4:
        raise ValueError(f"need a 4-team instance, got {inst.n} teams")
    return 8 * sum(inst.gaps)


@dataclass(frozen=True)
class SixTeamOptimum:
    """Optimal 6-team line total: baseline plus the cheapest surplus.

    ``chosen_sets`` holds every 1-based surplus index attaining the minimum;
    ties keep all of them.
    """

    value: int
    baseline: int
    chosen_sets: tuple[int, ...]
    surplus_terms: tuple[int, ...]


def six_team_optimum(inst: LinearInstance) -> SixTeamOptimum:
    if inst.n != 6:
        raise ValueError(f"need a 6-team instance, got {inst.n} teams")
    d = inst.gaps
    baseline = sum(c * g for c, g in zip(SIX_TEAM_FLOOR, d))
    surpluses = tuple(
        2 * sum(c * g for c, g in zip(row, d)) for row in SURPLUS_GAP_COEFFS
    )
    best = min(surpluses)
    chosen = tuple(i + 1 for i, s in enumerate(surpluses) if s == best)
    return SixTeamOptimum(baseline + best, baseline, chosen, surpluses)


def approximation_ratio_bound(n: int) -> Fraction:
    """Exact max over bridges of predicted-over-minimum crossings, < 4/3.

    Defined for n = 6m - 2 with m >= 3; the two smaller cases are excluded
    because the closed forms there do not stay under 4/3 bridge by bridge.
    """
    if n % 6 != 4 or n < 16:
        raise ValueError(f"need n = 6m - 2 with m >= 3, got {n}")
    from .expander import predicted_crossings

    predicted = predicted_crossings(n).counts
    floor = trivial_lower_bound(n).counts
    ratio = max(Fraction(f, l) for f, l in zip(predicted, floor))
    assert ratio < Fraction(4, 3), f"ratio bound violated at n={n}: {ratio}"
    return ratio
