"""Exact harmonic (PAV-style) scoring and optimization over committees.

Two generalizations of proportional approval voting are scored and
maximized, always in exact rational arithmetic:

* ``sw-pav``: a voter with j approved committee members anywhere contributes
  the j-th harmonic number, H(j) = 1 + 1/2 + ... + 1/j.
* ``iw-pav``: the harmonic utility is earned per subset and summed, so a
  voter contributes sum_j H(|committee /\\ ballot /\\ subset j|).

Maximization is exhaustive (these optima are NP-hard in general) over the
feasible committees, guarded by a count budget and sped up by an upper-bound
prune; for ``iw-pav`` the objective splits per subset, so each subset is
optimized independently.  Ties always resolve to the committee whose sorted
member-id tuple is lexicographically least.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .core import Committee, ScvInstance
from .errors import BudgetExceeded, NotMember

SW_PAV = "sw-pav"
IW_PAV = "iw-pav"
VARIANTS = (SW_PAV, IW_PAV)

DEFAULT_MAXIMIZE_BUDGET = 10_000_000


@lru_cache(maxsize=None)
def harmonic(j: int) -> Fraction:
    """The j-th harmonic number as an exact rational; ``harmonic(0) == 0``."""
    if j < 0:
        raise ValueError(f"harmonic undefined for negative {j}")
    if j == 0:
        return Fraction(0)
    return harmonic(j - 1) + Fraction(1, j)


def _score_of_set(inst: ScvInstance, members: frozenset[int]) -> Fraction:
    return sum(
        (harmonic(len(members & ballot)) for ballot in inst.ballots), Fraction(0)
    )


def sw_pav_score(inst: ScvInstance, committee) -> Fraction:
    """Span-wide harmonic score of a feasible committee."""
    return _score_of_set(inst, Committee.of(inst, committee).members)


def iw_pav_score(inst: ScvInstance, committee) -> Fraction:
    """Per-subset harmonic score of a feasible committee."""
    members = Committee.of(inst, committee).members
    total = Fraction(0)
    for sub in inst.subsets:
        won_j = members & frozenset(sub.members)
        for ballot in inst.ballots:
            total += harmonic(len(won_j & ballot))
    return total


def marginal_contribution(inst: ScvInstance, committee, candidate: int) -> Fraction:
    """Span-wide score drop from removing ``candidate`` from the committee.

    Always non-negative; raises :class:`NotMember` if the candidate is not
    elected.
    """
    members = Committee.of(inst, committee).members
    if candidate not in members:
        raise NotMember(
            f"candidate {candidate} is not in the committee {sorted(members)}"
        )
    return _score_of_set(inst, members) - _score_of_set(
        inst, members - {candidate}
    )


def score_to_json(score: Fraction) -> dict:
    """Exact rational as JSON-safe strings."""
    return {"num": str(score.numerator), "den": str(score.denominator)}


def maximize(
    inst: ScvInstance,
    variant: str,
    budget: int = DEFAULT_MAXIMIZE_BUDGET,
) -> tuple[Committee, Fraction]:
    """Exact optimum of the chosen variant over all feasible committees.

    Raises :class:`BudgetExceeded` (reporting the committee count that would
    be enumerated) instead of starting a search larger than ``budget``.
    Among co-optimal committees the lexicographically least sorted member
    tuple is returned.
    """
    if variant == SW_PAV:
        return _maximize_sw(inst, budget)
    if variant == IW_PAV:
        return _maximize_iw(inst, budget)
    raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")


def _maximize_sw(inst: ScvInstance, budget: int) -> tuple[Committee, Fraction]:
    total = 1
    for sub in inst.subsets:
        total *= comb(sub.size, sub.quota)
    if total > budget:
        raise BudgetExceeded(total, budget)

    n = inst.num_voters
    approvers = [[] for _ in range(inst.num_candidates)]
    for i, ballot in enumerate(inst.ballots):
        for c in ballot:
            approvers[c].append(i)
    pools = [sorted(sub.members) for sub in inst.subsets]
    quotas = [sub.quota for sub in inst.subsets]
    slots_after = [sum(quotas[j:]) for j in range(len(quotas) + 1)]

    counts = [0] * n
    best_score: Optional[Fraction] = None
    best_members: Optional[tuple[int, ...]] = None

    def apply(combo: Iterable[int]) -> Fraction:
        gained = Fraction(0)
        for c in combo:
            for i in approvers[c]:
                counts[i] += 1
                gained += Fraction(1, counts[i])
        return gained

    def undo(combo: Iterable[int]):
        for c in combo:
            for i in approvers[c]:
                counts[i] -= 1

    def descend(j: int, chosen: tuple[int, ...], score: Fraction):
        nonlocal best_score, best_members
        if j == len(pools):
            if (
                best_score is None
                or score > best_score
                or (score == best_score and chosen < best_members)
            ):
                best_score, best_members = score, chosen
            return
        for combo in combinations(pools[j], quotas[j]):
            gained = apply(combo)
            partial = score + gained
            # each future slot can add at most 1 per voter
            if best_score is None or partial + n * slots_after[j + 1] >= best_score:
                descend(j + 1, tuple(sorted(chosen + combo)), partial)
            undo(combo)

    descend(0, (), Fraction(0))
    assert best_members is not None
    return Committee(frozenset(best_members)), best_score


def _maximize_iw(inst: ScvInstance, budget: int) -> tuple[Committee, Fraction]:
    # the per-subset scores are independent, so optimize each pool alone
    total = sum(comb(sub.size, sub.quota) for sub in inst.subsets)
    if total > budget:
        raise BudgetExceeded(total, budget)
    members: list[int] = []
    score = Fraction(0)
    for sub in inst.subsets:
        combo, part = _maximize_single_pool(inst, sorted(sub.members), sub.quota)
        members.extend(combo)
        score += part
    return Committee(frozenset(members)), score


def _maximize_single_pool(
    inst: ScvInstance, pool: list[int], quota: int
) -> tuple[tuple[int, ...], Fraction]:
    """Best ``quota``-subset of ``pool`` under the harmonic score restricted
    to this pool; lexicographically least on ties."""
    best_score: Optional[Fraction] = None
    best_combo: Optional[tuple[int, ...]] = None
    for combo in combinations(pool, quota):
        chosen = frozenset(combo)
        score = sum(
            (harmonic(len(chosen & ballot)) for ballot in inst.ballots),
            Fraction(0),
        )
        if best_score is None or score > best_score:
            best_score, best_combo = score, combo
    return best_combo, best_score
