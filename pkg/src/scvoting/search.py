"""Exact span-wide representation search and the set-cover encoding.

Deciding whether any feasible committee satisfies the span-wide axiom is
NP-complete, so :func:`sw_jr_exists` is an exact exponential backtracking
search: it walks candidate ids in increasing order, growing a committee one
member at a time, and prunes a branch once some voter group is provably
unrepresentable in every completion.  Every accepted leaf is re-verified
with ``check_sw_jr``, so pruning bugs could only cost time, never answers.
The first accepted leaf in this order is the lexicographically least
satisfying committee, which is what the search returns.

:func:`encode_set_cover` embeds a set-cover question into this decision
problem: voters are the ground elements, one single-voter candidate per
voter fills a first subset whose quota forces all of them in, and the
covering collection becomes the second subset with the cover budget as its
quota.  The encoded instance admits a span-wide representative committee iff
the cover exists, and :func:`decode_committee_to_cover` extracts the cover.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .core import (
    Committee,
    ScvInstance,
    SetCoverInstance,
    count_feasible_committees,
    validate_set_cover,
)
from .errors import BudgetExceeded, NotACover
from .axioms import check_sw_jr

DEFAULT_SEARCH_BUDGET = 10_000_000


def sw_jr_exists(
    inst: ScvInstance, budget: int = DEFAULT_SEARCH_BUDGET
) -> Optional[Committee]:
    """Lexicographically least committee passing ``check_sw_jr``, or None.

    Raises :class:`BudgetExceeded` when the feasible-committee count is
    beyond ``budget``.
    """
    total = count_feasible_committees(inst)
    if total > budget:
        raise BudgetExceeded(total, budget)

    n = inst.num_voters
    m = inst.num_candidates
    k = inst.committee_size
    ballots = inst.ballots
    subset_of = inst.subset_index
    quotas = list(inst.quotas)

    # avail[j][p] = members of subset j with id >= p, for the quota-room prune
    avail = [[0] * (m + 1) for _ in inst.subsets]
    for p in range(m - 1, -1, -1):
        for j in range(len(quotas)):
            avail[j][p] = avail[j][p + 1] + (1 if subset_of[p] == j else 0)

    hits = [0] * n  # approved chosen members per voter

    def doomed(pos: int, need: list[int]) -> bool:
        """Some cohesive group can no longer be represented by any completion."""
        eligible = frozenset(c for c in range(pos, m) if need[subset_of[c]] > 0)
        dead_ballots = [
            ballots[i]
            for i in range(n)
            if hits[i] == 0 and not ballots[i] & eligible
        ]
        if len(dead_ballots) * k < n:
            return False
        support = Counter()
        for ballot in dead_ballots:
            support.update(ballot)
        return any(count * k >= n for count in support.values())

    def descend(pos: int, chosen: list[int], need: list[int]) -> Optional[Committee]:
        if not any(need):
            committee = Committee(frozenset(chosen))
            if check_sw_jr(inst, committee).satisfied:
                return committee
            return None
        if any(need[j] > avail[j][pos] for j in range(len(need))):
            return None
        if doomed(pos, need):
            return None
        for c in range(pos, m):
            j = subset_of[c]
            if need[j] == 0:
                continue
            need[j] -= 1
            chosen.append(c)
            for i in range(n):
                if c in ballots[i]:
                    hits[i] += 1
            found = descend(c + 1, chosen, need)
            for i in range(n):
                if c in ballots[i]:
                    hits[i] -= 1
            chosen.pop()
            need[j] += 1
            if found is not None:
                return found
        return None

    return descend(0, [], quotas)


def encode_set_cover(sc: SetCoverInstance) -> ScvInstance:
    """Voting instance whose span-wide representative committees are exactly
    the covers of the given set-cover question.

    Voter i approves the collection candidates ``s{j+1}`` of the entries
    containing i; the per-voter candidates ``a{i+1}`` fill the first subset
    completely.  Every voter has a non-empty ballot and n/k < 1, so a
    committee is span-wide representative iff every voter is represented,
    which only the second subset can decide.
    """
    validate_set_cover(sc)
    n = sc.ground_size
    t = len(sc.collection)
    voter_candidates = [f"a{i + 1}" for i in range(n)]
    entry_candidates = [f"s{j + 1}" for j in range(t)]
    ballots = [
        [entry_candidates[j] for j, entry in enumerate(sc.collection) if i in entry]
        for i in range(n)
    ]
    return ScvInstance.from_names(
        num_voters=n,
        subsets=[
            ("C1", voter_candidates, n),
            ("C2", entry_candidates, sc.budget),
        ],
        ballots=ballots,
    )


def decode_committee_to_cover(sc: SetCoverInstance, committee) -> frozenset[int]:
    """Collection indices selected by a committee of the encoded instance.

    The committee must satisfy the span-wide axiom there, in which case the
    returned indices (0-based into ``sc.collection``) cover the ground set
    within budget; otherwise :class:`NotACover` is raised.
    """
    inst = encode_set_cover(sc)
    members = Committee.of(inst, committee).members
    n = sc.ground_size
    chosen = frozenset(c - n for c in members if c >= n)
    covered = frozenset().union(*(sc.collection[j] for j in chosen)) if chosen else frozenset()
    if len(chosen) > sc.budget or covered != frozenset(range(n)):
        raise NotACover(
            f"selected entries {sorted(chosen)} cover {sorted(covered)}, "
            f"not the full ground set of size {n}"
        )
    return chosen
