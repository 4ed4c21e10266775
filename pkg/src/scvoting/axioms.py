"""Justified-representation checks for sub-committee approval voting.

Four axioms are verified, each quantifying over "large enough" cohesive
voter groups (size thresholds are compared exactly via cross-multiplication,
never floats):

* ``jr``          - classic single-pool justified representation,
* ``sw-jr``       - span-wide: any group of >= n/k voters sharing a candidate
                    must get someone it approves, anywhere in the committee,
* ``iw-jr``       - per subset: within subset j, groups of >= n/k_j voters
                    sharing a candidate of that subset must be represented
                    inside that subset,
* ``weak-sw-jr``  - span-wide, but only for groups sharing a candidate in
                    *every* subset.

Each checker returns an :class:`AxiomVerdict`; failures carry a concrete
:class:`Violation` witness.  :func:`brute_force_axiom` re-decides any of the
four by enumerating all voter groups and is the testing oracle for the fast
checkers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import CandidateSubset, Committee, ScvInstance, validate_instance
from .errors import TooLarge

JR = "jr"
SW_JR = "sw-jr"
IW_JR = "iw-jr"
WEAK_SW_JR = "weak-sw-jr"
ALL_AXIOMS = (JR, SW_JR, IW_JR, WEAK_SW_JR)

VACUOUS_NOTE = "vacuous: no cohesive group reaches the size threshold"

DEFAULT_BRUTE_FORCE_CAP = 16


@dataclass(frozen=True)
class Violation:
    """Witness of an axiom failure.

    ``voters`` is an unrepresented group meeting the axiom's size threshold;
    ``candidates`` the commonly approved evidence (one candidate for ``jr`` /
    ``sw-jr`` / ``iw-jr``, one per subset for ``weak-sw-jr``); ``subset`` the
    offended subset index for ``iw-jr``, else ``None``.
    """

    voters: frozenset[int]
    candidates: tuple[int, ...]
    subset: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "voters", frozenset(self.voters))
        object.__setattr__(self, "candidates", tuple(self.candidates))


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of one axiom check: ``satisfied`` iff ``witness`` is absent."""

    axiom: str
    satisfied: bool
    witness: Optional[Violation] = None
    note: str = ""


def verdict_to_json(inst: ScvInstance, verdict: AxiomVerdict) -> dict:
    """JSON-ready form of a verdict, with candidates and subsets by name."""
    witness = None
    if verdict.witness is not None:
        wit = verdict.witness
        witness = {
            "voters": sorted(wit.voters),
            "candidates": [inst.candidate_name(c) for c in wit.candidates],
            "subset": None if wit.subset is None else inst.subsets[wit.subset].name,
        }
    return {
        "axiom": verdict.axiom,
        "satisfied": verdict.satisfied,
        "witness": witness,
    }


def _members(inst: ScvInstance, committee) -> frozenset[int]:
    return Committee.of(inst, committee).members


def _sw_violation(inst: ScvInstance, won: frozenset[int]) -> Optional[Violation]:
    """Best span-wide witness, or None: maximal support, lowest id on ties."""
    n, k = inst.num_voters, inst.committee_size
    support = [0] * inst.num_candidates
    for ballot in inst.ballots:
        if not ballot & won:
            for c in ballot:
                support[c] += 1
    best = max(range(inst.num_candidates), key=lambda c: (support[c], -c), default=None)
    if best is None or support[best] * k < n:
        return None
    voters = frozenset(
        i
        for i, ballot in enumerate(inst.ballots)
        if best in ballot and not ballot & won
    )
    return Violation(voters, (best,))


def check_sw_jr(inst: ScvInstance, committee) -> AxiomVerdict:
    """Span-wide justified representation.

    Runs the support-count test: the committee fails iff some candidate is
    approved by at least n/k voters none of whom has any approved committee
    member.  O(n*m).
    """
    won = _members(inst, committee)
    witness = _sw_violation(inst, won)
    if witness is not None:
        return AxiomVerdict(SW_JR, False, witness)
    note = "" if _cohesive_group_exists(inst) else VACUOUS_NOTE
    return AxiomVerdict(SW_JR, True, note=note)


def check_iw_jr(inst: ScvInstance, committee) -> AxiomVerdict:
    """Per-subset justified representation.

    Restricts ballots and committee to each subset in turn and runs the
    support-count test at threshold n/k_j.  The witness reports the first
    failing subset (ascending), then the maximal-support candidate.
    """
    won = _members(inst, committee)
    n = inst.num_voters
    for j, sub in enumerate(inst.subsets):
        sub_members = frozenset(sub.members)
        won_j = won & sub_members
        support = {c: 0 for c in sub.members}
        for ballot in inst.ballots:
            if not ballot & won_j:
                for c in ballot & sub_members:
                    support[c] += 1
        best = max(support, key=lambda c: (support[c], -c), default=None)
        if best is not None and support[best] * sub.quota >= n:
            voters = frozenset(
                i
                for i, ballot in enumerate(inst.ballots)
                if best in ballot and not ballot & won_j
            )
            return AxiomVerdict(IW_JR, False, Violation(voters, (best,), subset=j))
    note = "" if _intra_cohesive_group_exists(inst) else VACUOUS_NOTE
    return AxiomVerdict(IW_JR, True, note=note)


def _weak_violating_tuple(
    inst: ScvInstance, unrepresented: Iterable[int]
) -> Optional[tuple[tuple[int, ...], frozenset[int]]]:
    """Lexicographically least candidate tuple commonly approved by a large
    enough group of the given voters, with that group; or None.

    Depth-first over subsets in order, candidates in ascending id, pruning a
    branch as soon as the running supporter intersection drops below n/k.
    Exact, but exponential in the number of subsets in the worst case.
    """
    n, k = inst.num_voters, inst.committee_size
    pool = frozenset(unrepresented)
    if len(pool) * k < n:
        return None
    supporters_by_level: list[list[tuple[int, frozenset[int]]]] = []
    for sub in inst.subsets:
        level = []
        for c in sorted(sub.members):
            supp = frozenset(i for i in pool if c in inst.ballots[i])
            if len(supp) * k >= n:
                level.append((c, supp))
        if not level:
            return None
        supporters_by_level.append(level)

    def descend(depth: int, chosen: tuple[int, ...], group: frozenset[int]):
        if depth == len(supporters_by_level):
            return chosen, group
        for c, supp in supporters_by_level[depth]:
            narrowed = group & supp
            if len(narrowed) * k >= n:
                found = descend(depth + 1, chosen + (c,), narrowed)
                if found is not None:
                    return found
        return None

    return descend(0, (), pool)


def check_weak_sw_jr(inst: ScvInstance, committee) -> AxiomVerdict:
    """Weak span-wide justified representation.

    Fails iff some candidate tuple, one per subset, is commonly approved by
    at least n/k voters with no approved committee member at all.  The
    reported witness is the lexicographically least such tuple together with
    all of its unrepresented common supporters.
    """
    won = _members(inst, committee)
    unrep = [i for i, ballot in enumerate(inst.ballots) if not ballot & won]
    found = _weak_violating_tuple(inst, unrep)
    if found is not None:
        chosen, group = found
        return AxiomVerdict(WEAK_SW_JR, False, Violation(group, chosen))
    vacuous = _weak_violating_tuple(inst, range(inst.num_voters)) is None
    return AxiomVerdict(WEAK_SW_JR, True, note=VACUOUS_NOTE if vacuous else "")


def check_jr(
    ballots: Iterable[Iterable[int]],
    committee: Iterable[int],
    k: int,
    num_candidates: Optional[int] = None,
) -> AxiomVerdict:
    """Classic justified representation for a single candidate pool.

    Convenience wrapper embedding the data as a one-subset instance; ballots
    and the committee use integer candidate ids.
    """
    ballots = [frozenset(b) for b in ballots]
    committee = frozenset(committee)
    if num_candidates is None:
        referenced = frozenset().union(committee, *ballots) if ballots else committee
        num_candidates = max(referenced, default=-1) + 1
    inst = jr_embedding(ballots, k, num_candidates)
    verdict = check_sw_jr(inst, committee)
    return AxiomVerdict(JR, verdict.satisfied, verdict.witness, verdict.note)


def jr_embedding(
    ballots: Iterable[Iterable[int]], k: int, num_candidates: int
) -> ScvInstance:
    """One-subset instance over candidates ``0 .. num_candidates-1``."""
    ballots = tuple(frozenset(b) for b in ballots)
    inst = ScvInstance(
        num_voters=len(ballots),
        candidate_names=tuple(f"c{c}" for c in range(num_candidates)),
        subsets=(CandidateSubset("C", tuple(range(num_candidates)), k),),
        ballots=ballots,
    )
    return validate_instance(inst)


def _cohesive_group_exists(inst: ScvInstance) -> bool:
    """Is there any candidate approved by >= n/k voters?"""
    n, k = inst.num_voters, inst.committee_size
    approvals = [0] * inst.num_candidates
    for ballot in inst.ballots:
        for c in ballot:
            approvals[c] += 1
    return any(a * k >= n for a in approvals)


def _intra_cohesive_group_exists(inst: ScvInstance) -> bool:
    n = inst.num_voters
    approvals = [0] * inst.num_candidates
    for ballot in inst.ballots:
        for c in ballot:
            approvals[c] += 1
    return any(
        approvals[c] * sub.quota >= n for sub in inst.subsets for c in sub.members
    )


def brute_force_axiom(
    inst: ScvInstance,
    committee,
    axiom: str,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
) -> AxiomVerdict:
    """Ground-truth verdict by enumerating every voter group.

    Checks the quantified definition of ``axiom`` over all non-empty subsets
    of voters, independently of the fast checkers.  Raises :class:`TooLarge`
    when the voter count exceeds ``cap``.
    """
    if axiom not in ALL_AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}")
    if inst.num_voters > cap:
        raise TooLarge(
            f"{inst.num_voters} voters exceeds the enumeration cap of {cap}"
        )
    won = _members(inst, committee)
    n, k = inst.num_voters, inst.committee_size
    ballots = inst.ballots
    subset_members = [frozenset(sub.members) for sub in inst.subsets]

    for mask in range(1, 1 << n):
        group = [i for i in range(n) if mask >> i & 1]
        size = len(group)
        common = frozenset.intersection(*(ballots[i] for i in group))
        if axiom in (JR, SW_JR):
            if size * k < n or not common:
                continue
            if any(ballots[i] & won for i in group):
                continue
            return AxiomVerdict(
                axiom, False, Violation(frozenset(group), (min(common),))
            )
        if axiom == WEAK_SW_JR:
            if size * k < n:
                continue
            per_subset = [common & members for members in subset_members]
            if not all(per_subset):
                continue
            if any(ballots[i] & won for i in group):
                continue
            evidence = tuple(min(part) for part in per_subset)
            return AxiomVerdict(axiom, False, Violation(frozenset(group), evidence))
        # iw-jr
        for j, members in enumerate(subset_members):
            if size * inst.subsets[j].quota < n:
                continue
            common_j = common & members
            if not common_j:
                continue
            if any(ballots[i] & won & members for i in group):
                continue
            return AxiomVerdict(
                axiom, False, Violation(frozenset(group), (min(common_j),), subset=j)
            )
    return AxiomVerdict(axiom, True)


def check_axiom(inst: ScvInstance, committee, axiom: str) -> AxiomVerdict:
    """Dispatch to the fast checker for ``axiom``.

    For ``jr`` the whole profile is treated as a single pool with the full
    committee size (the classic definition, ignoring the partition).
    """
    if axiom == SW_JR:
        return check_sw_jr(inst, committee)
    if axiom == IW_JR:
        return check_iw_jr(inst, committee)
    if axiom == WEAK_SW_JR:
        return check_weak_sw_jr(inst, committee)
    if axiom == JR:
        won = _members(inst, committee)
        return check_jr(
            inst.ballots, won, inst.committee_size, inst.num_candidates
        )
    raise ValueError(f"unknown axiom {axiom!r}")
