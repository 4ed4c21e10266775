"""Small hand-built instances that separate the axioms and the rules.

Each builder returns a validated instance exhibiting one sharp phenomenon:
non-existence of span-wide representative committees, independence of the
weak span-wide and per-subset axioms, or a harmonic-score optimum that
misses a representation axiom.  They double as regression anchors for the
acceptance suite and as the worked examples in ``demos/``.
"""

from __future__ import annotations

from .core import ScvInstance


def no_swjr_instance() -> ScvInstance:
    """Two voters, two single-slot subsets, no span-wide representative outcome.

    Each voter insists on a different candidate of the first subset, and with
    n/k = 1 both singleton groups are cohesive enough to demand
    representation; one slot cannot serve both, so every feasible committee
    fails ``check_sw_jr``.
    """
    return ScvInstance.from_names(
        num_voters=2,
        subsets=[
            ("C1", ["a1", "a2"], 1),
            ("C2", ["b1", "b2"], 1),
        ],
        ballots=[["a1"], ["a2"]],
    )


def axiom_split_instance() -> ScvInstance:
    """Twelve voters whose committees separate the weak span-wide and
    per-subset axioms.

    With quotas (1, 2), the committee {c1, b, c} satisfies weak-sw-jr but not
    iw-jr, {c1, a, c} the reverse, and {c7, a, c} both: the six a-supporters
    are the only group large enough to demand in-subset representation in
    C2, while voters 6..9 (sharing c7 and b) are the only group cohesive in
    every subset.
    """
    ballots = (
        [[f"c{i}", "a"] for i in range(1, 7)]
        + [["c7", "b"]] * 4
        + [["c8", "c"]] * 2
    )
    return ScvInstance.from_names(
        num_voters=12,
        subsets=[
            ("C1", [f"c{i}" for i in range(1, 9)], 1),
            ("C2", ["a", "b", "c"], 2),
        ],
        ballots=ballots,
    )


def pav_vs_swjr_instance() -> ScvInstance:
    """Both harmonic optima score 8 and miss span-wide representation.

    Span-wide representative committees exist, all of the shape
    {a, b_i, b_j} or {b, a_i, a_j}, and each scores exactly 7 under both
    variants; the optima trade the b-voters' group away for the two-voter
    c-block and score 8.
    """
    ballots = (
        [["a", f"a{i}"] for i in range(1, 6)]
        + [["b", f"b{i}"] for i in range(1, 6)]
        + [["c", "c1"]] * 2
    )
    return ScvInstance.from_names(
        num_voters=12,
        subsets=[
            ("C1", ["a", "b", "c"], 1),
            ("C2", [f"a{i}" for i in range(1, 6)] + [f"b{i}" for i in range(1, 6)] + ["c1"], 2),
        ],
        ballots=ballots,
    )


def swpav_vs_iwjr_instance(third_quota: int = 2) -> ScvInstance:
    """Tension between the span-wide score and per-subset representation.

    Nine voters share {a, a'} and split over the third subset; three voters
    share {b, b'}.  With ``third_quota=2`` the six-voter block demands a''
    inside the third subset (12/2 = 6).  The third quota is a parameter
    because the two natural readings of this example lead to different
    conclusions; the tests record the computed behavior of both.
    """
    ballots = (
        [["a", "a'", "a''"]] * 6
        + [["a", "a'", "b''"]] * 2
        + [["a", "a'", "c''"]]
        + [["b", "b'", "b''"]]
        + [["b", "b'", "c''"]] * 2
    )
    return ScvInstance.from_names(
        num_voters=12,
        subsets=[
            ("C1", ["a", "b"], 1),
            ("C2", ["a'", "b'"], 1),
            ("C3", ["a''", "b''", "c''"], third_quota),
        ],
        ballots=ballots,
    )


def iwpav_vs_weak_instance() -> ScvInstance:
    """The per-subset optimum leaves a large cohesive group unrepresented.

    Three party-like blocks of sizes 5, 4, 3, each approving one candidate
    per subset.  With quotas (2, 2) the per-subset harmonic optimum is
    {a, b, a', b'} with score 18, but the three c-voters reach the n/k = 3
    threshold and share a candidate in every subset, so weak-sw-jr fails.
    """
    ballots = [["a", "a'"]] * 5 + [["b", "b'"]] * 4 + [["c", "c'"]] * 3
    return ScvInstance.from_names(
        num_voters=12,
        subsets=[
            ("C1", ["a", "b", "c"], 2),
            ("C2", ["a'", "b'", "c'"], 2),
        ],
        ballots=ballots,
    )
