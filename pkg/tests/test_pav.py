"""Exact harmonic scores, marginal contributions, and maximization."""

import random
from fractions import Fraction
from itertools import combinations
from math import lcm

import pytest

import scvoting as sv
from scvoting import fixtures
from conftest import random_committee, random_instance


def lexmin_argmax(inst, score_of):
    best = None
    for w in sv.iter_feasible_committees(inst):
        key = (-score_of(inst, w), w.sorted_members)
        if best is None or key < best[0]:
            best = (key, w)
    return best[1], score_of(inst, best[1])


def test_harmonic_values():
    assert sv.harmonic(0) == 0
    assert sv.harmonic(1) == 1
    assert sv.harmonic(2) == Fraction(3, 2)
    assert sv.harmonic(3) == Fraction(11, 6)
    assert sv.harmonic(5) == Fraction(137, 60)
    with pytest.raises(ValueError):
        sv.harmonic(-1)


def test_single_voter_span_vs_per_subset_contribution():
    inst = sv.ScvInstance.from_names(
        1,
        [("C1", ["a", "b"], 2), ("C2", ["d"], 1), ("C3", ["c", "e"], 1)],
        [["a", "b", "c"]],
    )
    w = inst.committee([inst.candidate_id(x) for x in ("a", "b", "d", "c")])
    assert sv.sw_pav_score(inst, w) == Fraction(11, 6)
    assert sv.iw_pav_score(inst, w) == Fraction(5, 2)


def test_rivalry_fixture_scores():
    inst = fixtures.pav_vs_swjr_instance()
    ids = lambda *names: [inst.candidate_id(x) for x in names]
    w_star = inst.committee(ids("a", "c1", "b1"))
    assert sv.sw_pav_score(inst, w_star) == 8
    assert sv.iw_pav_score(inst, w_star) == 8
    assert sv.sw_pav_score(inst, inst.committee(ids("a", "b1", "b2"))) == 7
    for i, j in combinations(range(1, 6), 2):
        for w in (ids("a", f"b{i}", f"b{j}"), ids("b", f"a{i}", f"a{j}")):
            committee = inst.committee(w)
            assert sv.sw_pav_score(inst, committee) == 7
            assert sv.iw_pav_score(inst, committee) == 7
            assert sv.check_sw_jr(inst, committee).satisfied


def test_single_subset_variants_coincide():
    rng = random.Random(21)
    for _ in range(40):
        inst = random_instance(rng, max_subsets=1)
        w = random_committee(rng, inst)
        assert sv.sw_pav_score(inst, w) == sv.iw_pav_score(inst, w)
    inst = sv.generate_instance(sv.UniformModel(6, (6,), (3,), 0.5), seed=3)
    assert sv.maximize(inst, sv.SW_PAV) == sv.maximize(inst, sv.IW_PAV)


# -- marginal contributions ------------------------------------------------------------


def test_unapproved_member_contributes_nothing():
    inst = sv.ScvInstance.from_names(
        2, [("C", ["x", "y"], 1)], [["x"], ["x"]]
    )
    assert sv.marginal_contribution(inst, inst.committee([1]), 1) == 0


def test_sole_approval_contributes_one_per_supporter():
    inst = sv.ScvInstance.from_names(
        4, [("C", ["x", "y"], 1)], [["x"], ["x"], ["x"], ["y"]]
    )
    assert sv.marginal_contribution(inst, inst.committee([0]), 0) == 3


def test_non_member_rejected():
    inst = fixtures.no_swjr_instance()
    with pytest.raises(sv.NotMember):
        sv.marginal_contribution(inst, inst.committee([0, 2]), 1)


def test_contribution_is_the_exact_score_difference():
    rng = random.Random(22)
    for _ in range(40):
        inst = random_instance(rng, max_voters=8, max_candidates=8)
        w = random_committee(rng, inst)
        for c in w.members:
            mc = sv.marginal_contribution(inst, w, c)
            assert mc >= 0
            direct = sv.sw_pav_score(inst, w) - sum(
                (sv.harmonic(len((w.members - {c}) & b)) for b in inst.ballots),
                Fraction(0),
            )
            assert mc == direct


def test_some_member_contributes_at_most_the_represented_share():
    rng = random.Random(23)
    for _ in range(200):
        inst = random_instance(rng, max_voters=8, max_candidates=8)
        w = random_committee(rng, inst)
        represented = sum(1 for b in inst.ballots if b & w.members)
        least = min(sv.marginal_contribution(inst, w, c) for c in w.members)
        assert least * inst.committee_size <= represented


# -- maximization ------------------------------------------------------------------------


def test_rivalry_fixture_optima_miss_span_wide_representation():
    inst = fixtures.pav_vs_swjr_instance()
    w, score = sv.maximize(inst, sv.SW_PAV)
    assert score == 8
    assert inst.names_of(w.members) == ("a", "b1", "c1")
    assert not sv.check_sw_jr(inst, w).satisfied

    w, score = sv.maximize(inst, sv.IW_PAV)
    assert score == 8
    assert inst.names_of(w.members) == ("a", "a1", "c1")
    assert not sv.check_sw_jr(inst, w).satisfied

    assert sv.sw_jr_exists(inst) is not None


def test_diversity_scoring_fixture_actual_behavior():
    # with a two-slot third subset the span-wide optimum keeps a'' and the
    # per-subset axiom holds at the optimum
    inst = fixtures.swpav_vs_iwjr_instance(third_quota=2)
    w, score = sv.maximize(inst, sv.SW_PAV)
    assert score == Fraction(107, 6)
    assert inst.names_of(w.members) == ("a", "a'", "a''", "c''")
    assert sv.check_iw_jr(inst, w).satisfied

    # with a single slot the optimum is {a, a', c''} at 95/6, but then every
    # per-subset threshold is n/1 = 12 and no group can invoke the axiom
    inst = fixtures.swpav_vs_iwjr_instance(third_quota=1)
    w, score = sv.maximize(inst, sv.SW_PAV)
    assert score == Fraction(95, 6)
    assert inst.names_of(w.members) == ("a", "a'", "c''")
    verdict = sv.check_iw_jr(inst, w)
    assert verdict.satisfied
    assert "vacuous" in verdict.note


def test_blocks_fixture_per_subset_optimum_fails_weak():
    inst = fixtures.iwpav_vs_weak_instance()
    w, score = sv.maximize(inst, sv.IW_PAV)
    assert score == 18
    assert inst.names_of(w.members) == ("a", "b", "a'", "b'")
    verdict = sv.check_weak_sw_jr(inst, w)
    assert not verdict.satisfied
    assert verdict.witness.voters == frozenset({9, 10, 11})


def test_maximize_matches_exhaustive_enumeration():
    rng = random.Random(24)
    for _ in range(40):
        inst = random_instance(rng, max_voters=8, max_candidates=8)
        for variant, score_of in (
            (sv.SW_PAV, sv.sw_pav_score),
            (sv.IW_PAV, sv.iw_pav_score),
        ):
            got_w, got_score = sv.maximize(inst, variant)
            want_w, want_score = lexmin_argmax(inst, score_of)
            assert got_score == want_score
            assert got_w.members == want_w.members, (variant, sorted(got_w.members))


def test_optima_keep_their_axiom_guarantees():
    rng = random.Random(25)
    for _ in range(100):
        inst = random_instance(rng, max_voters=10, max_candidates=10)
        w, _ = sv.maximize(inst, sv.SW_PAV)
        assert sv.check_weak_sw_jr(inst, w).satisfied
        w, _ = sv.maximize(inst, sv.IW_PAV)
        assert sv.check_iw_jr(inst, w).satisfied


def test_score_denominators_stay_harmonic():
    rng = random.Random(26)
    for _ in range(40):
        inst = random_instance(rng, max_voters=8, max_candidates=8)
        w = random_committee(rng, inst)
        bound = lcm(*range(1, inst.committee_size + 1))
        assert bound % sv.sw_pav_score(inst, w).denominator == 0
        assert bound % sv.iw_pav_score(inst, w).denominator == 0


def test_budget_guard_reports_the_count():
    inst = fixtures.pav_vs_swjr_instance()  # 3 * C(11, 2) = 165 committees
    with pytest.raises(sv.BudgetExceeded) as excinfo:
        sv.maximize(inst, sv.SW_PAV, budget=100)
    assert excinfo.value.count == 165
    # the per-subset split enumerates 3 + 55 candidates sets instead
    sv.maximize(inst, sv.IW_PAV, budget=100)
    with pytest.raises(sv.BudgetExceeded) as excinfo:
        sv.maximize(inst, sv.IW_PAV, budget=10)
    assert excinfo.value.count == 58


def test_unknown_variant_rejected():
    with pytest.raises(ValueError):
        sv.maximize(fixtures.no_swjr_instance(), "max-av")
