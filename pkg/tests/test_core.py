"""Instance validation, JSON round trips, committees, and generators."""

import json
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import scvoting as sv
from scvoting import fixtures
from conftest import random_instance


# -- validation ----------------------------------------------------------------


def test_two_subset_instance_validates():
    inst = fixtures.no_swjr_instance()
    assert inst.num_voters == 2
    assert inst.quotas == (1, 1)
    assert inst.committee_size == 2
    assert inst.ballots[0] == frozenset({0})


def test_quota_exceeding_subset_size_rejected():
    with pytest.raises(sv.QuotaInfeasible):
        sv.ScvInstance.from_names(
            num_voters=1,
            subsets=[("C1", ["x", "y"], 3)],
            ballots=[["x"]],
        )


def test_nonpositive_quota_rejected():
    with pytest.raises(sv.QuotaInfeasible):
        sv.ScvInstance.from_names(
            num_voters=1,
            subsets=[("C1", ["x", "y"], 0)],
            ballots=[[]],
        )


def test_duplicate_candidate_id_breaks_partition():
    inst = sv.ScvInstance(
        num_voters=1,
        candidate_names=("x", "y"),
        subsets=(
            sv.CandidateSubset("C1", (0, 1), 1),
            sv.CandidateSubset("C2", (1,), 1),
        ),
        ballots=(frozenset(),),
    )
    with pytest.raises(sv.PartitionBroken):
        sv.validate_instance(inst)


def test_uncovered_candidate_id_breaks_partition():
    inst = sv.ScvInstance(
        num_voters=1,
        candidate_names=("x", "y"),
        subsets=(sv.CandidateSubset("C1", (0,), 1),),
        ballots=(frozenset(),),
    )
    with pytest.raises(sv.PartitionBroken):
        sv.validate_instance(inst)


def test_unknown_ballot_id_rejected():
    inst = sv.ScvInstance(
        num_voters=1,
        candidate_names=("x",),
        subsets=(sv.CandidateSubset("C1", (0,), 1),),
        ballots=(frozenset({5}),),
    )
    with pytest.raises(sv.BadBallot):
        sv.validate_instance(inst)


def test_every_violation_is_reported_at_once():
    inst = sv.ScvInstance(
        num_voters=1,
        candidate_names=("x", "y"),
        subsets=(
            sv.CandidateSubset("C1", (0,), 2),
            sv.CandidateSubset("C2", (1,), 1),
        ),
        ballots=(frozenset({9}),),
    )
    with pytest.raises(sv.QuotaInfeasible) as excinfo:
        sv.validate_instance(inst)
    text = "\n".join(excinfo.value.problems)
    assert "quota" in text and "ballot 0" in text
    assert len(excinfo.value.problems) == 2


def test_voterless_instance_rejected():
    with pytest.raises(sv.InvalidInstance):
        sv.ScvInstance.from_names(0, [("C1", ["x"], 1)], [])


def test_empty_ballots_are_fine():
    inst = sv.ScvInstance.from_names(
        3, [("C1", ["x", "y"], 1)], [[], [], ["y"]]
    )
    assert inst.ballots[0] == frozenset()


def test_single_subset_is_plain_committee_voting():
    inst = sv.ScvInstance.from_names(
        2, [("C", ["x", "y", "z"], 2)], [["x"], ["z"]]
    )
    assert inst.num_subsets == 1
    assert inst.committee_size == 2


def test_duplicate_candidate_name_rejected():
    with pytest.raises(sv.SemanticError):
        sv.ScvInstance.from_names(
            1,
            [("C1", ["x"], 1), ("C2", ["x"], 1)],
            [[]],
        )


def test_ballot_with_undeclared_name_rejected():
    with pytest.raises(sv.SemanticError):
        sv.ScvInstance.from_names(1, [("C1", ["x"], 1)], [["ghost"]])


def test_validate_accepts_parsed_documents_too():
    doc = {
        "voters": 1,
        "subsets": [{"name": "C1", "candidates": ["x"], "quota": 1}],
        "ballots": [["x"]],
    }
    inst = sv.validate_instance(doc)
    assert inst.num_voters == 1
    assert sv.validate_instance(inst) is inst


# -- committees ------------------------------------------------------------------


def test_committee_count_matches_enumeration():
    inst = fixtures.axiom_split_instance()
    expected = math.comb(8, 1) * math.comb(3, 2)
    assert sv.count_feasible_committees(inst) == expected
    committees = {w.members for w in sv.iter_feasible_committees(inst)}
    assert len(committees) == expected
    for w in committees:
        sv.Committee.of(inst, w)  # all feasible


def test_infeasible_committee_rejected():
    inst = fixtures.no_swjr_instance()
    with pytest.raises(sv.InfeasibleCommittee):
        sv.Committee.of(inst, [0, 1])  # both from the same subset
    with pytest.raises(sv.InfeasibleCommittee):
        sv.Committee.of(inst, [0])
    with pytest.raises(sv.InfeasibleCommittee):
        sv.Committee.of(inst, [0, 99])


# -- JSON round trips --------------------------------------------------------------


def test_fixture_round_trips():
    for build in (
        fixtures.no_swjr_instance,
        fixtures.axiom_split_instance,
        fixtures.pav_vs_swjr_instance,
        fixtures.iwpav_vs_weak_instance,
    ):
        inst = build()
        assert sv.parse_instance(sv.serialize_instance(inst)) == inst


def test_serializer_sorts_ballots_by_name():
    inst = sv.ScvInstance.from_names(
        1, [("C", ["zz", "aa"], 1)], [["zz", "aa"]]
    )
    doc = json.loads(sv.serialize_instance(inst))
    assert doc["ballots"] == [["aa", "zz"]]
    assert doc["subsets"][0]["candidates"] == ["zz", "aa"]  # declaration order


def test_missing_quota_field_is_a_parse_error():
    doc = {
        "voters": 1,
        "subsets": [{"name": "C1", "candidates": ["x"]}],
        "ballots": [[]],
    }
    with pytest.raises(sv.ParseError, match="quota"):
        sv.instance_from_document(doc)


def test_missing_top_level_field_is_a_parse_error():
    with pytest.raises(sv.ParseError, match="ballots"):
        sv.instance_from_document({"voters": 1, "subsets": []})


def test_undeclared_ballot_name_is_a_semantic_error():
    doc = {
        "voters": 1,
        "subsets": [{"name": "C1", "candidates": ["x"], "quota": 1}],
        "ballots": [["ghost"]],
    }
    with pytest.raises(sv.SemanticError, match="ghost"):
        sv.instance_from_document(doc)


def test_validation_problems_surface_as_semantic_error():
    doc = {
        "voters": 1,
        "subsets": [{"name": "C1", "candidates": ["x"], "quota": 2}],
        "ballots": [[]],
    }
    with pytest.raises(sv.SemanticError) as excinfo:
        sv.instance_from_document(doc)
    assert excinfo.value.problems


def test_broken_json_reports_position():
    with pytest.raises(sv.ParseError) as excinfo:
        sv.parse_instance('{"voters": 1,,}')
    assert excinfo.value.line == 1
    assert excinfo.value.column is not None


names = st.text(alphabet="abcxyz'_0123456789", min_size=1, max_size=4)


@st.composite
def instances(draw):
    num_subsets = draw(st.integers(1, 3))
    all_names = draw(
        st.lists(names, min_size=num_subsets, max_size=8, unique=True)
    )
    cuts = sorted(
        draw(
            st.lists(
                st.integers(1, len(all_names) - 1),
                min_size=num_subsets - 1,
                max_size=num_subsets - 1,
                unique=True,
            )
        )
    ) if num_subsets > 1 else []
    bounds = [0] + cuts + [len(all_names)]
    subsets = []
    for j, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
        members = all_names[lo:hi]
        quota = draw(st.integers(1, len(members)))
        subsets.append((f"S{j}", members, quota))
    num_voters = draw(st.integers(1, 6))
    ballots = [
        draw(st.lists(st.sampled_from(all_names), max_size=len(all_names), unique=True))
        for _ in range(num_voters)
    ]
    return sv.ScvInstance.from_names(num_voters, subsets, ballots)


@settings(max_examples=150, deadline=None)
@given(instances())
def test_parse_of_serialize_is_identity(inst):
    assert sv.parse_instance(sv.serialize_instance(inst)) == inst


# -- generators ----------------------------------------------------------------


def test_uniform_model_is_deterministic():
    model = sv.UniformModel(6, (3, 3), (1, 1), 0.5)
    assert sv.generate_instance(model, 7) == sv.generate_instance(model, 7)
    assert sv.generate_instance(model, 7) != sv.generate_instance(model, 8)


def test_uniform_model_zero_probability():
    model = sv.UniformModel(4, (2, 2), (1, 2), 0.0)
    inst = sv.generate_instance(model, 3)
    assert all(ballot == frozenset() for ballot in inst.ballots)
    sv.validate_instance(inst)


def test_generated_instances_always_validate():
    rng = random.Random(42)
    for _ in range(50):
        inst = random_instance(rng)
        assert sv.validate_instance(inst) is inst


def test_party_list_blocks_reproduce_the_axiom_split_instance():
    expected = fixtures.axiom_split_instance()
    layout = [
        ("C1", tuple(f"c{i}" for i in range(1, 9)), 1),
        ("C2", ("a", "b", "c"), 2),
    ]
    blocks = [(1, (f"c{i}", "a")) for i in range(1, 7)]
    blocks += [(4, ("c7", "b")), (2, ("c8", "c"))]
    model = sv.PartyListModel(subsets=tuple(layout), blocks=tuple(blocks))
    assert sv.generate_instance(model, seed=0) == expected


def test_bad_generator_specs():
    with pytest.raises(sv.BadSpec):
        sv.generate_instance(sv.UniformModel(0, (2,), (1,), 0.5), 1)
    with pytest.raises(sv.BadSpec):
        sv.generate_instance(sv.UniformModel(2, (2, 2), (1,), 0.5), 1)
    with pytest.raises(sv.BadSpec):
        sv.generate_instance(sv.UniformModel(2, (2,), (3,), 0.5), 1)
    with pytest.raises(sv.BadSpec):
        sv.generate_instance(sv.UniformModel(2, (2,), (1,), 1.5), 1)
    with pytest.raises(sv.BadSpec):
        sv.generate_instance(sv.PartyListModel((("C", ("x",), 1),), ((0, ("x",)),)), 1)
    with pytest.raises(sv.BadSpec):
        sv.generate_instance("mystery", 1)


def test_set_cover_model_emits_the_encoding():
    model = sv.SetCoverModel(ground_size=4, num_subsets=3, membership_prob=0.4, budget=2)
    inst = sv.generate_instance(model, 11)
    assert inst == sv.generate_instance(model, 11)
    assert inst.num_subsets == 2
    assert inst.quotas == (4, 2)
    assert inst.num_voters == 4
    sv.validate_instance(inst)
