"""Modeling sub-committee elections and checking representation axioms.

A walkthrough of the core objects: build an instance where candidates are
partitioned into quota-carrying subsets, serialize it, and interrogate
committees with the four justified-representation checks.
"""

import scvoting as sv

# A hiring panel must pick 1 chair and 2 engineers.  Twelve staff members
# approve whoever they would accept in each role.
inst = sv.ScvInstance.from_names(
    num_voters=12,
    subsets=[
        ("chairs", [f"c{i}" for i in range(1, 9)], 1),
        ("engineers", ["a", "b", "c"], 2),
    ],
    ballots=(
        [[f"c{i}", "a"] for i in range(1, 7)]      # six a-supporters
        + [["c7", "b"]] * 4                        # four who align on c7 and b
        + [["c8", "c"]] * 2                        # two who align on c8 and c
    ),
)

print("voters:", inst.num_voters)
print("committee size:", inst.committee_size, "from quotas", inst.quotas)
print("feasible committees:", sv.count_feasible_committees(inst))
print()

print("the instance serializes to a small JSON document:")
print(sv.serialize_instance(inst))

# Pick a committee and ask all four axioms about it.  Each failure comes
# with a witness: the cohesive voter group left unrepresented and the
# candidate evidence making it cohesive.
committee = inst.committee([inst.candidate_id(x) for x in ("c1", "a", "c")])
print("checking committee", inst.names_of(committee.members))
for axiom in sv.ALL_AXIOMS:
    verdict = sv.check_axiom(inst, committee, axiom)
    print(f"  {axiom:11s}", "pass" if verdict.satisfied else "FAIL", end="")
    if verdict.witness:
        wit = verdict.witness
        print(
            f"  voters {sorted(wit.voters)} share"
            f" {[inst.candidate_name(c) for c in wit.candidates]}",
            end="",
        )
    print()
print()

# The brute-force oracle re-decides any axiom straight from its definition,
# enumerating every voter group.  Handy for trusting the fast checkers.
for axiom in sv.ALL_AXIOMS:
    fast = sv.check_axiom(inst, committee, axiom).satisfied
    slow = sv.brute_force_axiom(inst, committee, axiom).satisfied
    assert fast == slow
print("fast checkers agree with the exhaustive oracle on this committee")
