"""The three-phase greedy construction, step by step.

The solver guarantees its committee passes both the per-subset check
(iw-jr) and the weak span-wide check (weak-sw-jr), and its trace records
every selection with the support that justified it.
"""

import scvoting as sv
from scvoting.fixtures import axiom_split_instance, no_swjr_instance

inst = axiom_split_instance()
committee, trace = sv.solve_greedy(inst)

print("instance quotas:", inst.quotas, "voters:", inst.num_voters)
print("committee:", ",".join(inst.names_of(committee.members)))
print()
print("phase  candidate  subset     support  newly represented")
for step in trace.steps:
    print(
        f"{step.phase:6s} {inst.candidate_name(step.candidate):10s}"
        f" {inst.subsets[step.subset].name:10s} {step.support:7d} "
        f" {list(step.newly_represented)}"
    )
print()
print("iw-jr:      ", sv.check_iw_jr(inst, committee).satisfied)
print("weak-sw-jr: ", sv.check_weak_sw_jr(inst, committee).satisfied)
print()

# The same trace serializes to JSON lines for downstream tooling.
print(sv.trace_to_json_lines(inst, trace))

# Even when no committee can satisfy the full span-wide axiom, the greedy
# output still meets the two weaker guarantees.
blocked = no_swjr_instance()
committee, _ = sv.solve_greedy(blocked)
print("deadlocked instance; greedy returns", blocked.names_of(committee.members))
print("  sw-jr:      ", sv.check_sw_jr(blocked, committee).satisfied)
print("  iw-jr:      ", sv.check_iw_jr(blocked, committee).satisfied)
print("  weak-sw-jr: ", sv.check_weak_sw_jr(blocked, committee).satisfied)

# The slot-counting inequality that powers the guarantee: the fraction of
# slots filled early never exceeds the largest per-subset fill ratio.
lhs, rhs = sv.lemma1_gap(quotas=[1, 2], filled=[0, 1])
print()
print(f"slot-counting bound example: {lhs} <= {rhs}")
