"""Encoding set-cover questions as span-wide representation questions.

Deciding whether a span-wide representative committee exists is as hard as
set cover: voters play the ground elements, the covering collection becomes
one candidate subset, and the budget becomes its quota.  The search is exact
and answers both directions; on hostile inputs its running time grows
steeply with the instance, which is the expected price of exactness.
"""

import time

import scvoting as sv

# A concrete question: cover {0,1,2} with two of {0,1}, {1,2}, {2}.
sc = sv.SetCoverInstance.of(3, [{0, 1}, {1, 2}, {2}], budget=2)
inst = sv.encode_set_cover(sc)
print("encoded instance:")
print(sv.serialize_instance(inst))

committee = sv.sw_jr_exists(inst)
print("committee found:", ",".join(inst.names_of(committee.members)))
print("decoded cover (collection indices):", sorted(sv.decode_committee_to_cover(sc, committee)))
print()

# An impossible question comes back as plain non-existence.
sc_no = sv.SetCoverInstance.of(3, [{0}, {1}, {2}], budget=2)
print("three singletons, budget two:", sv.sw_jr_exists(sv.encode_set_cover(sc_no)))
print()

# Timing on a hostile family: the collection holds all pairs of a ground set
# of size g and the budget is one pair short of any possible cover, so the
# search must refute every selection.  The enumeration space (and the
# measured time) grows combinatorially; this is recorded behavior, not a
# performance target.
print("ground  pairs  budget  selections      time")
for g in (4, 6, 8, 10):
    pairs = [frozenset({i, j}) for i in range(g) for j in range(i + 1, g)]
    budget = g // 2 - 1
    sc_hard = sv.SetCoverInstance.of(g, pairs, budget=budget)
    encoded = sv.encode_set_cover(sc_hard)
    started = time.perf_counter()
    answer = sv.sw_jr_exists(encoded)
    elapsed = time.perf_counter() - started
    assert answer is None
    print(
        f"{g:6d} {len(pairs):6d} {budget:7d}"
        f" {sv.count_feasible_committees(encoded):11d} {elapsed:8.3f}s"
    )
