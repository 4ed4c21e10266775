"""Harmonic scoring rules and where their optima miss representation axioms.

Scores are exact rationals throughout: a voter with j approved winners
contributes 1 + 1/2 + ... + 1/j, either counted across the whole committee
(sw-pav) or per subset and summed (iw-pav).  Exhaustive maximization plus
the axiom checks make the trade-offs concrete.
"""

from fractions import Fraction

import scvoting as sv
from scvoting.fixtures import (
    iwpav_vs_weak_instance,
    pav_vs_swjr_instance,
    swpav_vs_iwjr_instance,
)

# One voter, three subsets: the two variants value the same committee
# differently because iw-pav restarts the harmonic ladder in every subset.
inst = sv.ScvInstance.from_names(
    1,
    [("C1", ["a", "b"], 2), ("C2", ["d"], 1), ("C3", ["c", "e"], 1)],
    [["a", "b", "c"]],
)
w = inst.committee([inst.candidate_id(x) for x in ("a", "b", "d", "c")])
print("one voter, three approved winners across two subsets:")
print("  sw-pav:", sv.sw_pav_score(inst, w), " iw-pav:", sv.iw_pav_score(inst, w))
print()

# Optimizing the score can abandon a cohesive group that span-wide
# representation would protect.
inst = pav_vs_swjr_instance()
for variant in (sv.SW_PAV, sv.IW_PAV):
    w, score = sv.maximize(inst, variant)
    print(
        f"{variant} optimum {','.join(inst.names_of(w.members))} scores {score};"
        f" sw-jr {'holds' if sv.check_sw_jr(inst, w).satisfied else 'FAILS'}"
    )
exists = sv.sw_jr_exists(inst)
print(
    "yet a span-wide representative committee exists:",
    ",".join(inst.names_of(exists.members)),
    "scoring",
    sv.sw_pav_score(inst, exists),
)
print()

# The per-subset optimum can leave a whole block unrepresented everywhere.
inst = iwpav_vs_weak_instance()
w, score = sv.maximize(inst, sv.IW_PAV)
verdict = sv.check_weak_sw_jr(inst, w)
print(
    f"iw-pav optimum {','.join(inst.names_of(w.members))} scores {score};"
    f" weak-sw-jr {'holds' if verdict.satisfied else 'FAILS'}"
)
if verdict.witness:
    print(
        "  left out:",
        sorted(verdict.witness.voters),
        "who share",
        [inst.candidate_name(c) for c in verdict.witness.candidates],
    )
print()

# A cautionary fixture: the span-wide optimum and the per-subset demand pull
# in opposite directions, but on this ballot profile the conflict does not
# actually materialize under either quota reading.
for quota in (2, 1):
    inst = swpav_vs_iwjr_instance(third_quota=quota)
    w, score = sv.maximize(inst, sv.SW_PAV)
    verdict = sv.check_iw_jr(inst, w)
    print(
        f"third-subset quota {quota}: optimum {','.join(inst.names_of(w.members))}"
        f" at {score}; iw-jr {'holds' if verdict.satisfied else 'FAILS'}"
        + (" (vacuously)" if "vacuous" in verdict.note else "")
    )
assert sv.maximize(swpav_vs_iwjr_instance(1), sv.SW_PAV)[1] == Fraction(95, 6)

# The minimum marginal contribution of a committee member is bounded by the
# represented share, the counting fact behind the sw-pav guarantee.
inst = pav_vs_swjr_instance()
w, _ = sv.maximize(inst, sv.SW_PAV)
least = min(sv.marginal_contribution(inst, w, c) for c in w.members)
represented = sum(1 for b in inst.ballots if b & w.members)
print()
print(
    f"least marginal contribution {least} * k={inst.committee_size}"
    f" <= {represented} represented voters"
)
