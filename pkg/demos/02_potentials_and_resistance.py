"""From an array to exact voltages and two-point resistances.

Wire every edge as a unit resistor, attach a battery across an adjacent
pair, and the voltage landscape collapses onto the distance partition: one
exact rational phi_i per level.  Everything downstream (resistance at every
distance, the head-to-tail ratio, the classification against the sharp
bound) follows from that sequence.
"""

from drglab import (
    classify_biggs,
    compute_distance_distribution,
    extremal_set,
    parse_intersection_array,
    potentials_closed_form,
    potentials_recursive,
    resistance_profile,
)
from drglab.rational import decimal_string

foster = parse_intersection_array("(3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3)")

# Two independent routes to the same numbers.
recursive = potentials_recursive(foster)
closed = potentials_closed_form(foster, compute_distance_distribution(foster))
print("recursion  :", [str(x) for x in recursive.phi])
print("closed form:", [str(x) for x in closed.phi])
assert recursive.phi == closed.phi  # exact, no tolerance
# Note phi_3 = 17/2: these are genuinely rational, floats would drift.

profile = resistance_profile(foster)
print("\nresistances d_1..d_D:", [str(d) for d in profile.d])
print("ratio (phi_1+...+phi_{D-1})/phi_0 =", profile.ratio, "=", decimal_string(profile.ratio))
print("d_D/d_1 = 1 + ratio =", profile.K_factor)

# The four extremal graphs are the only ones at or above 87/100.
print("\nextremal set:")
for entry in extremal_set():
    print(f"  {entry.name:24s} {str(entry.array):42s} ratio {entry.ratio} = {decimal_string(entry.ratio)}")

# Verdicts: strictly below the threshold, extremal, or impossible.
for text in ["(3,2,1;1,2,3)", "(3,2,2,2,2,2;1,1,1,1,1,3)", "(3,2,2,1,1,1,1;1,1,1,1,1,1,3)"]:
    verdict = classify_biggs(parse_intersection_array(text))
    extra = f" ({verdict.matched_extremal})" if verdict.matched_extremal else ""
    print(f"\n{text}\n  -> {verdict.category.value}{extra}, ratio {verdict.ratio} = {decimal_string(verdict.ratio)}")
