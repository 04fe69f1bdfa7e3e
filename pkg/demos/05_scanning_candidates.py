"""Sieving candidate arrays through the stacked feasibility pipeline.

Enumerate every monotone candidate in a parameter box, knock each one out
at the first failing screen, and watch the resistance bound reject arrays
that every cheaper screen accepts.
"""

from collections import Counter

from drglab import ScanQuery, evaluate_array, parse_intersection_array, scan
from drglab.rational import decimal_string

# Degree 3, diameter up to 7, nothing bigger than 110 vertices.
records = scan(ScanQuery(3, 3, 2, 7, n_max=110))
print(f"{len(records)} candidates with k = 3, D in 2..7, n <= 110")
print("first failing screen:", dict(Counter(r.first_failing_check for r in records)))

print("\nruled out by the resistance bound alone:")
for record in records:
    if record.ruled_out_by_biggs_alone:
        print(f"  {str(record.array):42s} n={int(record.n):4d} ratio {record.ratio} = {decimal_string(record.ratio)}")

survivors = [r for r in records if r.first_failing_check == "pass"]
print("\nsurvivors (not excluded by any screen here):")
for record in survivors:
    print(f"  {str(record.array):42s} n={int(record.n):4d} {record.verdict.category.value}")

# A larger candidate analyzed directly: every cheap screen passes, the
# resistance ratio alone exposes it.
big = parse_intersection_array("(8,3,3,3,3,3,3,3,2,2,1;1,2,2,3,3,3,3,3,3,3,8)")
record = evaluate_array(big)
print(f"\n{big}")
print(
    f"  n = {record.n}, first failing screen: {record.first_failing_check},"
    f" ratio {record.ratio} = {decimal_string(record.ratio)}"
)
