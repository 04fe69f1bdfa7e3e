"""Intersection arrays: parsing, validation, and what the counts already say.

An intersection array (b0,...,b_{D-1}; c1,...,cD) records, for vertices at
distance i from a base point, how many neighbors sit one step further out
(b_i) and one step back (c_i).  Those numbers alone determine the size of
every distance shell, and quite a lot about whether a graph could exist.
"""

from drglab import (
    check_divisibility,
    compute_distance_distribution,
    diameter_head_bound,
    parse_intersection_array,
    validate_basic,
)

# The Biggs-Smith graph: 102 vertices, degree 3, diameter 7.
arr = parse_intersection_array("(3,2,2,2,1,1,1;1,1,1,1,1,1,3)")
print("array:", arr, "  D =", arr.D, "  k =", arr.k)

report = validate_basic(arr)
print("\nstructural checks:")
for check in report.checks:
    print(f"  {check.name:16s} {'pass' if check.passed else 'FAIL'}   {check.detail}")

dist = compute_distance_distribution(arr)
print("\nshell sizes:", [str(x) for x in dist.k_sizes])
print("n =", dist.n, "  m =", dist.m, "  integral =", dist.integral)

head = diameter_head_bound(arr)
print(f"\nhead bound: first crossing at j={head.j}, so D <= {head.bound} (holds: {head.passed})")
print("divisibility screen:", check_divisibility(arr).detail)

# A candidate that cannot exist: the shells come out fractional.
bad = parse_intersection_array("(3,1;1,2)")
bad_dist = compute_distance_distribution(bad)
print("\ncandidate", bad, "-> shells", [str(x) for x in bad_dist.k_sizes], "integral =", bad_dist.integral)

# And one that violates monotonicity outright.
ugly = parse_intersection_array("(3,2,3;1,1,3)")
print("candidate", ugly, "->", [c.detail for c in validate_basic(ugly).failed()])
