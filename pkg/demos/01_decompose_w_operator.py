"""Decompose W([n]) into its n! permutation-indexed summations.

Each summation is determined by two set partitions of the index variables
k_1..k_n: the cycle partition (giving the p-factors) and the derivative
partition (giving the coefficient and the differential part).  For n = 3,
five summations reach the maximal degree 4 and the full n-cycle that walks
upward, (1 2 3), collapses to degree 2.
"""

from woplab import decompose_W, is_OS, render

print("The six summations of W([3]):\n")
for t in decompose_W(3):
    os_type = is_OS(t)
    tag = f"maximal degree, type {os_type}" if os_type else f"degree {t.degree}"
    print(f"  FS_{t.perm}   [{tag}]")
    print(f"      {render(t, 'plain')}")
    print(f"      {render(t, 'latex')}\n")

print("Degree census for n = 1..6 (count of maximal-degree summations):")
for n in range(1, 7):
    templates = decompose_W(n)
    top = sum(1 for t in templates if t.degree == n + 1)
    print(f"  n={n}: {top} of {len(templates)} summations have degree {n + 1}")
