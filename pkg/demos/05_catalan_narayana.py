"""Catalan and Narayana counts along four independent routes.

The number of maximal-degree summations of W([n]) is the n-th Catalan
number, refined by polynomial degree into Narayana numbers.  The
verification below recomputes each entry by bracket-sequence enumeration,
by classifying all n! summation templates, by the closed binomial formula,
and by the top-level-pair convolution recurrence; any disagreement raises.
"""

from woplab import catalan, catalan_series, verify_counts

for n in range(1, 9):
    print(verify_counts(n).as_text())
    print()

print("Catalan series from G = 1 + x*G^2 versus the closed formula:")
series = catalan_series(12)
print(f"  series:  {series}")
print(f"  formula: {[catalan(m) for m in range(13)]}")
