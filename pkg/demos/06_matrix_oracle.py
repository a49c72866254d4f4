"""Cross-check the summation engine against raw matrix-entry calculus.

Substituting p_k -> tr(X^k) for a generic N x N matrix X turns W([n]) into
the normal-ordered operator (1/n) sum :D_{a1 an} ... D_{a2 a1}: with
D_ab = sum_c X_ac d/dX_bc.  Both routes are evaluated independently below
and compared entry-polynomial by entry-polynomial.
"""

from woplab import (
    D_apply,
    apply_W,
    equal_as_p,
    normal_ordered_apply,
    p_to_x,
    parse_p,
    tr_Dn_apply,
)

for n, text in [(1, "p2"), (2, "p1^3"), (2, "p2"), (3, "p2"), (3, "p1*p2")]:
    F = parse_p(text)
    N = F.weight() + n + 1
    direct = tr_Dn_apply(n, F, N)  # sum over a-tuples of the ordered product
    engine = n * apply_W(n, F)  # n! summations in p-space, then substituted
    print(
        f"n={n}, F={text:6}, N={N}: trace calculus == summation engine: "
        f"{equal_as_p(direct, engine, N)}"
    )

print()
print("The contraction identity behind normal ordering:")
G = p_to_x(parse_p("p2"), 3)
composed = D_apply(1, 2, D_apply(2, 3, G))
ordered = normal_ordered_apply([(1, 2), (2, 3)], G)
print(f"  D_12 (D_23 G) - :D_12 D_23: G == D_13 G: {composed - ordered == D_apply(1, 3, G)}")
