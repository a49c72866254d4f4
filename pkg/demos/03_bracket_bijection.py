"""The bracket-sequence bijection for maximal-degree summations.

A permutation owns a maximal-degree summation exactly when every cycle
descends through its support and the supports are pairwise ordered or
nested.  Such permutations correspond one-to-one with bracket insertions
into the word n n-1 ... 1 in which every integer is covered, every pair is
nonempty, and each gap holds at most one ')' and one '('.
"""

from woplab import (
    Permutation,
    classify_pairs,
    decode,
    encode,
    enumerate_sequences,
    parse_seq,
    print_seq,
    satisfies_star,
)

alpha = Permutation.parse("(5 3 1)(2)(4)(6)")
seq = encode(alpha)
print(f"encode {alpha}  ->  {print_seq(seq)}")
print(f"with pair labels: {print_seq(seq, labels=True)}")

c = classify_pairs(seq)
print(f"top-level pairs: {sorted(c.top_level)}")
print(f"embedded pairs: {sorted(c.embedded)}")
print(f"bottom-level pairs: {sorted(c.bottom_level)}")
print(f"adjacent pairs: {sorted(tuple(p) for p in c.adjacent)}")

print()
back = decode(parse_seq("(6)(5(4)3(2)1)"))
print(f"decode (6)(5(4)3(2)1)  ->  {back}   (round trip: {back == alpha})")

print()
print("All sequences on 4 integers with 2 pairs, and their permutations:")
for s in enumerate_sequences(4, 2):
    print(f"  {print_seq(s):12} ->  {decode(s)}")

print()
ascending = Permutation.parse("(123)")
print(f"{ascending} satisfies the conditions: {satisfies_star(ascending)}")
print("(its cycle walks upward, so its summation drops below maximal degree)")
