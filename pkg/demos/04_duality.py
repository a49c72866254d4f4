"""The duality that swaps summation type (r, s) into (s, r).

The dual sequence rewrites the four bracket positions around each integer
by a 16-row local table; equivalently, every interior gap toggles between
empty and ')(' while lone brackets stay put.  It is an involution and maps
sequences with r pairs onto sequences with n-r+1 pairs, which proves the
type-count symmetry without any algebra.
"""

from woplab import decode, dual, dual_via_gap_toggle, enumerate_sequences, parse_seq, print_seq

seq = parse_seq("(7(65)(4)(3)21)")
print(f"sequence: {print_seq(seq)}   (r = {seq.r}, decodes to {decode(seq)})")
d = dual(seq)
print(f"dual:     {print_seq(d)}   (r = {d.r}, decodes to {decode(d)})")
print(f"dual of the dual: {print_seq(dual(d))}")
print(f"gap-toggle route agrees: {dual_via_gap_toggle(seq) == d}")

print()
print("Type counts swap under duality (n = 6):")
for r in range(1, 7):
    seqs = enumerate_sequences(6, r)
    images = {dual(s) for s in seqs}
    print(
        f"  r={r}: {len(seqs):3} sequences  ->  all duals have r={6 - r + 1}: "
        f"{all(s.r == 6 - r + 1 for s in images)}"
    )
