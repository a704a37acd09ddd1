"""Free-boundary (symmetric) Schur processes and plane overpartitions.

The right end of the sequence is free; reflecting the word produces a
palindromic process whose diagonal boxes use one-sided reflection rules.
The even-rows / even-columns variants constrain the free partition.
"""
from collections import Counter
from fractions import Fraction

from schursample import RandomSource, parse_word, symmetric_schur_sample
from schursample.oracle import enumerate_symmetric_support
from schursample.tilings import overpartition_word, to_plane_overpartition
from schursample.zfun import z_symmetric

# --- a plane overpartition ---------------------------------------------------
n = 4
word = overpartition_word(n)
s = symmetric_schur_sample(word, (0.45,) * (2 * n), 0.8, "free", 12)
tab = to_plane_overpartition(word, s.lambdas[: 2 * n + 1])
print(f"a random plane overpartition with entries at most {n}:")
for row in tab.rows:
    print("  " + " ".join(f"{v}{'~' if over else ' '}" for v, over in row))
print("(~ marks an overlined entry, standing for the half-integer k - 1/2)")

# --- boundary modes ----------------------------------------------------------
word = parse_word("<<'")
z = (Fraction(1, 3), Fraction(1, 4))
t = Fraction(1, 2)
src = RandomSource(3)
for mode in ("free", "even_rows", "even_columns"):
    counts = Counter(
        symmetric_schur_sample(word, z, t, mode, src.child(k)).free_partition
        for k in range(8000)
    )
    zv = z_symmetric(word, z, t, mode)
    sup = enumerate_symmetric_support(word, z, t, cap=16, mode=mode)
    print(f"\nmode {mode}: Z = {zv} (enumeration: {float(sup.total):.6f})")
    for lam, c in counts.most_common(4):
        print(f"  free partition {str(lam):12s} empirical {c / 8000:.4f}")
