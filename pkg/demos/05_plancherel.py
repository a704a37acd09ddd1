"""Poissonized Plancherel measure and the mixed exponential specialization.

Sending the number of parameters to infinity while scaling them down turns
the growth dynamics into the Robinson-Schensted correspondence applied to a
Poisson-size uniform permutation: the resulting partition follows
P(lambda) ~ theta^n (f^lambda / n!)^2 with f^lambda counted by hooks.
"""
import math
from collections import Counter

from schursample import RandomSource, mixed_plancherel_sample, plancherel_sample
from schursample.oracle import hook_length_f
from schursample.partitions import partitions_up_to

theta = 1.5
n = 50_000
src = RandomSource(31)
counts = Counter(plancherel_sample(theta, src.child(k)) for k in range(n))

print(f"poissonized Plancherel at theta = {theta}: empirical vs exact masses")
for lam in partitions_up_to(3):
    size = sum(lam)
    p = math.exp(-theta) * theta**size * (hook_length_f(lam) / math.factorial(size)) ** 2
    print(f"  {str(lam):10s} exact {p:.4f}  empirical {counts[lam] / n:.4f}")

mean = sum(sum(l) * c for l, c in counts.items()) / n
print(f"mean size {mean:.3f} (Poisson mean {theta})")

# --- mixed case: one Plancherel side, one geometric side --------------------
a, bs = 1.2, [0.5, 0.25, 0.125]
counts = Counter(mixed_plancherel_sample(a, bs, src.child(10**6 + k)) for k in range(20_000))
print(f"\nmixed specialization, a = {a}, lines {bs}: most frequent shapes")
for lam, c in counts.most_common(6):
    print(f"  {str(lam):12s} {c / 20_000:.4f}")
