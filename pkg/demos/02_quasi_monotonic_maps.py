"""
Quasi-monotonic maps and their normal form
==========================================

A map is quasi-monotonic when it fixes 0 and increases strictly away from
its zeros. Each one is uniquely a block of u's followed by a block of d's.
"""

import numpy as np

from symsimp import canonical_spelling, evaluate, factor_qm, make_map, normalize_qord
from symsimp.audit import all_tables, count_qm, qm_mask

# all 27 maps [2] -> [2], one row per map
tables = all_tables(2, 2)
mask = qm_mask(tables)
print(tables.shape, "maps,", mask.sum(), "quasi-monotonic:")
print(tables[mask])

# the count is a binomial coefficient
grid = np.array([[count_qm(n, m) for m in range(6)] for n in range(6)])
print(grid)

# %%
# Factor a map and spell it.
f = make_map(4, 3, [0, 2, 0, 0, 3])
fac = factor_qm(f)
print("alpha =", fac.alpha, " beta =", fac.beta)
word = canonical_spelling(fac.alpha, fac.beta)
print("spelling:", word, "->", evaluate(word, 4).table)

# %%
# Any d/u word (without d0) rewrites to that same spelling.
messy = "d1 d1 u3 u1"
nf, steps = normalize_qord(messy, trace=True)
print(f"{messy!r} -> {str(nf)!r} in {steps} steps")
g = evaluate(messy, 3)
q = factor_qm(g)
print("same map:", g == evaluate(nf, 3), " matches factor_qm:", canonical_spelling(q.alpha, q.beta) == nf)
