"""
Permutations, translation and push-through
==========================================

Arbitrary maps need permutations too. ``factor_general`` splits a map into
a sort followed by a monotone map, and ``translate`` moves between the
s-based and u-based alphabets.
"""

from symsimp import evaluate, factor_general, make_map, push_perm, translate
from symsimp.fin import MultiIndex
from symsimp.words import u_spelling

f = make_map(3, 2, [2, 0, 2, 1])
fac = factor_general(f)
print("pi =", fac.pi, " alpha =", fac.alpha, " beta =", fac.beta)
ds = fac.spelling()
du = translate(ds, "du")
print("d/s/t word:", ds)
print("d/u/t word:", du)
print("both give f:", evaluate(ds, 3) == f == evaluate(du, 3))

# u1 and s0 are the same operator, so the translation is exact there
print(translate("u1", "ds"), "|", translate("s0", "du"))

# %%
# Pushing a zero-fixing permutation past u_gamma.
pi, gamma = "t2 t1", MultiIndex((3,))
gamma2, rest = push_perm(pi, gamma)
print(f"{pi} {u_spelling(gamma)} = {u_spelling(gamma2)} {rest}")
print("same map:", evaluate(f"{pi} {u_spelling(gamma)}", 3) == evaluate(u_spelling(gamma2) + rest, 3))

# gamma' collects the points that pi sends into gamma: 2 goes to 3 here
p = evaluate(pi, 3)
print("pi as a table:", p.table, "  preimage of 3:", p.table.index(3))
