"""
Generators, words and the pipeline reading
==========================================

Every map here is a plain table: ``f.table[k]`` is the value at ``k``.
Words of generators are read left to right, like a shell pipeline.
"""

from symsimp import evaluate, generator, parse, typecheck
from symsimp.fin import compose, identity

# a coface d_i^(n) : [n-1] -> [n] skips the value i
d = generator("d", 3, 2)
print("d_2 on [2] -> [3]:", d.table)

# the quasi-codegeneracy u_i sends both 0 and i to 0
u = generator("u", 2, 2)
print("u_2 on [3] -> [2]:", u.table)

# u_1 is the ordinary codegeneracy s_0
print("u_1 == s_0 ?", generator("u", 4, 1) == generator("s", 4, 0))

# %%
# A word carries no dimension. The anchor says what it is applied to,
# and typecheck reports the dimension after each symbol.
w = parse("d2 u2")
print("chain of 'd2 u2' at [2]:", typecheck(w, 2))
print("value:", evaluate(w, 2).table, "(the identity)")

# d0 u3 is not the identity: it rotates [2]
print("'d0 u3' at [2]:", evaluate("d0 u3", 2).table)

# %%
# Reading order. The leftmost symbol acts first, so the value of
# 'a b' is compose(b, a).
a, b = parse("u2 t0"), parse("d1")
mid = typecheck(a, 3)[-1]
lhs = evaluate(a + b, 3)
rhs = compose(evaluate(b, mid), evaluate(a, 3))
print("pipeline check:", lhs == rhs)

# typecheck refuses u3 on a 1-dimensional object
try:
    typecheck("u1 u3", 2)
except Exception as exc:
    print(type(exc).__name__, "-", exc)

print("identity(3) is evaluate('', 3):", identity(3) == evaluate("", 3))
