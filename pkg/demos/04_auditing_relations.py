"""
Auditing the relation tables
============================

Each relation family is instantiated over all indices up to a bound and
both sides are evaluated as tables. A deliberately broken rule shows what
a failure looks like.
"""

from symsimp.audit import audit_all_families, audit_family, audit_unique_factorization
from symsimp.relations import RuleInstance, instantiate
from symsimp.words import parse

for rep in audit_all_families(6):
    print(rep.summary())

print(audit_unique_factorization(4, 4).summary())

# %%
# A few instances of the quasi-simplicial identities.
for inst in instantiate("quasi", 2)[:6]:
    print(" ", inst)

# %%
# Negative control: break the braid relation by appending t0 to its right side.
def break_braid(inst):
    if inst.case_label.startswith("t_it_{i+1}t_i"):
        return RuleInstance(inst.lhs, inst.rhs + parse("t0"), inst.anchor_dim, inst.family, inst.case_label)
    return inst


bad = audit_family("moore", 3, mutate=break_braid)
print(bad.summary())
for v in bad.violations:
    print(" ", v.description, v.lhs_table, v.rhs_table)
