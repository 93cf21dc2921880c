"""Symmetric-simplicial operators: concrete maps, generator words, relation
tables, quasi-monotonic factorization and exhaustive audits."""

from .errors import FinError
from .fin import (
    FinMap,
    MapClass,
    MultiIndex,
    classify,
    compose,
    generator,
    identity,
    invert,
    make_map,
    multi_d,
    multi_u,
)
from .words import (
    Gen,
    Word,
    canonical_spelling,
    evaluate,
    expand_z,
    parse,
    render,
    translate,
    typecheck,
)
from .relations import (
    RuleFamily,
    RuleInstance,
    families,
    instantiate,
    normalize_qord,
    rule_set,
    rewrite_step,
)
from .factor import (
    factor_general,
    factor_monotone,
    factor_qm,
    perm_to_word,
    push_perm,
    push_t_through_u,
    t_act,
    t_tilde,
)

__version__ = "0.1.0"

__all__ = [
    "FinError",
    "FinMap",
    "MapClass",
    "MultiIndex",
    "classify",
    "compose",
    "generator",
    "identity",
    "invert",
    "make_map",
    "multi_d",
    "multi_u",
    "Gen",
    "Word",
    "canonical_spelling",
    "evaluate",
    "expand_z",
    "parse",
    "render",
    "translate",
    "typecheck",
    "RuleFamily",
    "RuleInstance",
    "families",
    "instantiate",
    "normalize_qord",
    "rule_set",
    "rewrite_step",
    "factor_general",
    "factor_monotone",
    "factor_qm",
    "perm_to_word",
    "push_perm",
    "push_t_through_u",
    "t_act",
    "t_tilde",
]
