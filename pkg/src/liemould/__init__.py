"""Exact computer algebra for derivations of free Lie algebras on {a, b, c}:
word arithmetic, the even derivation families, mould translation and
alternality checks, and the constructive depth-3 relation-lifting pipeline
with machine-checkable certificates."""

from .derivations import (
    Derivation,
    alpha,
    alpha_tilde,
    der_bracket,
    epsilon,
    epsilon_tilde,
    inner,
    inner_tilde,
    poisson,
)
from .exprs import (
    Bracket,
    Gen,
    Sum,
    eval_bracket_expr,
    parse_bracket_expr,
    print_bracket_expr,
)
from .moulds import (
    CommPoly,
    CommRat,
    hat_epsilon,
    is_alternal,
    is_bialternal,
    is_prealternal,
    mi,
)
from .relations import (
    LiftError,
    PeriodVector,
    RelationCertificate,
    bialternal_dimension,
    formula_dimension,
    h_element,
    lift_to_depth3,
    pollack_combination,
    theta3_membership_depth3,
    verify_certificate,
)
from .words import (
    Grading,
    NCPoly,
    ad_pow,
    grading,
    is_lie_element,
    is_push_invariant,
    lie_bracket,
    lyndon_basis,
    phi,
    pi_b,
    pi_c,
    push,
    sec,
    uea_act,
)

__all__ = [
    "Bracket",
    "CommPoly",
    "CommRat",
    "Derivation",
    "Gen",
    "Grading",
    "LiftError",
    "NCPoly",
    "PeriodVector",
    "RelationCertificate",
    "Sum",
    "ad_pow",
    "alpha",
    "alpha_tilde",
    "bialternal_dimension",
    "der_bracket",
    "epsilon",
    "epsilon_tilde",
    "eval_bracket_expr",
    "formula_dimension",
    "grading",
    "h_element",
    "hat_epsilon",
    "inner",
    "inner_tilde",
    "is_alternal",
    "is_bialternal",
    "is_lie_element",
    "is_prealternal",
    "is_push_invariant",
    "lie_bracket",
    "lift_to_depth3",
    "lyndon_basis",
    "mi",
    "parse_bracket_expr",
    "phi",
    "pi_b",
    "pi_c",
    "poisson",
    "pollack_combination",
    "print_bracket_expr",
    "push",
    "sec",
    "theta3_membership_depth3",
    "uea_act",
    "verify_certificate",
]
