"""Nominalistic Logic: a small trusted kernel for an intensional type theory
with nominalization, presented as a sequent calculus."""

from nlogic.types import IOTA, O, Fun, Type, arrow, is_predicate_type
from nlogic.term import (
    App, Const, Lam, Term, Var, NOR, nex,
    alpha_eq, free_vars, normalize, reduces_one, reduct_steps, substitute,
)
from nlogic.typecheck import (
    has_type, is_formula, is_nominalizable, structural_type, types_of,
)

__version__ = "0.1.0"

__all__ = [
    "IOTA", "O", "Fun", "Type", "arrow", "is_predicate_type",
    "App", "Const", "Lam", "Term", "Var", "NOR", "nex",
    "alpha_eq", "free_vars", "normalize", "reduces_one", "reduct_steps", "substitute",
    "has_type", "is_formula", "is_nominalizable", "structural_type", "types_of",
]
