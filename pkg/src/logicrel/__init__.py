"""Propositional logic with two implication semantics, side by side.

Material mode reads an implication as not-antecedent-or-consequent, pointwise.
Relational mode reads it as a relation between the operands: it holds iff
antecedent & consequent is logically equivalent to the antecedent, which gives
the implication one global truth value per universe and dissolves the classic
paradoxes of material implication.
"""

__version__ = "0.1.0"

from .equivalence import Verdict, default_universe, entails, equivalent, is_contradiction, is_tautology
from .errors import LimitError, LogicError, ParseError, UniverseMismatch
from .formula import (
    BOTTOM,
    TOP,
    And,
    Bottom,
    Formula,
    Imp,
    Letter,
    Not,
    Or,
    Top,
    Universe,
    letters,
    max_imp_depth,
    subformulas_bottom_up,
)
from .parser import SyntaxStyle, parse, render
from .relation import (
    CriteriaReport,
    LatticeReport,
    ParadoxReport,
    RelationClass,
    RelationKind,
    audit_paradoxes,
    classify_relation,
    criteria_report,
    implies_rel,
    verify_lattice,
)
from .semantics import (
    Interpretation,
    Mode,
    TruthTable,
    eliminate_implications,
    eval_material,
    eval_relational,
    gen_random_formula,
    truth_table,
)

__all__ = [
    "__version__",
    "And", "Bottom", "BOTTOM", "Formula", "Imp", "Letter", "Not", "Or", "Top", "TOP",
    "Universe", "letters", "max_imp_depth", "subformulas_bottom_up",
    "SyntaxStyle", "parse", "render",
    "Interpretation", "Mode", "TruthTable",
    "eliminate_implications", "eval_material", "eval_relational",
    "gen_random_formula", "truth_table",
    "Verdict", "default_universe", "entails", "equivalent",
    "is_contradiction", "is_tautology",
    "CriteriaReport", "LatticeReport", "ParadoxReport", "RelationClass", "RelationKind",
    "audit_paradoxes", "classify_relation", "criteria_report", "implies_rel", "verify_lattice",
    "LogicError", "ParseError", "LimitError", "UniverseMismatch",
]
