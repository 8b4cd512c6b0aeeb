"""Modal logic whose box and diamond are erosion and dilation."""

from .axioms import PROFILES, REGISTRY, match_axiom, matching_schemas, validate_axiom_suite
from .formula import (
    And,
    Bot,
    Box,
    Diamond,
    Formula,
    Implies,
    Not,
    Or,
    Prop,
    Top,
    parse_formula,
    print_formula,
)
from .proofs import (
    BUNDLED,
    Derivation,
    Line,
    ProofBuilder,
    ProofCheck,
    assert_derivation,
    check_derivation,
)
from .semantics import Model, entails_on_models, evaluate, kripke_to_model, satisfies

__all__ = [
    "And", "Bot", "Box", "BUNDLED", "Derivation", "Diamond", "Formula", "Implies", "Line", "Model",
    "Not", "Or", "PROFILES", "ProofBuilder", "ProofCheck", "Prop", "REGISTRY", "Top",
    "assert_derivation", "check_derivation", "entails_on_models", "evaluate", "kripke_to_model",
    "match_axiom", "matching_schemas", "parse_formula", "print_formula", "satisfies",
    "validate_axiom_suite",
]
