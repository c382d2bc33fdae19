"""Sequential composition algebra for propositional answer set programs.

Programs over a finite alphabet form an algebra under sequential composition,
together with a cup operator, syntactic negation, reducts and Kleene closure.
Least models and answer sets fall out of the algebra as fixpoints, and a
seeded law-checking engine validates the identities (and the expected
failures) on random and exhaustively enumerated programs.
"""

from .compose import (
    compose,
    compose_oracle,
    cup,
    kleene_plus,
    kleene_star,
    negate_program,
    omega,
    ominus,
    oplus,
    or_transform,
    power,
    tf_transform,
)
from .core import (
    Alphabet,
    Classification,
    Interpretation,
    Literal,
    Program,
    Rule,
    permutation_program,
    unit_program,
)
from .errors import (
    AlphabetMismatchError,
    AlphabetTooLargeError,
    AspAlgebraError,
    InternalMismatchError,
    NotBijectiveError,
    NotHornError,
    ParseError,
    ReservedAtomError,
    UndeclaredAtomError,
)
from .lawcheck import (
    HOLDS,
    LAW,
    NON_LAW,
    REFUTED,
    REGISTRY,
    GeneratorConfig,
    Law,
    LawResult,
    generate_interpretation,
    generate_program,
    get_law,
    replay_witness,
    run_law,
    run_laws,
    serialize_witness,
)
from .semantics import (
    EquivalenceReport,
    all_interpretations,
    answer_sets,
    entails,
    entails_program,
    equivalent,
    flp_reduct,
    flp_reduct_algebraic,
    gl_reduct,
    gl_reduct_algebraic,
    is_answer_set,
    is_model,
    is_supported_model,
    least_model,
    left_reduct,
    restrict,
    right_reduct,
    se_models,
    strongly_equivalent,
    subsumption_equivalent,
    tp,
    tp_direct,
    uniformly_equivalent,
)
from .textio import (
    parse_interpretation,
    parse_literals,
    parse_permutation,
    parse_program,
    serialize_interpretation,
    serialize_permutation,
    serialize_program,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatchError",
    "AlphabetTooLargeError",
    "AspAlgebraError",
    "Classification",
    "EquivalenceReport",
    "GeneratorConfig",
    "HOLDS",
    "InternalMismatchError",
    "Interpretation",
    "LAW",
    "Law",
    "LawResult",
    "Literal",
    "NON_LAW",
    "NotBijectiveError",
    "NotHornError",
    "ParseError",
    "Program",
    "REFUTED",
    "REGISTRY",
    "ReservedAtomError",
    "Rule",
    "UndeclaredAtomError",
    "all_interpretations",
    "answer_sets",
    "compose",
    "compose_oracle",
    "cup",
    "entails",
    "entails_program",
    "equivalent",
    "flp_reduct",
    "flp_reduct_algebraic",
    "generate_interpretation",
    "generate_program",
    "get_law",
    "gl_reduct",
    "gl_reduct_algebraic",
    "is_answer_set",
    "is_model",
    "is_supported_model",
    "kleene_plus",
    "kleene_star",
    "least_model",
    "left_reduct",
    "negate_program",
    "omega",
    "ominus",
    "oplus",
    "or_transform",
    "parse_interpretation",
    "parse_literals",
    "parse_permutation",
    "parse_program",
    "permutation_program",
    "power",
    "replay_witness",
    "restrict",
    "right_reduct",
    "run_law",
    "run_laws",
    "se_models",
    "serialize_interpretation",
    "serialize_permutation",
    "serialize_program",
    "serialize_witness",
    "strongly_equivalent",
    "subsumption_equivalent",
    "tf_transform",
    "tp",
    "tp_direct",
    "uniformly_equivalent",
    "unit_program",
]
