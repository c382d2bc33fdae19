"""Model-theoretic side of the algebra.

Entailment, the one-step consequence operator, the four reducts (left,
right/FLP, Gelfond-Lifschitz, and the restriction), least models of Horn
programs, answer sets, and the equivalence notions up to strong equivalence.

Everything that can be computed both directly and through composition is
computed both ways; a disagreement raises InternalMismatchError instead of
silently picking a side.  The direct one-step operator `tp_direct` is the
semantic ground truth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .compose import compose, cup, kleene_star, kleene_plus, ominus, omega
from .core import (
    Alphabet,
    Interpretation,
    Program,
    Rule,
    require_same_alphabet,
    unit_program,
)
from .errors import (
    AlphabetTooLargeError,
    InternalMismatchError,
    NotHornError,
)

#: Default cap on alphabet size for operations enumerating all interpretations.
DEFAULT_MAX_ATOMS = 20


def entails(interpretation: Interpretation, rule: Rule) -> bool:
    """Classical satisfaction: body satisfied implies head in the model."""
    atoms = interpretation.atoms
    return (
        rule.head in atoms
        or not rule.pos_body <= atoms
        or bool(rule.neg_body & atoms)
    )


def entails_body(interpretation: Interpretation, rule: Rule) -> bool:
    atoms = interpretation.atoms
    return rule.pos_body <= atoms and not rule.neg_body & atoms


def entails_program(interpretation: Interpretation, program: Program) -> bool:
    require_same_alphabet(interpretation, program)
    return all(entails(interpretation, r) for r in program.rules)


def tp_direct(program: Program, interpretation: Interpretation) -> Interpretation:
    """Heads of the rules whose bodies the interpretation satisfies."""
    require_same_alphabet(program, interpretation)
    return Interpretation(
        program.alphabet,
        frozenset(
            r.head for r in program.rules if entails_body(interpretation, r)
        ),
    )


def tp(program: Program, interpretation: Interpretation) -> Interpretation:
    """One-step consequences via composition, checked against `tp_direct`."""
    composed = compose(program, interpretation.to_program())
    result = Interpretation(program.alphabet, composed.fact_atoms())
    direct = tp_direct(program, interpretation)
    if result != direct:
        raise InternalMismatchError(
            f"composition route gave {result} but the direct operator gave {direct}"
        )
    return result


# -- reducts ----------------------------------------------------------------


def left_reduct(program: Program, interpretation: Interpretation) -> Program:
    """Keep the rules whose head the interpretation satisfies."""
    require_same_alphabet(program, interpretation)
    return Program(
        program.alphabet,
        frozenset(r for r in program.rules if r.head in interpretation),
    )


def right_reduct(program: Program, interpretation: Interpretation) -> Program:
    """Keep the rules whose body the interpretation satisfies (the FLP reduct)."""
    require_same_alphabet(program, interpretation)
    return Program(
        program.alphabet,
        frozenset(r for r in program.rules if entails_body(interpretation, r)),
    )


flp_reduct = right_reduct


def gl_reduct(program: Program, interpretation: Interpretation) -> Program:
    """Gelfond-Lifschitz reduct: drop rules blocked by the interpretation,
    strip the negative literals from the rest."""
    require_same_alphabet(program, interpretation)
    return Program(
        program.alphabet,
        frozenset(
            r.positive_part()
            for r in program.rules
            if not r.neg_body & interpretation.atoms
        ),
    )


def restrict(program: Program, interpretation: Interpretation) -> Program:
    """Rules whose head and body are both over the interpretation.

    Computed as left-after-right and right-after-left reducts, which must
    agree.
    """
    one = left_reduct(right_reduct(program, interpretation), interpretation)
    other = right_reduct(left_reduct(program, interpretation), interpretation)
    if one != other:
        raise InternalMismatchError(
            f"reduct orders disagree on restriction: {one} vs {other}"
        )
    return one


def _singleton(program: Program, rule: Rule) -> Program:
    return Program(program.alphabet, frozenset({rule}))


def _unit_on(alphabet: Alphabet, atoms: frozenset[str]) -> Program:
    return Program(alphabet, frozenset(Rule(a, frozenset({a})) for a in atoms))


def gl_reduct_algebraic(program: Program, interpretation: Interpretation) -> Program:
    """GL reduct through the algebra: union over rules of
    `{positive part} cup ({negative part} . I)`, checked against the direct
    reduct."""
    require_same_alphabet(program, interpretation)
    facts = interpretation.to_program()
    rules: set[Rule] = set()
    for rule in program.rules:
        piece = cup(
            _singleton(program, rule.positive_part()),
            compose(_singleton(program, rule.negative_part()), facts),
        )
        rules |= piece.rules
    result = Program(program.alphabet, frozenset(rules))
    direct = gl_reduct(program, interpretation)
    if result != direct:
        raise InternalMismatchError(
            f"algebraic GL reduct {result} differs from direct {direct}"
        )
    return result


def flp_reduct_algebraic(program: Program, interpretation: Interpretation) -> Program:
    """FLP reduct through the algebra: union over rules of
    `({positive part} . 1_I) cup ({negative part} . I^-)`, checked against
    the direct reduct.

    `1_I` keeps a positive part exactly when its body holds in I, and
    composing a negative part with the remover `I^-` keeps it, literals
    intact, exactly when none of its atoms lies in I.
    """
    require_same_alphabet(program, interpretation)
    unit_i = _unit_on(program.alphabet, interpretation.atoms)
    remover = ominus(interpretation)
    rules: set[Rule] = set()
    for rule in program.rules:
        piece = cup(
            compose(_singleton(program, rule.positive_part()), unit_i),
            compose(_singleton(program, rule.negative_part()), remover),
        )
        rules |= piece.rules
    result = Program(program.alphabet, frozenset(rules))
    direct = right_reduct(program, interpretation)
    if result != direct:
        raise InternalMismatchError(
            f"algebraic FLP reduct {result} differs from direct {direct}"
        )
    return result


# -- models and fixpoints -----------------------------------------------------


def is_model(program: Program, interpretation: Interpretation) -> bool:
    """True when composing with the interpretation stays inside it."""
    composed = compose(program, interpretation.to_program()).fact_atoms()
    via_compose = composed <= interpretation.atoms
    via_tp = tp_direct(program, interpretation).atoms <= interpretation.atoms
    if via_compose != via_tp:
        raise InternalMismatchError(
            f"model checks disagree on {interpretation}: "
            f"composition {via_compose}, direct operator {via_tp}"
        )
    return via_compose


def is_supported_model(program: Program, interpretation: Interpretation) -> bool:
    """True when the interpretation is a fixpoint of the consequence operator."""
    composed = compose(program, interpretation.to_program()).fact_atoms()
    via_compose = composed == interpretation.atoms
    via_tp = tp_direct(program, interpretation).atoms == interpretation.atoms
    if via_compose != via_tp:
        raise InternalMismatchError(
            f"supportedness checks disagree on {interpretation}: "
            f"composition {via_compose}, direct operator {via_tp}"
        )
    return via_compose


def _lfp_by_iteration(horn: Program) -> Interpretation:
    current = Interpretation(horn.alphabet)
    while True:
        step = tp_direct(horn, current)
        if step == current:
            return current
        current = step


def least_model(horn: Program) -> Interpretation:
    """Least model of a Horn program, via omega and via fixpoint iteration."""
    if not horn.is_horn:
        raise NotHornError("least models are defined for Horn programs only")
    via_omega = omega(horn)
    via_iteration = _lfp_by_iteration(horn)
    if via_omega != via_iteration:
        raise InternalMismatchError(
            f"omega gave {via_omega} but fixpoint iteration gave {via_iteration}"
        )
    return via_omega


def all_interpretations(alphabet: Alphabet) -> Iterator[Interpretation]:
    """Every subset of the alphabet, in canonical (sorted-tuple) order."""
    atoms = alphabet.atoms

    def rec(prefix: list[str], start: int) -> Iterator[Interpretation]:
        yield Interpretation(alphabet, frozenset(prefix))
        for idx in range(start, len(atoms)):
            prefix.append(atoms[idx])
            yield from rec(prefix, idx + 1)
            prefix.pop()

    yield from rec([], 0)


def _check_enumeration_bound(alphabet: Alphabet, max_atoms: int) -> None:
    if len(alphabet) > max_atoms:
        raise AlphabetTooLargeError(len(alphabet), max_atoms)


def is_answer_set(program: Program, interpretation: Interpretation) -> bool:
    """True when the interpretation is the least model of its GL reduct.

    `least_model` itself recomputes the least model along two routes, so the
    omega characterization and the definitional fixpoint test stay coupled.
    """
    reduct = gl_reduct(program, interpretation)
    return least_model(reduct) == interpretation


def answer_sets(
    program: Program, max_atoms: int = DEFAULT_MAX_ATOMS
) -> tuple[Interpretation, ...]:
    """All answer sets, in the canonical interpretation order."""
    _check_enumeration_bound(program.alphabet, max_atoms)
    return tuple(
        i for i in all_interpretations(program.alphabet) if is_answer_set(program, i)
    )


# -- equivalences -------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    """Verdict of an equivalence check, with a distinguishing context if any.

    For a negative verdict, `context` is a program such that the two operands
    joined with it have different answer sets, and the two answer-set tuples
    are recorded.  Ordinary equivalence reports use the empty context.
    """

    equivalent: bool
    context: Program | None = None
    left_answer_sets: tuple[Interpretation, ...] = ()
    right_answer_sets: tuple[Interpretation, ...] = ()


def equivalent(
    left: Program, right: Program, max_atoms: int = DEFAULT_MAX_ATOMS
) -> bool:
    """Ordinary equivalence: the same answer sets."""
    require_same_alphabet(left, right)
    return answer_sets(left, max_atoms) == answer_sets(right, max_atoms)


def subsumption_equivalent(
    left: Program, right: Program, max_atoms: int = DEFAULT_MAX_ATOMS
) -> bool:
    """Equal one-step consequences on every interpretation."""
    require_same_alphabet(left, right)
    _check_enumeration_bound(left.alphabet, max_atoms)
    for i in all_interpretations(left.alphabet):
        facts = i.to_program()
        if compose(left, facts) != compose(right, facts):
            return False
    return True


def _answer_sets_union(
    program: Program, context: Program, max_atoms: int
) -> tuple[Interpretation, ...]:
    return answer_sets(program.union(context), max_atoms)


def uniformly_equivalent(
    left: Program, right: Program, max_atoms: int = DEFAULT_MAX_ATOMS
) -> EquivalenceReport:
    """Same answer sets under every fact context.

    Each context J is applied along two routes, `star(J) . P` and `P u J`,
    which must agree; their divergence would be an internal error.
    """
    require_same_alphabet(left, right)
    _check_enumeration_bound(left.alphabet, max_atoms)
    for j in all_interpretations(left.alphabet):
        context = j.to_program()
        star_ctx = kleene_star(context)
        sides = []
        for program in (left, right):
            via_star = answer_sets(compose(star_ctx, program), max_atoms)
            via_union = _answer_sets_union(program, context, max_atoms)
            if via_star != via_union:
                raise InternalMismatchError(
                    f"context routes disagree under {j}: star gave "
                    f"{via_star}, union gave {via_union}"
                )
            sides.append(via_star)
        if sides[0] != sides[1]:
            return EquivalenceReport(False, context, sides[0], sides[1])
    return EquivalenceReport(True)


SEModel = tuple[frozenset[str], frozenset[str]]


def se_models(program: Program, max_atoms: int = DEFAULT_MAX_ATOMS) -> frozenset[SEModel]:
    """All pairs (X, Y) with X <= Y, Y a model, and X a model of the GL reduct."""
    _check_enumeration_bound(program.alphabet, max_atoms)
    out: set[SEModel] = set()
    for y in all_interpretations(program.alphabet):
        if not entails_program(y, program):
            continue
        reduct = gl_reduct(program, y)
        y_atoms = sorted(y.atoms)
        for size in range(len(y_atoms) + 1):
            for picked in combinations(y_atoms, size):
                x = Interpretation(program.alphabet, frozenset(picked))
                if entails_program(x, reduct):
                    out.add((x.atoms, y.atoms))
    return frozenset(out)


def _sample_context(alphabet: Alphabet, rng: random.Random) -> Program:
    atoms = alphabet.atoms
    rules: set[Rule] = set()
    for _ in range(rng.randint(0, 4)):
        pos: set[str] = set()
        neg: set[str] = set()
        for _ in range(rng.randint(0, 2)):
            (neg if rng.random() < 0.5 else pos).add(rng.choice(atoms))
        rules.add(Rule(rng.choice(atoms), frozenset(pos), frozenset(neg)))
    return Program(alphabet, frozenset(rules))


def _distinguishing_report(
    left: Program, right: Program, context: Program, max_atoms: int
) -> EquivalenceReport | None:
    left_as = _answer_sets_union(left, context, max_atoms)
    right_as = _answer_sets_union(right, context, max_atoms)
    if left_as != right_as:
        return EquivalenceReport(False, context, left_as, right_as)
    return None


def strongly_equivalent(
    left: Program,
    right: Program,
    max_atoms: int = DEFAULT_MAX_ATOMS,
    context_samples: int = 24,
) -> EquivalenceReport:
    """Same answer sets under every program context.

    Decided by comparing the sets of SE-models.  A positive verdict is
    additionally exercised on sampled contexts, which must never distinguish
    the programs; a negative verdict always carries a concrete verified
    distinguishing context (facts where possible, otherwise a chain context
    built from a differing SE-model).
    """
    require_same_alphabet(left, right)
    _check_enumeration_bound(left.alphabet, max_atoms)
    alphabet = left.alphabet
    se_left = se_models(left, max_atoms)
    se_right = se_models(right, max_atoms)
    if se_left == se_right:
        rng = random.Random(0x5E0)
        for _ in range(context_samples):
            context = _sample_context(alphabet, rng)
            report = _distinguishing_report(left, right, context, max_atoms)
            if report is not None:
                raise InternalMismatchError(
                    f"SE-models agree but context {context} distinguishes "
                    f"the programs"
                )
        return EquivalenceReport(True)

    # Classical-model difference: the facts of the differing model do it.
    for y in all_interpretations(alphabet):
        if entails_program(y, left) != entails_program(y, right):
            report = _distinguishing_report(left, right, y.to_program(), max_atoms)
            if report is not None:
                return report

    # Otherwise a differing pair (X, Y) with X < Y yields a context from X
    # as facts plus a clique of chain rules over Y - X.
    for x_atoms, y_atoms in sorted(se_left ^ se_right, key=lambda p: (sorted(p[1]), sorted(p[0]))):
        gap = sorted(y_atoms - x_atoms)
        rules = {Rule.fact(a) for a in x_atoms}
        rules |= {
            Rule(a, frozenset({b})) for a in gap for b in gap if a != b
        }
        context = Program(alphabet, frozenset(rules))
        report = _distinguishing_report(left, right, context, max_atoms)
        if report is not None:
            return report
    raise InternalMismatchError(
        "SE-models differ but no distinguishing context was found"
    )
