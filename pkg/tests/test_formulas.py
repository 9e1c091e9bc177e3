import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.errors import AmbiguityError, FormulaSyntaxError, PolarityError, ValuationError
from app.formula_parser import parse_formula, parse_judgement, parse_judgement_or_formula
from app.formulas import (
    Atom,
    ClassicalStatus,
    Conj,
    Disj,
    DualAtom,
    Valuation,
    assertion,
    atoms,
    check_classical_status,
    classical_eval,
    dual_formula,
    dual_judgement,
    falsity,
    pretty_print,
    reflect_conjunction,
    reflect_disjunction,
    render_judgement,
    unfold_judgement,
)

A, A_DUAL = Atom("A"), DualAtom("A")
AXIOM_BASIC = assertion(Conj(A, A_DUAL))
AXIOM_LIAR = falsity(Disj(A_DUAL, A))

names = st.sampled_from(["A", "B", "C", "x1"])
literals = st.one_of(names.map(Atom), names.map(DualAtom))
formulas = st.recursive(
    literals,
    lambda children: st.one_of(st.builds(Conj, children, children), st.builds(Disj, children, children)),
    max_leaves=10,
)
judgements = st.builds(lambda f, positive: assertion(f) if positive else falsity(f), formulas, st.booleans())


# --- Разбор и печать ---


def test_parse_axioms_in_both_notations():
    assert parse_judgement("|- A & A^") == AXIOM_BASIC
    assert parse_judgement("⊢ A & A⊥") == AXIOM_BASIC
    assert parse_judgement("A^ (+) A |-") == AXIOM_LIAR
    assert parse_judgement("A⊥ ⊕ A ⊢") == AXIOM_LIAR


def test_render_axioms():
    assert render_judgement(AXIOM_BASIC) == "|- A & A^"
    assert render_judgement(AXIOM_BASIC, unicode=True) == "⊢ A & A⊥"
    assert render_judgement(AXIOM_LIAR) == "A^ (+) A |-"
    assert render_judgement(AXIOM_LIAR, unicode=True) == "A⊥ ⊕ A ⊢"
    assert str(AXIOM_BASIC) == "|- A & A^"


def test_dual_is_pushed_to_atoms():
    assert parse_formula("A^^") == A
    assert parse_formula("(A & B)^") == Disj(A_DUAL, DualAtom("B"))


def test_mixed_connectives_need_parentheses():
    with pytest.raises(AmbiguityError) as info:
        parse_formula("A & B (+) C")
    assert info.value.column == 7
    assert parse_formula("(A & B) (+) C") == Disj(Conj(A, Atom("B")), Atom("C"))


@pytest.mark.parametrize("text", ["A &", "& A", "|- A |-", "A B", ""])
def test_syntax_errors_carry_a_column(text):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_judgement(text)
    assert isinstance(info.value.column, int)


@pytest.mark.parametrize("text", ["A (+)", "|- A &", "(A"])
def test_truncated_input_points_past_the_end(text):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_judgement(text)
    assert info.value.column == len(text) + 1


def test_bare_formula_reads_as_assertion():
    assert parse_judgement_or_formula("A & A^") == AXIOM_BASIC
    assert parse_judgement_or_formula("A^ (+) A |-") == AXIOM_LIAR


@pytest.mark.parametrize(
    "formula, expected",
    [
        (Conj(Conj(A, Atom("B")), Atom("C")), "A & B & C"),
        (Conj(A, Conj(Atom("B"), Atom("C"))), "A & (B & C)"),
        (Conj(Disj(A, Atom("B")), Atom("C")), "(A (+) B) & C"),
    ],
)
def test_pretty_print_parenthesizes(formula, expected):
    assert pretty_print(formula) == expected


@settings(max_examples=300)
@given(formulas, st.booleans())
def test_pretty_print_parses_back(formula, unicode):
    assert parse_formula(pretty_print(formula, unicode)) == formula


@settings(max_examples=300)
@given(judgements)
def test_render_judgement_parses_back(judgement):
    assert parse_judgement(render_judgement(judgement)) == judgement


# --- Дуальность и отражение ---


@settings(max_examples=1000)
@given(formulas)
def test_dual_formula_is_an_involution(formula):
    assert dual_formula(dual_formula(formula)) == formula
    assert atoms(dual_formula(formula)) == atoms(formula)


@settings(max_examples=1000)
@given(judgements)
def test_dual_judgement_is_an_involution(judgement):
    assert dual_judgement(dual_judgement(judgement)) == judgement
    assert dual_judgement(judgement).polarity is not judgement.polarity


def test_second_axiom_is_the_dual_of_the_first():
    assert dual_judgement(AXIOM_BASIC) == AXIOM_LIAR


def test_reflection_builds_the_axioms():
    assert reflect_conjunction(assertion(A), assertion(A_DUAL)) == AXIOM_BASIC
    assert reflect_disjunction(falsity(A_DUAL), falsity(A)) == AXIOM_LIAR


def test_reflection_checks_polarity():
    with pytest.raises(PolarityError):
        reflect_conjunction(assertion(A), falsity(A_DUAL))
    with pytest.raises(PolarityError):
        reflect_disjunction(assertion(A), falsity(A))


@settings(max_examples=200)
@given(formulas, formulas)
def test_unfold_inverts_reflection(left, right):
    pair = (assertion(left), assertion(right))
    assert unfold_judgement(reflect_conjunction(*pair)) == pair
    pair = (falsity(left), falsity(right))
    assert unfold_judgement(reflect_disjunction(*pair)) == pair


def test_unfold_rejects_atoms():
    with pytest.raises(PolarityError):
        unfold_judgement(assertion(A))


# --- Классический оракул ---


@pytest.mark.parametrize(
    "text, expected",
    [
        ("|- A & A^", ClassicalStatus.UNSATISFIABLE),
        ("A^ (+) A |-", ClassicalStatus.UNSATISFIABLE),
        ("|- A", ClassicalStatus.CONTINGENT),
        ("|- A^", ClassicalStatus.CONTINGENT),
        ("|- A (+) A^", ClassicalStatus.VALID),
        ("A & A^ |-", ClassicalStatus.VALID),
        ("|- A & B", ClassicalStatus.CONTINGENT),
    ],
)
def test_classical_status(text, expected):
    assert check_classical_status(parse_judgement(text)) is expected


def test_classical_eval_truth_tables():
    valuation = Valuation({"A": 1, "B": 0})
    assert classical_eval(A, valuation) == 1
    assert classical_eval(A_DUAL, valuation) == 0
    assert classical_eval(Conj(A, Atom("B")), valuation) == 0
    assert classical_eval(Disj(A, Atom("B")), valuation) == 1


def test_valuation_errors():
    with pytest.raises(ValuationError):
        Valuation({"A": 2})
    with pytest.raises(ValuationError):
        classical_eval(Atom("Z"), Valuation({"A": 1}))
