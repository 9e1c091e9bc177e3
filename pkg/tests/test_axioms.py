import math

from app.axioms import check_axioms
from app.formulas import ClassicalStatus, render_judgement
from app.quantum import make_basis
from app.rng import SeededSource


def test_both_axioms_on_random_qubits_and_bases():
    check = check_axioms(SeededSource(20260101), samples=20)
    assert check.passed
    assert render_judgement(check.basic, unicode=True) == "⊢ A & A⊥"
    assert render_judgement(check.liar, unicode=True) == "A⊥ ⊕ A ⊢"
    assert check.symmetric
    assert check.basic_derivation.derivable
    assert check.liar_derivation.derivable
    statuses = {render_judgement(j, unicode=True): s for j, s in check.statuses.items()}
    assert statuses == {
        "⊢ A & A⊥": ClassicalStatus.UNSATISFIABLE,
        "A⊥ ⊕ A ⊢": ClassicalStatus.UNSATISFIABLE,
        "⊢ A": ClassicalStatus.CONTINGENT,
        "⊢ A⊥": ClassicalStatus.CONTINGENT,
    }


def test_fixed_basis_and_rendering():
    check = check_axioms(SeededSource(3), basis=make_basis(math.pi / 4, 0.0, "Up"), samples=5)
    assert check.passed
    text = check.render()
    assert "axiom 1: ⊢ Up & Up⊥\n" in text
    assert "axiom 2: Up⊥ ⊕ Up ⊢\n" in text
    assert "dual(axiom 1) = axiom 2: yes\n" in text
    assert "no explosion (50 fresh atoms): yes\n" in text
    assert "axiom 1: |- Up & Up^\n" in check.render(unicode=False)
