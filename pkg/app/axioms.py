"""Проверка двух аксиом внутреннего наблюдателя на случайных кубитах и базисах."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from app.bridge import insider_axioms, insider_basic_measure, insider_liar_measure
from app.config import AXIOM_CHECK_SAMPLES
from app.constants import FRESH_ATOM_COUNT, FRESH_ATOM_PREFIX, ROUNDTRIP_TOLERANCE
from app.derivation import Context, Derivation, NotDerivable, derive, verify_derivation
from app.formulas import (
    Atom,
    ClassicalStatus,
    DualAtom,
    Judgement,
    assertion,
    check_classical_status,
    dual_judgement,
    falsity,
    render_judgement,
)
from app.quantum import (
    Basis,
    adjoint,
    apply,
    basic_measurement_gate,
    liar_gate,
    random_basis,
    random_qubit,
)
from app.rng import SeededSource

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomCheck:
    seed: int
    samples: int
    fixed_basis: Basis | None
    basic: Judgement
    liar: Judgement
    basic_derivation: Derivation | NotDerivable
    liar_derivation: Derivation | NotDerivable
    consistent: bool
    symmetric: bool
    reversible: bool
    explosion_free: bool
    statuses: dict[Judgement, ClassicalStatus] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.consistent and self.symmetric and self.reversible and self.explosion_free

    def render(self, unicode: bool = True) -> str:
        def yes_no(flag: bool) -> str:
            return "yes" if flag else "no"

        lines = []
        for number, (judgement, derivation) in enumerate(
            ((self.basic, self.basic_derivation), (self.liar, self.liar_derivation)), start=1,
        ):
            lines.append(f"axiom {number}: {render_judgement(judgement, unicode)}")
            if derivation.derivable:
                lines.extend(f"  {line}" for line in derivation.render_lines(unicode))
            else:
                lines.append("  not derivable")
        lines.append(f"dual(axiom 1) = axiom 2: {yes_no(self.symmetric)}")
        lines.append("classical status:")
        for judgement, status in self.statuses.items():
            lines.append(f"  {render_judgement(judgement, unicode)}: {status.value}")
        lines.append(f"no explosion ({FRESH_ATOM_COUNT} fresh atoms): {yes_no(self.explosion_free)}")
        lines.append(f"reversible: {yes_no(self.reversible)}")
        lines.append(f"same axioms on every sample: {yes_no(self.consistent)}")
        basis = "fixed basis" if self.fixed_basis is not None else f"{self.samples} random bases"
        lines.append(f"samples: {self.samples} random qubits, {basis}, seed {self.seed}")
        return "\n".join(lines) + "\n"


def _fresh_atoms(taken: str) -> list[str]:
    names = [f"{FRESH_ATOM_PREFIX}{index}" for index in range(FRESH_ATOM_COUNT)]
    return [name for name in names if name != taken]


def _undo_matches(state, gate, before: tuple[complex, complex], basis: Basis) -> bool:
    """U†·(U·q) возвращает исходные амплитуды."""
    restored = apply(adjoint(gate), state)
    return bool(np.allclose(restored.amplitudes(basis), before, rtol=0.0, atol=ROUNDTRIP_TOLERANCE))


def check_axioms(
    source: SeededSource,
    basis: Basis | None = None,
    samples: int = AXIOM_CHECK_SAMPLES,
) -> AxiomCheck:
    """Выводит ⊢ A & A⊥ и A⊥ ⊕ A ⊢ из событий обратимых измерений.

    На каждом образце берётся случайный кубит и (если базис не задан)
    случайный базис. Вывод должен совпадать на всех образцах.
    """
    if samples < 1:
        raise ValueError(f"число образцов должно быть положительным, получено {samples}")

    seen_basic: set[Judgement] = set()
    seen_liar: set[Judgement] = set()
    verified = True
    reversible = True
    basic_result = liar_result = None

    for _ in range(samples):
        sample_basis = basis if basis is not None else random_basis(source)

        event, state, judgement = insider_basic_measure(random_qubit(source, sample_basis), sample_basis)
        context = Context.inside(*insider_axioms(event))
        derivation = derive(context, judgement)
        verified = verified and derivation.derivable and verify_derivation(context, derivation)
        reversible = reversible and _undo_matches(
            state, basic_measurement_gate(sample_basis), event.amplitudes_before, sample_basis,
        )
        seen_basic.add(judgement)
        basic_result = basic_result or (judgement, derivation)

        event, state, judgement = insider_liar_measure(random_qubit(source, sample_basis), sample_basis)
        context = Context.inside(*insider_axioms(event))
        derivation = derive(context, judgement)
        verified = verified and derivation.derivable and verify_derivation(context, derivation)
        reversible = reversible and _undo_matches(
            state, liar_gate(sample_basis), event.amplitudes_before, sample_basis,
        )
        seen_liar.add(judgement)
        liar_result = liar_result or (judgement, derivation)

    basic, basic_derivation = basic_result
    liar, liar_derivation = liar_result
    atom_name = basic.formula.left.name

    # Контекст с обеими аксиомами не выводит ничего о свежих атомах
    both = Context.inside(
        assertion(Atom(atom_name)), assertion(DualAtom(atom_name)),
        falsity(DualAtom(atom_name)), falsity(Atom(atom_name)),
    )
    explosion_free = all(
        not derive(both, goal).derivable
        for name in _fresh_atoms(atom_name)
        for goal in (assertion(Atom(name)), falsity(Atom(name)))
    )

    statuses = {
        judgement: check_classical_status(judgement)
        for judgement in (basic, liar, assertion(Atom(atom_name)), assertion(DualAtom(atom_name)))
    }
    check = AxiomCheck(
        seed=source.seed,
        samples=samples,
        fixed_basis=basis,
        basic=basic,
        liar=liar,
        basic_derivation=basic_derivation,
        liar_derivation=liar_derivation,
        consistent=verified and len(seen_basic) == 1 and len(seen_liar) == 1,
        symmetric=dual_judgement(basic) == liar,
        reversible=reversible,
        explosion_free=explosion_free,
        statuses=statuses,
    )
    logger.info("Проверка аксиом: %s", "пройдена" if check.passed else "не пройдена")
    return check
