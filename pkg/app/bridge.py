"""Мост: события измерения → логические суждения внешнего и внутреннего наблюдателя."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from app.constants import DEFAULT_PHASES
from app.derivation import Observer
from app.errors import ContextError, InvalidStateError
from app.formulas import (
    Atom,
    DualAtom,
    Formula,
    Judgement,
    assertion,
    falsity,
    reflect_conjunction,
    reflect_disjunction,
)
from app.quantum import (
    Basis,
    BasisIndex,
    Outcome,
    Qubit,
    apply,
    basic_measurement_gate,
    liar_gate,
    measure_standard,
)
from app.rng import SeededSource
from app.utils import complex_pair, round_real

logger = logging.getLogger(__name__)


class EventKind(Enum):
    STANDARD_MEASUREMENT = "StandardMeasurement"
    NOT_AFTER_STANDARD = "NotAfterStandard"
    BASIC_MEASUREMENT = "BasicMeasurement"
    LIAR_MEASUREMENT = "LiarMeasurement"

    @property
    def is_standard(self) -> bool:
        return self in (EventKind.STANDARD_MEASUREMENT, EventKind.NOT_AFTER_STANDARD)

    @property
    def observer(self) -> Observer:
        return Observer.OUTSIDE if self.is_standard else Observer.INSIDE


@dataclass(frozen=True)
class ObservationEvent:
    """Неизменяемая запись об измерении.

    Для обратимых измерений хранится снимок амплитуд результата,
    а не сам кубит: кубит расходуется, а событие можно
    свободно передавать между потоками и отчётами.
    """

    kind: EventKind
    basis: Basis
    amplitudes_before: tuple[complex, complex]
    outcome: Outcome | None = None
    resulting_state: tuple[complex, complex] | None = None
    seed: int | None = None
    phases: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if self.kind.is_standard:
            if self.outcome is None or self.resulting_state is not None or self.seed is None:
                raise InvalidStateError(f"{self.kind.value}: нужен исход и семя, без суперпозиции")
        elif self.outcome is not None or self.resulting_state is None:
            raise InvalidStateError(f"{self.kind.value}: нужно итоговое состояние, без исхода")

    def to_dict(self) -> dict:
        data = {
            "event": self.kind.value,
            "basis": self.basis.to_dict(),
            "amplitudesBefore": [complex_pair(value) for value in self.amplitudes_before],
        }
        if self.outcome is not None:
            outcome = self.outcome.to_dict()
            outcome["probability"] = round_real(outcome["probability"])
            data["outcome"] = outcome
        if self.resulting_state is not None:
            data["state"] = [complex_pair(value) for value in self.resulting_state]
        if self.seed is not None:
            data["seed"] = self.seed
        if self.phases is not None:
            data["phases"] = [round_real(phase) for phase in self.phases]
        return data


def label_formula(basis: Basis, index: BasisIndex) -> Formula:
    """A для первого вектора базиса, A⊥ для второго."""
    if index is BasisIndex.FIRST:
        return Atom(basis.atom)
    return DualAtom(basis.atom)


def outcome_judgement(kind: EventKind, basis: Basis, index: BasisIndex) -> Judgement:
    """Суждение внешнего наблюдателя по исходу: ⊢ A / ⊢ A⊥, после NOT: A⊥ ⊢ / A ⊢."""
    if kind is EventKind.STANDARD_MEASUREMENT:
        return assertion(label_formula(basis, index))
    if kind is EventKind.NOT_AFTER_STANDARD:
        return falsity(label_formula(basis, index.other))
    raise ContextError(f"событие {kind.value} не даёт суждения по исходу")


def outsider_measure(
    qubit: Qubit, basis: Basis, rng: SeededSource
) -> tuple[ObservationEvent, Judgement]:
    """Стандартное измерение: ⊢ A или ⊢ A⊥ по исходу; кубит поглощается."""
    before = qubit.amplitudes(basis)
    outcome, _collapsed = measure_standard(qubit, basis, rng)
    event = ObservationEvent(
        EventKind.STANDARD_MEASUREMENT, basis, before, outcome=outcome, seed=rng.seed,
    )
    return event, outcome_judgement(event.kind, basis, outcome.index)


def outsider_not_measure(
    qubit: Qubit, basis: Basis, rng: SeededSource
) -> tuple[ObservationEvent, Judgement]:
    """Стандартное измерение и классический NOT: исход A даёт A⊥ ⊢, исход A⊥ даёт A ⊢."""
    before = qubit.amplitudes(basis)
    outcome, _collapsed = measure_standard(qubit, basis, rng)
    event = ObservationEvent(
        EventKind.NOT_AFTER_STANDARD, basis, before, outcome=outcome, seed=rng.seed,
    )
    return event, outcome_judgement(event.kind, basis, outcome.index)


def insider_transition(
    kind: EventKind, qubit: Qubit, basis: Basis, phases: tuple[float, float] = DEFAULT_PHASES
) -> tuple[Qubit, Judgement]:
    """Гейт внутреннего наблюдателя и его суждение, без записи события."""
    if kind is EventKind.BASIC_MEASUREMENT:
        gate, reflect = basic_measurement_gate(basis, *phases), reflect_conjunction
    elif kind is EventKind.LIAR_MEASUREMENT:
        gate, reflect = liar_gate(basis, *phases), reflect_disjunction
    else:
        raise ContextError(f"событие {kind.value} не относится к внутреннему наблюдателю")
    state = apply(gate, qubit)
    return state, reflect(*insider_pair(kind, basis))


def _insider_measure(
    kind: EventKind, qubit: Qubit, basis: Basis, phases: tuple[float, float]
) -> tuple[ObservationEvent, Qubit, Judgement]:
    before = qubit.amplitudes(basis)
    state, judgement = insider_transition(kind, qubit, basis, phases)
    event = ObservationEvent(
        kind,
        basis,
        before,
        resulting_state=state.amplitudes(basis),
        phases=tuple(phases),
    )
    return event, state, judgement


def insider_basic_measure(
    qubit: Qubit, basis: Basis, phases: tuple[float, float] = DEFAULT_PHASES
) -> tuple[ObservationEvent, Qubit, Judgement]:
    """Обратимое измерение: суперпозиция сохраняется, суждение ⊢ A & A⊥.

    Аксиома выдаётся и для собственных состояний (a=0 или b=0);
    амплитуды до измерения остаются в событии.
    """
    return _insider_measure(EventKind.BASIC_MEASUREMENT, qubit, basis, phases)


def insider_liar_measure(
    qubit: Qubit, basis: Basis, phases: tuple[float, float] = DEFAULT_PHASES
) -> tuple[ObservationEvent, Qubit, Judgement]:
    """Лживое измерение: амплитуды меняются местами, суждение A⊥ ⊕ A ⊢."""
    return _insider_measure(EventKind.LIAR_MEASUREMENT, qubit, basis, phases)


def insider_pair(kind: EventKind, basis: Basis) -> tuple[Judgement, Judgement]:
    """Пара суждений, которую внутренний наблюдатель получает одновременно."""
    atom = Atom(basis.atom)
    dual = DualAtom(basis.atom)
    if kind is EventKind.BASIC_MEASUREMENT:
        return assertion(atom), assertion(dual)
    if kind is EventKind.LIAR_MEASUREMENT:
        return falsity(dual), falsity(atom)
    raise ContextError(f"событие {kind.value} не даёт пары суждений внутреннего наблюдателя")


def insider_axioms(event: ObservationEvent) -> tuple[Judgement, Judgement]:
    """Аксиомы, которые событие добавляет в контекст внутреннего наблюдателя."""
    return insider_pair(event.kind, event.basis)
