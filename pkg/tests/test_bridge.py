import math

import pytest

from app.bridge import (
    EventKind,
    ObservationEvent,
    insider_axioms,
    insider_basic_measure,
    insider_liar_measure,
    insider_pair,
    insider_transition,
    outcome_judgement,
    outsider_measure,
    outsider_not_measure,
)
from app.derivation import Observer
from app.errors import ContextError, InvalidStateError
from app.formula_parser import parse_judgement
from app.formulas import dual_judgement, render_judgement
from app.quantum import (
    COMPUTATIONAL_BASIS,
    BasisIndex,
    born_probabilities,
    make_basis,
    make_qubit,
    random_basis,
    random_qubit,
)
from app.rng import SeededSource


def test_outsider_measure_on_eigenstate():
    qubit = make_qubit(1, 0)
    event, judgement = outsider_measure(qubit, COMPUTATIONAL_BASIS, SeededSource(5))
    assert judgement == parse_judgement("|- A")
    assert event.kind is EventKind.STANDARD_MEASUREMENT
    assert event.outcome.index is BasisIndex.FIRST
    assert event.seed == 5
    assert qubit.consumed


def test_outsider_not_measure_negates_the_outcome():
    event, judgement = outsider_not_measure(make_qubit(0, 1), COMPUTATIONAL_BASIS, SeededSource(5))
    assert event.outcome.index is BasisIndex.SECOND
    assert judgement == parse_judgement("A |-")
    event, judgement = outsider_not_measure(make_qubit(1, 0), COMPUTATIONAL_BASIS, SeededSource(5))
    assert judgement == parse_judgement("A^ |-")


def test_insider_basic_keeps_the_superposition():
    qubit = make_qubit(0.6, 0.8j)
    event, state, judgement = insider_basic_measure(qubit, COMPUTATIONAL_BASIS)
    assert render_judgement(judgement, unicode=True) == "⊢ A & A⊥"
    assert qubit.consumed
    assert state.amplitudes(COMPUTATIONAL_BASIS) == pytest.approx((0.6, 0.8j))
    assert event.resulting_state == pytest.approx((0.6, 0.8j))
    assert event.amplitudes_before == pytest.approx((0.6, 0.8j))
    assert event.kind.observer is Observer.INSIDE


def test_insider_liar_swaps_amplitudes():
    basis = make_basis(math.pi / 3, 0.5)
    _event, state, judgement = insider_liar_measure(make_qubit(0.6, 0.8j, frame=basis), basis)
    assert render_judgement(judgement, unicode=True) == "A⊥ ⊕ A ⊢"
    assert state.amplitudes(basis) == pytest.approx((0.8j, 0.6))


def test_insider_axiom_holds_for_eigenstates():
    _event, _state, judgement = insider_basic_measure(make_qubit(0, 1), COMPUTATIONAL_BASIS)
    assert judgement == parse_judgement("|- A & A^")


def test_insider_axioms_of_events():
    event, _state, _judgement = insider_basic_measure(make_qubit(1, 1), COMPUTATIONAL_BASIS)
    assert insider_axioms(event) == (parse_judgement("|- A"), parse_judgement("|- A^"))
    event, _state, _judgement = insider_liar_measure(make_qubit(1, 1), COMPUTATIONAL_BASIS)
    assert insider_axioms(event) == (parse_judgement("A^ |-"), parse_judgement("A |-"))
    with pytest.raises(ContextError):
        insider_pair(EventKind.STANDARD_MEASUREMENT, COMPUTATIONAL_BASIS)


def test_event_invariants():
    with pytest.raises(InvalidStateError):
        ObservationEvent(EventKind.STANDARD_MEASUREMENT, COMPUTATIONAL_BASIS, (1, 0))
    with pytest.raises(InvalidStateError):
        ObservationEvent(EventKind.BASIC_MEASUREMENT, COMPUTATIONAL_BASIS, (1, 0))


def test_event_serialization():
    event, _state, _judgement = insider_liar_measure(make_qubit(0.6, 0.8), COMPUTATIONAL_BASIS)
    data = event.to_dict()
    assert data["event"] == "LiarMeasurement"
    assert data["basis"] == {"gamma": 0.0, "phi": 0.0, "atom": "A"}
    assert data["state"] == [[0.8, 0.0], [0.6, 0.0]]
    assert data["phases"] == [0.0, 0.0]
    assert "outcome" not in data


def test_outsider_not_measure_is_the_dual_of_outsider_measure(source):
    for seed in range(50):
        basis = random_basis(source)
        a, b = random_qubit(source).amplitudes(COMPUTATIONAL_BASIS)
        _event, plain = outsider_measure(make_qubit(a, b, frame=basis), basis, SeededSource(seed))
        _event, negated = outsider_not_measure(make_qubit(a, b, frame=basis), basis, SeededSource(seed))
        assert negated == dual_judgement(plain)


def test_outsider_after_liar_sees_the_swapped_probabilities():
    basis = make_basis(math.pi / 5, 1.2)
    _event, state, _judgement = insider_liar_measure(make_qubit(0.6, 0.8j, frame=basis), basis, (0.4, -0.9))
    p_first, p_second = born_probabilities(state, basis)
    assert p_first == pytest.approx(0.64, abs=1e-12)
    assert p_second == pytest.approx(0.36, abs=1e-12)
    event, judgement = outsider_measure(state, basis, SeededSource(8))
    expected = 0.64 if event.outcome.index is BasisIndex.FIRST else 0.36
    assert event.outcome.probability == pytest.approx(expected, abs=1e-12)
    assert judgement == outcome_judgement(EventKind.STANDARD_MEASUREMENT, basis, event.outcome.index)


def test_liar_then_outsider_frequency_follows_the_second_amplitude():
    basis = make_basis(0.7, 0.3)
    source = SeededSource(21)
    trials = 10000
    asserted = 0
    for _ in range(trials):
        _event, state, _judgement = insider_liar_measure(make_qubit(0.6, 0.8, frame=basis), basis)
        _event, judgement = outsider_measure(state, basis, source)
        asserted += judgement == parse_judgement("|- A")
    assert abs(asserted / trials - 0.64) <= 4 * math.sqrt(0.64 * 0.36 / trials)


def test_insider_transition_matches_the_recorded_event():
    basis = make_basis(1.1, -0.4)
    event, state, judgement = insider_liar_measure(make_qubit(0.6, 0.8j, frame=basis), basis, (0.2, 0.5))
    fast_state, fast_judgement = insider_transition(
        EventKind.LIAR_MEASUREMENT, make_qubit(0.6, 0.8j, frame=basis), basis, (0.2, 0.5)
    )
    assert fast_judgement == judgement
    assert fast_state.amplitudes(basis) == pytest.approx(event.resulting_state)
    with pytest.raises(ContextError):
        insider_transition(EventKind.STANDARD_MEASUREMENT, make_qubit(1, 0), basis)
