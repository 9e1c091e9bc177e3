"""Обработчики измерений: внешний наблюдатель (стандартные) и внутренний (обратимые)."""

import logging

from app.bridge import (
    EventKind,
    insider_axioms,
    insider_basic_measure,
    insider_liar_measure,
    insider_pair,
    insider_transition,
    outcome_judgement,
    outsider_measure,
    outsider_not_measure,
)
from app.constants import (
    DEFAULT_PHASES,
    DIRECTIVE_INSIDER_BASIC,
    DIRECTIVE_INSIDER_LIAR,
    DIRECTIVE_OUTSIDER_MEASURE,
    DIRECTIVE_OUTSIDER_NOT_MEASURE,
)
from app.derivation import Observer
from app.formulas import check_classical_status
from app.quantum import measure_standard
from app.report import StepRecord

logger = logging.getLogger(__name__)


def register_measurement_handlers(ctx) -> None:
    """Регистрирует четыре директивы, работающие с кубитом."""

    def _record(index, step, observer, event, judgement) -> StepRecord:
        logger.debug("Шаг %d (%s): %s", index, step.directive, judgement)
        return StepRecord(
            index=index,
            directive=step.directive,
            judgement=judgement,
            line=step.line,
            observer=observer,
            event=event,
            derivation=ctx.derive(observer, judgement),
            classical_status=check_classical_status(judgement),
        )

    # ------------------------------------------------------------------
    # Внешний наблюдатель: кубит поглощается
    # ------------------------------------------------------------------

    def _outsider(index, step, kind, measure) -> StepRecord:
        if ctx.detailed:
            event, judgement = measure(ctx.take_qubit(), ctx.basis, ctx.source)
        else:
            # Тот же единственный розыгрыш исхода, но без записи события
            outcome, _collapsed = measure_standard(ctx.take_qubit(), ctx.basis, ctx.source)
            event, judgement = None, outcome_judgement(kind, ctx.basis, outcome.index)
        ctx.record_axioms(Observer.OUTSIDE, judgement)
        if event is None:
            return StepRecord(index, step.directive, judgement)
        return _record(index, step, Observer.OUTSIDE, event, judgement)

    @ctx.handler(DIRECTIVE_OUTSIDER_MEASURE)
    def handle_outsider_measure(index, step) -> StepRecord:
        return _outsider(index, step, EventKind.STANDARD_MEASUREMENT, outsider_measure)

    @ctx.handler(DIRECTIVE_OUTSIDER_NOT_MEASURE)
    def handle_outsider_not_measure(index, step) -> StepRecord:
        return _outsider(index, step, EventKind.NOT_AFTER_STANDARD, outsider_not_measure)

    # ------------------------------------------------------------------
    # Внутренний наблюдатель: суперпозиция сохраняется
    # ------------------------------------------------------------------

    def _insider(index, step, kind, measure) -> StepRecord:
        phases = step.phases if step.phases is not None else DEFAULT_PHASES
        if not ctx.detailed:
            ctx.qubit, judgement = insider_transition(kind, ctx.take_qubit(), ctx.basis, phases)
            ctx.record_axioms(Observer.INSIDE, *insider_pair(kind, ctx.basis))
            return StepRecord(index, step.directive, judgement)
        event, state, judgement = measure(ctx.take_qubit(), ctx.basis, phases)
        ctx.qubit = state
        ctx.record_axioms(Observer.INSIDE, *insider_axioms(event))
        return _record(index, step, Observer.INSIDE, event, judgement)

    @ctx.handler(DIRECTIVE_INSIDER_BASIC)
    def handle_insider_basic(index, step) -> StepRecord:
        return _insider(index, step, EventKind.BASIC_MEASUREMENT, insider_basic_measure)

    @ctx.handler(DIRECTIVE_INSIDER_LIAR)
    def handle_insider_liar(index, step) -> StepRecord:
        return _insider(index, step, EventKind.LIAR_MEASUREMENT, insider_liar_measure)
