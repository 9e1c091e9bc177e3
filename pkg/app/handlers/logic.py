"""Обработчики логических запросов: выводимость и классический статус."""

from app.constants import DIRECTIVE_CLASSICAL_STATUS, DIRECTIVE_DERIVE
from app.formulas import check_classical_status
from app.report import StepRecord


def register_logic_handlers(ctx) -> None:
    """Регистрирует директивы derive и classical-status."""

    @ctx.handler(DIRECTIVE_DERIVE)
    def handle_derive(index, step) -> StepRecord:
        # Запрос адресован наблюдателю последнего события
        observer = ctx.last_observer
        return StepRecord(
            index=index,
            directive=step.directive,
            judgement=step.judgement,
            line=step.line,
            observer=observer,
            derivation=ctx.derive(observer, step.judgement),
        )

    @ctx.handler(DIRECTIVE_CLASSICAL_STATUS)
    def handle_classical_status(index, step) -> StepRecord:
        return StepRecord(
            index=index,
            directive=step.directive,
            judgement=step.judgement,
            line=step.line,
            classical_status=check_classical_status(step.judgement),
        )
