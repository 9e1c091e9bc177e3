"""Регистрация обработчиков директив сценария."""

from app.handlers.logic import register_logic_handlers
from app.handlers.measurement import register_measurement_handlers


def register_all_handlers(ctx) -> None:
    """Регистрирует обработчики всех исполняемых директив с общим контекстом.

    Директива clone обработчика не получает: сценарий с ней
    не проходит статическую проверку.
    """
    register_measurement_handlers(ctx)
    register_logic_handlers(ctx)
