"""Исключения симулятора: кубит, логика, сценарии."""

from app.constants import NO_CLONING_TAG


class SimulatorError(Exception):
    """Базовая ошибка симулятора."""


class InvalidStateError(SimulatorError, ValueError):
    """Недопустимое состояние, базис или гейт."""


class NumericDriftError(SimulatorError, ArithmeticError):
    """Нормировка «уплыла» после применения гейта."""


class NoCloningError(SimulatorError):
    """Нарушение контракта ресурса: кубит нельзя копировать или использовать повторно."""

    def __init__(self, message: str) -> None:
        super().__init__(f"{NO_CLONING_TAG}: {message}")


class ConsumedQubitError(NoCloningError):
    """Обращение к кубиту, уже поглощённому измерением или гейтом."""


class CloningError(NoCloningError):
    """Попытка продублировать неизвестное состояние."""


class FormulaSyntaxError(SimulatorError, ValueError):
    """Синтаксическая ошибка формулы или суждения."""

    def __init__(self, message: str, column: int | None = None, line: int | None = None) -> None:
        self.column = column
        self.line = line
        where = []
        if line is not None:
            where.append(f"строка {line}")
        if column is not None:
            where.append(f"позиция {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class AmbiguityError(FormulaSyntaxError):
    """& и (+) смешаны без скобок."""


class PolarityError(SimulatorError, ValueError):
    """Правило отражения получило суждение не той полярности."""


class ValuationError(SimulatorError, ValueError):
    """Оценка не определена на атоме формулы."""


class ContextError(SimulatorError, ValueError):
    """Набор аксиом нарушает инвариант контекста наблюдателя."""


class ScenarioError(SimulatorError):
    """Ошибка сценария (разбор, валидация, исполнение)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        prefix = f"строка {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ScenarioValidationError(ScenarioError):
    """Статическая проверка сценария не пройдена."""


class StepError(ScenarioError):
    """Ошибка на конкретном шаге сценария (индекс с 1)."""

    def __init__(self, step_index: int, cause: Exception, line: int | None = None) -> None:
        self.step_index = step_index
        self.cause = cause
        super().__init__(f"шаг {step_index}: {cause}", line=line)
