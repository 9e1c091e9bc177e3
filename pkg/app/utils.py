"""Общие утилиты: форматирование чисел для отчётов и сценариев."""

from app.constants import REPORT_DIGITS


# --- Форматирование чисел ---


def round_real(value: float, digits: int = REPORT_DIGITS) -> float:
    """Округляет для отчёта и убирает «-0.0»."""
    rounded = round(float(value), digits)
    return rounded + 0.0


def complex_pair(value: complex) -> list[float]:
    """[re, im] для JSON-отчёта."""
    return [round_real(value.real), round_real(value.imag)]


def format_complex(value: complex, digits: int = REPORT_DIGITS) -> str:
    """Человекочитаемая амплитуда с округлением: 0.6, 0.8i, 0.6-0.8i."""
    real, imag = round_real(value.real, digits), round_real(value.imag, digits)
    return _join_complex(repr(real), repr(abs(imag)), real, imag)


def format_expression(value: complex) -> str:
    """Точная запись числа, которую разбор сценария вернёт без потерь."""
    value = complex(value)
    return _join_complex(repr(value.real), repr(abs(value.imag)), value.real, value.imag)


def _join_complex(real_text: str, imag_text: str, real: float, imag: float) -> str:
    if imag == 0:
        return real_text
    sign = "-" if imag < 0 else "+"
    if real == 0:
        return f"-{imag_text}i" if sign == "-" else f"{imag_text}i"
    return f"{real_text}{sign}{imag_text}i"


def format_amplitudes(pair: tuple[complex, complex]) -> str:
    a, b = pair
    return f"a={format_complex(a)} b={format_complex(b)}"


def format_frequency(count: int, total: int) -> float:
    return round_real(count / total)
