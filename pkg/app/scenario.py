"""Сценарии мысленных экспериментов: построчный формат, разбор, валидация, печать.

Формат (UTF-8, одна директива на строку, «#» начинает комментарий):

    seed <N>
    trials <N>
    qubit <a> <b> | qubit zero|one|plus|minus|plus-i|minus-i
    basis <γ> <φ> <atom>
    outsider-measure
    outsider-not-measure
    insider-basic [θ0 θ1]
    insider-liar [θ0 θ1]
    derive <judgement>
    classical-status <judgement | formula>

Числа записываются без пробелов: 0.6, 0.8i, 3+4i, sqrt(0.3), pi/4, exp(i*pi/3).
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from app.config import DEFAULT_SEED, DEFAULT_TRIALS
from app.constants import (
    COMMENT_PREFIX,
    CONSUMING_DIRECTIVES,
    DIRECTIVE_BASIS,
    DIRECTIVE_CLASSICAL_STATUS,
    DIRECTIVE_CLONE,
    DIRECTIVE_DERIVE,
    DIRECTIVE_INSIDER_BASIC,
    DIRECTIVE_INSIDER_LIAR,
    DIRECTIVE_OUTSIDER_MEASURE,
    DIRECTIVE_OUTSIDER_NOT_MEASURE,
    DIRECTIVE_QUBIT,
    DIRECTIVE_SEED,
    DIRECTIVE_TRIALS,
    EXPRESSION_CONSTANTS,
    NO_CLONING_TAG,
    QUBIT_DIRECTIVES,
    QUBIT_PRESETS,
    VALIDATION_TOLERANCE,
)
from app.errors import (
    FormulaSyntaxError,
    InvalidStateError,
    ScenarioError,
    ScenarioValidationError,
)
from app.formula_parser import parse_judgement, parse_judgement_or_formula
from app.formulas import Judgement, render_judgement
from app.quantum import COMPUTATIONAL_BASIS, Basis, Qubit, make_qubit, prepared_vector
from app.rng import validate_seed
from app.utils import format_expression

logger = logging.getLogger(__name__)

EXPRESSION_GRAMMAR = r"""
    ?start: sum

    ?sum: product
        | sum "+" product          -> add
        | sum "-" product          -> sub

    ?product: signed
            | product "*" signed   -> mul
            | product "/" signed   -> div

    ?signed: "-" signed            -> neg
           | "+" signed
           | primary

    ?primary: NUMBER               -> real
            | NUMBER "i"           -> imaginary
            | "i"                  -> unit_imaginary
            | CONSTANT             -> constant
            | "sqrt" "(" sum ")"   -> sqrt
            | "exp" "(" sum ")"    -> exp
            | "(" sum ")"

    CONSTANT: "pi"

    %import common.NUMBER
"""

_EXPRESSION_PARSER = Lark(EXPRESSION_GRAMMAR, parser="lalr")

# Шаги с необязательной парой фаз θ0 θ1
_PHASED_DIRECTIVES = frozenset({DIRECTIVE_INSIDER_BASIC, DIRECTIVE_INSIDER_LIAR})
_BARE_DIRECTIVES = frozenset({DIRECTIVE_OUTSIDER_MEASURE, DIRECTIVE_OUTSIDER_NOT_MEASURE})


class _ExpressionEvaluator(Transformer):
    def real(self, children) -> complex:
        return complex(float(children[0]))

    def imaginary(self, children) -> complex:
        return complex(0.0, float(children[0]))

    def unit_imaginary(self, _children) -> complex:
        return 1j

    def constant(self, children) -> complex:
        return complex(EXPRESSION_CONSTANTS[str(children[0])])

    def sqrt(self, children) -> complex:
        (value,) = children
        if value.imag == 0 and value.real >= 0:
            return complex(math.sqrt(value.real))
        return cmath.sqrt(value)

    def exp(self, children) -> complex:
        return cmath.exp(children[0])

    def neg(self, children) -> complex:
        return -children[0]

    def add(self, children) -> complex:
        return children[0] + children[1]

    def sub(self, children) -> complex:
        return children[0] - children[1]

    def mul(self, children) -> complex:
        return children[0] * children[1]

    def div(self, children) -> complex:
        numerator, denominator = children
        if denominator == 0:
            raise ZeroDivisionError("деление на ноль")
        return numerator / denominator


def parse_expression(text: str) -> complex:
    """Числовое выражение сценария → комплексное число."""
    try:
        tree = _EXPRESSION_PARSER.parse(text)
    except UnexpectedInput:
        raise ValueError(f"не удалось разобрать число «{text}»") from None
    try:
        value = _ExpressionEvaluator().transform(tree)
    except VisitError as exc:
        raise ValueError(f"«{text}»: {exc.orig_exc}") from None
    if isinstance(value, complex):
        return value
    return complex(value)


def parse_real_expression(text: str) -> float:
    """Вещественное выражение (углы, фазы)."""
    value = parse_expression(text)
    if abs(value.imag) > VALIDATION_TOLERANCE:
        raise ValueError(f"ожидалось вещественное число, получено «{text}»")
    return value.real


# --- Модель сценария ---


@dataclass(frozen=True)
class QubitSpec:
    """Описание приготовления кубита: копировать можно описание, но не состояние."""

    a: complex | None = None
    b: complex | None = None
    preset: str | None = None

    def __post_init__(self) -> None:
        if self.preset is not None:
            if self.preset not in QUBIT_PRESETS:
                raise InvalidStateError(f"неизвестный пресет кубита: {self.preset}")
        elif self.a is None or self.b is None:
            raise InvalidStateError("нужны обе амплитуды или пресет")
        # Проверка нормируемости: нулевой и бесконечный векторы отвергаются сразу
        make_qubit(*self.amplitudes())

    def amplitudes(self) -> tuple[complex, complex]:
        if self.preset is not None:
            a, b = QUBIT_PRESETS[self.preset]
            return complex(a), complex(b)
        return complex(self.a), complex(self.b)

    def build(self, frame: Basis) -> Qubit:
        """Новый кубит в системе координат сценария (для каждого испытания свой)."""
        return Qubit.prepared(prepared_vector(*self.amplitudes(), frame), frame)

    def render(self) -> str:
        if self.preset is not None:
            return f"{DIRECTIVE_QUBIT} {self.preset}"
        return f"{DIRECTIVE_QUBIT} {format_expression(self.a)} {format_expression(self.b)}"


@dataclass(frozen=True)
class Step:
    directive: str
    phases: tuple[float, float] | None = None
    judgement: Judgement | None = None
    line: int | None = field(default=None, compare=False)

    def render(self) -> str:
        if self.phases is not None:
            theta0, theta1 = self.phases
            return f"{self.directive} {format_expression(theta0)} {format_expression(theta1)}"
        if self.judgement is not None:
            return f"{self.directive} {render_judgement(self.judgement)}"
        return self.directive


@dataclass(frozen=True)
class Scenario:
    qubit: QubitSpec
    basis: Basis = COMPUTATIONAL_BASIS
    steps: tuple[Step, ...] = ()
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS


# --- Разбор ---


def _no_cloning(message: str, line: int | None) -> ScenarioValidationError:
    return ScenarioValidationError(f"{NO_CLONING_TAG}: {message}", line=line)


def _expression(text: str, line: int, real: bool = False):
    try:
        return parse_real_expression(text) if real else parse_expression(text)
    except ValueError as exc:
        raise ScenarioError(str(exc), line=line) from None


def _integer(text: str, line: int, what: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise ScenarioError(f"{what}: ожидалось целое число, получено «{text}»", line=line) from None


def parse_scenario(text: str) -> Scenario:
    """Разбирает и статически проверяет сценарий."""
    qubit: QubitSpec | None = None
    basis: Basis | None = None
    seed: int | None = None
    trials: int | None = None
    steps: list[Step] = []

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split(COMMENT_PREFIX, 1)[0].strip()
        if not line:
            continue
        directive, *tail = line.split(None, 1)
        rest = tail[0].strip() if tail else ""
        args = rest.split()

        if directive == DIRECTIVE_QUBIT:
            if qubit is not None:
                raise ScenarioError("директива qubit повторяется", line=line_number)
            try:
                if len(args) == 1:
                    qubit = QubitSpec(preset=args[0])
                elif len(args) == 2:
                    qubit = QubitSpec(
                        _expression(args[0], line_number), _expression(args[1], line_number),
                    )
                else:
                    raise ScenarioError("qubit: ожидались две амплитуды или пресет", line=line_number)
            except InvalidStateError as exc:
                raise ScenarioError(f"qubit: {exc}", line=line_number) from None

        elif directive == DIRECTIVE_BASIS:
            if basis is not None:
                raise ScenarioError("директива basis повторяется", line=line_number)
            if len(args) != 3:
                raise ScenarioError("basis: ожидались γ φ atom", line=line_number)
            try:
                basis = Basis(
                    _expression(args[0], line_number, real=True),
                    _expression(args[1], line_number, real=True),
                    args[2],
                )
            except InvalidStateError as exc:
                raise ScenarioError(f"basis: {exc}", line=line_number) from None

        elif directive == DIRECTIVE_SEED:
            if len(args) != 1:
                raise ScenarioError("seed: ожидалось одно число", line=line_number)
            try:
                seed = validate_seed(_integer(args[0], line_number, "seed"))
            except InvalidStateError as exc:
                raise ScenarioError(str(exc), line=line_number) from None

        elif directive == DIRECTIVE_TRIALS:
            if len(args) != 1:
                raise ScenarioError("trials: ожидалось одно число", line=line_number)
            trials = _integer(args[0], line_number, "trials")

        elif directive in _BARE_DIRECTIVES or directive == DIRECTIVE_CLONE:
            if args:
                raise ScenarioError(f"{directive}: лишние аргументы", line=line_number)
            steps.append(Step(directive, line=line_number))

        elif directive in _PHASED_DIRECTIVES:
            phases = None
            if len(args) == 2:
                phases = (
                    _expression(args[0], line_number, real=True),
                    _expression(args[1], line_number, real=True),
                )
            elif args:
                raise ScenarioError(f"{directive}: ожидались θ0 θ1 или ничего", line=line_number)
            steps.append(Step(directive, phases=phases, line=line_number))

        elif directive in (DIRECTIVE_DERIVE, DIRECTIVE_CLASSICAL_STATUS):
            if not rest:
                raise ScenarioError(f"{directive}: не указано суждение", line=line_number)
            reader = parse_judgement if directive == DIRECTIVE_DERIVE else parse_judgement_or_formula
            try:
                judgement = reader(rest)
            except FormulaSyntaxError as exc:
                raise ScenarioError(f"{directive}: {exc}", line=line_number) from None
            steps.append(Step(directive, judgement=judgement, line=line_number))

        else:
            raise ScenarioError(f"неизвестная директива «{directive}»", line=line_number)

    if qubit is None:
        raise ScenarioError("нет директивы qubit")

    scenario = Scenario(
        qubit=qubit,
        basis=basis if basis is not None else COMPUTATIONAL_BASIS,
        steps=tuple(steps),
        seed=seed if seed is not None else DEFAULT_SEED,
        trials=trials if trials is not None else DEFAULT_TRIALS,
    )
    validate_scenario(scenario)
    logger.debug("Сценарий разобран: %d шагов", len(scenario.steps))
    return scenario


def validate_scenario(scenario: Scenario) -> None:
    """Статические проверки: запрет клонирования и повторного использования кубита."""
    try:
        validate_seed(scenario.seed)
    except InvalidStateError as exc:
        raise ScenarioValidationError(str(exc)) from None
    if scenario.trials < 1:
        raise ScenarioValidationError(f"trials должно быть положительным, получено {scenario.trials}")

    consumed_by: Step | None = None
    for index, step in enumerate(scenario.steps, start=1):
        if step.directive == DIRECTIVE_CLONE:
            raise _no_cloning("неизвестное состояние кубита нельзя продублировать", step.line)
        if step.directive in QUBIT_DIRECTIVES and consumed_by is not None:
            where = f"строке {consumed_by.line}" if consumed_by.line is not None else "предыдущем шаге"
            raise _no_cloning(
                f"шаг {index} ({step.directive}) обращается к кубиту, уже поглощённому "
                f"стандартным измерением в {where}; второе измерение потребовало бы копии состояния",
                step.line,
            )
        if step.directive in CONSUMING_DIRECTIVES:
            consumed_by = step


def render_scenario(scenario: Scenario) -> str:
    """Каноническая запись: parse_scenario(render_scenario(s)) == s."""
    basis = scenario.basis
    lines = [
        f"{DIRECTIVE_SEED} {scenario.seed}",
        f"{DIRECTIVE_TRIALS} {scenario.trials}",
        scenario.qubit.render(),
        f"{DIRECTIVE_BASIS} {format_expression(basis.gamma)} {format_expression(basis.phi)} {basis.atom}",
    ]
    lines.extend(step.render() for step in scenario.steps)
    return "\n".join(lines) + "\n"
