"""Разбор формул и суждений (lark, LALR).

Грамматика: атомы записываются идентификаторами, постфиксный «^» (или «⊥») обозначает дуальность;
инфиксные «&» и «(+)» (или «⊕») одного приоритета, левоассоциативны;
смешивать их без скобок нельзя. Суждения: «|- F», «F |-», «⊢ F», «F ⊢».
"""

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from app.constants import ASCII_CONJ, ATOM_NAME_PATTERN, UNICODE_CONJ
from app.errors import AmbiguityError, FormulaSyntaxError, SimulatorError
from app.formulas import (
    Atom,
    Conj,
    Disj,
    Formula,
    Judgement,
    assertion,
    dual_formula,
    falsity,
)

FORMULA_GRAMMAR = r"""
    judgement: TURNSTILE formula   -> assertion
             | formula TURNSTILE   -> falsity

    formula: unit (CONNECTIVE unit)*
    unit: primary DUAL*
    ?primary: NAME                 -> atom
            | "(" formula ")"

    TURNSTILE: "|-" | "⊢"
    CONNECTIVE: "&" | "(+)" | "⊕"
    DUAL: "^" | "⊥"
    NAME: /{atom_name}/

    %import common.WS
    %ignore WS
"""

_PARSER = Lark(
    FORMULA_GRAMMAR.format(atom_name=ATOM_NAME_PATTERN),
    start=["formula", "judgement"],
    parser="lalr",
)


class _FormulaBuilder(Transformer):
    """Переводит дерево lark в Formula/Judgement, проталкивая дуальность к атомам."""

    def atom(self, children: list[Token]) -> Formula:
        (name,) = children
        return Atom(str(name))

    def unit(self, children: list) -> Formula:
        formula, *duals = children
        for _ in duals:
            formula = dual_formula(formula)
        return formula

    def formula(self, children: list) -> Formula:
        result = children[0]
        connective = None
        for index in range(1, len(children), 2):
            operator, operand = children[index], children[index + 1]
            current = Conj if str(operator) in (ASCII_CONJ, UNICODE_CONJ) else Disj
            if connective is not None and current is not connective:
                raise AmbiguityError(
                    "связки & и (+) смешаны без скобок",
                    column=operator.column,
                )
            connective = current
            result = current(result, operand)
        return result

    def assertion(self, children: list) -> Judgement:
        return assertion(children[1])

    def falsity(self, children: list) -> Judgement:
        return falsity(children[0])


def _error_column(exc: UnexpectedInput, text: str) -> int:
    """Позиция ошибки; обрыв ввода указывает за последний символ."""
    at_end = isinstance(exc, UnexpectedEOF) or (
        isinstance(exc, UnexpectedToken) and exc.token.type == "$END"
    )
    if at_end or not isinstance(exc.column, int) or exc.column < 1:
        return len(text) + 1
    return exc.column


def _parse(text: str, start: str):
    try:
        tree = _PARSER.parse(text, start=start)
    except UnexpectedInput as exc:
        column = _error_column(exc, text)
        raise FormulaSyntaxError(f"не удалось разобрать «{text}»", column=column) from None
    try:
        return _FormulaBuilder().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, SimulatorError):
            raise exc.orig_exc from None
        raise


def parse_formula(text: str) -> Formula:
    """«A & A^» → Conj(Atom A, DualAtom A)."""
    return _parse(text, "formula")


def parse_judgement(text: str) -> Judgement:
    """«|- A & A^» → утверждение, «A^ (+) A |-» → суждение ложности."""
    return _parse(text, "judgement")


def parse_judgement_or_formula(text: str) -> Judgement:
    """Суждение, а голая формула F читается как утверждение ⊢ F."""
    try:
        return parse_judgement(text)
    except AmbiguityError:
        raise
    except FormulaSyntaxError:
        return assertion(parse_formula(text))
