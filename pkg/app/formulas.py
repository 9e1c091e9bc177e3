"""Формулы и суждения: дуальность, отражение, печать, классическая оценка."""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Union

from app.constants import (
    ASCII_CONJ,
    ASCII_DISJ,
    ASCII_DUAL,
    ASCII_TURNSTILE,
    UNICODE_CONJ,
    UNICODE_DISJ,
    UNICODE_DUAL,
    UNICODE_TURNSTILE,
)
from app.errors import PolarityError, ValuationError


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class DualAtom:
    name: str


@dataclass(frozen=True)
class Conj:
    """Аддитивная конъюнкция &."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Disj:
    """Аддитивная дизъюнкция ⊕."""

    left: Formula
    right: Formula


# Дуальность стоит только на атомах (негативная нормальная форма)
Formula = Union[Atom, DualAtom, Conj, Disj]


class Polarity(Enum):
    ASSERTION = "assertion"  # ⊢ F
    FALSITY = "falsity"  # F ⊢


@dataclass(frozen=True)
class Judgement:
    polarity: Polarity
    formula: Formula

    def __str__(self) -> str:
        return render_judgement(self)


def assertion(formula: Formula) -> Judgement:
    return Judgement(Polarity.ASSERTION, formula)


def falsity(formula: Formula) -> Judgement:
    return Judgement(Polarity.FALSITY, formula)


# --- Дуальность ---


def dual_formula(formula: Formula) -> Formula:
    """Инволюция: A ↔ A⊥, & ↔ ⊕, порядок аргументов сохраняется.

    dual(A & A⊥) = A⊥ ⊕ A, ровно в том виде, в каком записывается
    вторая аксиома.
    """
    if isinstance(formula, Atom):
        return DualAtom(formula.name)
    if isinstance(formula, DualAtom):
        return Atom(formula.name)
    if isinstance(formula, Conj):
        return Disj(dual_formula(formula.left), dual_formula(formula.right))
    if isinstance(formula, Disj):
        return Conj(dual_formula(formula.left), dual_formula(formula.right))
    raise TypeError(f"не формула: {formula!r}")


def dual_judgement(judgement: Judgement) -> Judgement:
    """(⊢ F)⊥ ≡ F⊥ ⊢ и (F ⊢)⊥ ≡ ⊢ F⊥."""
    polarity = Polarity.FALSITY if judgement.polarity is Polarity.ASSERTION else Polarity.ASSERTION
    return Judgement(polarity, dual_formula(judgement.formula))


# --- Принцип отражения ---


def reflect_conjunction(first: Judgement, second: Judgement) -> Judgement:
    """⊢ A, ⊢ B  ⟹  ⊢ A & B (порядок посылок сохраняется)."""
    for judgement in (first, second):
        if judgement.polarity is not Polarity.ASSERTION:
            raise PolarityError(f"конъюнкция отражает только утверждения, получено {judgement}")
    return assertion(Conj(first.formula, second.formula))


def reflect_disjunction(first: Judgement, second: Judgement) -> Judgement:
    """A ⊢, B ⊢  ⟹  A ⊕ B ⊢ (порядок посылок сохраняется)."""
    for judgement in (first, second):
        if judgement.polarity is not Polarity.FALSITY:
            raise PolarityError(f"дизъюнкция отражает только суждения ложности, получено {judgement}")
    return falsity(Disj(first.formula, second.formula))


def unfold_judgement(judgement: Judgement) -> tuple[Judgement, Judgement]:
    """Обратное отражению: ⊢ A & B → (⊢ A, ⊢ B); A ⊕ B ⊢ → (A ⊢, B ⊢)."""
    formula = judgement.formula
    if judgement.polarity is Polarity.ASSERTION and isinstance(formula, Conj):
        return assertion(formula.left), assertion(formula.right)
    if judgement.polarity is Polarity.FALSITY and isinstance(formula, Disj):
        return falsity(formula.left), falsity(formula.right)
    raise PolarityError(f"суждение {judgement} не является отражённой парой")


# --- Печать ---


def _symbols(unicode: bool) -> tuple[str, str, str]:
    if unicode:
        return UNICODE_DUAL, UNICODE_CONJ, UNICODE_DISJ
    return ASCII_DUAL, ASCII_CONJ, ASCII_DISJ


def _needs_parens(child: Formula, parent: Formula, on_right: bool) -> bool:
    # Цепочки одной связки левоассоциативны
    if not isinstance(child, (Conj, Disj)):
        return False
    return on_right or type(child) is not type(parent)


def pretty_print(formula: Formula, unicode: bool = False) -> str:
    """Печать формулы; parse_formula(pretty_print(f)) == f."""
    dual, conj, disj = _symbols(unicode)
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, DualAtom):
        return f"{formula.name}{dual}"
    operator = conj if isinstance(formula, Conj) else disj
    parts = []
    for child, on_right in ((formula.left, False), (formula.right, True)):
        text = pretty_print(child, unicode)
        if _needs_parens(child, formula, on_right):
            text = f"({text})"
        parts.append(text)
    return f"{parts[0]} {operator} {parts[1]}"


@lru_cache(maxsize=1024)
def render_judgement(judgement: Judgement, unicode: bool = False) -> str:
    """«|- F» / «F |-» в ASCII, «⊢ F» / «F ⊢» в Unicode."""
    turnstile = UNICODE_TURNSTILE if unicode else ASCII_TURNSTILE
    body = pretty_print(judgement.formula, unicode)
    if judgement.polarity is Polarity.ASSERTION:
        return f"{turnstile} {body}"
    return f"{body} {turnstile}"


# --- Структура ---


def atoms(formula: Formula) -> frozenset[str]:
    if isinstance(formula, (Atom, DualAtom)):
        return frozenset({formula.name})
    return atoms(formula.left) | atoms(formula.right)


# --- Классический оракул ---


@dataclass(frozen=True)
class Valuation:
    """Классическое присваивание атом → {0, 1}."""

    assignment: Mapping[str, int]

    def __post_init__(self) -> None:
        for name, value in self.assignment.items():
            if value not in (0, 1):
                raise ValuationError(f"значение атома {name} должно быть 0 или 1, получено {value!r}")

    def value_of(self, name: str) -> int:
        try:
            return int(self.assignment[name])
        except KeyError:
            raise ValuationError(f"оценка не задана для атома {name}") from None


class ClassicalStatus(Enum):
    VALID = "ClassicallyValid"
    UNSATISFIABLE = "ClassicallyUnsatisfiable"
    CONTINGENT = "Contingent"


def classical_eval(formula: Formula, valuation: Valuation) -> int:
    """Таблица истинности: & как «и», ⊕ как «или», дуальный атом как отрицание."""
    if isinstance(formula, Atom):
        return valuation.value_of(formula.name)
    if isinstance(formula, DualAtom):
        return 1 - valuation.value_of(formula.name)
    left = classical_eval(formula.left, valuation)
    right = classical_eval(formula.right, valuation)
    if isinstance(formula, Conj):
        return left & right
    return left | right


@lru_cache(maxsize=1024)
def check_classical_status(judgement: Judgement) -> ClassicalStatus:
    """Полный перебор оценок.

    ⊢ F невыполнимо, если F ложна при всех оценках; F ⊢ (опровержение)
    невыполнимо, если F истинна при всех оценках.
    """
    names = sorted(atoms(judgement.formula))
    values = {
        classical_eval(judgement.formula, Valuation(dict(zip(names, bits))))
        for bits in itertools.product((0, 1), repeat=len(names))
    }
    holds_always = 1 if judgement.polarity is Polarity.ASSERTION else 0
    if values == {holds_always}:
        return ClassicalStatus.VALID
    if values == {1 - holds_always}:
        return ClassicalStatus.UNSATISFIABLE
    return ClassicalStatus.CONTINGENT
