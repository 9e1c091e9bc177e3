"""Контексты наблюдателей и минимальный движок выводов.

Правил ровно четыре: использование аксиомы, отражение в &, отражение в ⊕
и дуализация. Ослабления и ex falso нет, поэтому противоречивые аксиомы
внутреннего наблюдателя не выводят произвольных суждений.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from app.errors import ContextError, PolarityError
from app.formulas import (
    Atom,
    Conj,
    DualAtom,
    Disj,
    Judgement,
    Polarity,
    assertion,
    dual_formula,
    dual_judgement,
    falsity,
    reflect_conjunction,
    reflect_disjunction,
    render_judgement,
)

logger = logging.getLogger(__name__)


class Observer(Enum):
    OUTSIDE = "outside"
    INSIDE = "inside"


class Rule(Enum):
    AXIOM_USE = "axiom"
    REFLECT_CONJ = "reflect-conj"
    REFLECT_DISJ = "reflect-disj"
    DUALIZE = "dualize"


@dataclass(frozen=True)
class Context:
    """Аксиомы, полученные наблюдателем из событий измерения."""

    observer: Observer
    axioms: frozenset[Judgement] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "axioms", frozenset(self.axioms))
        if self.observer is Observer.OUTSIDE:
            _check_outside_axioms(self.axioms)

    @classmethod
    def inside(cls, *axioms: Judgement) -> Context:
        return cls(Observer.INSIDE, frozenset(axioms))

    @classmethod
    def outside(cls, *axioms: Judgement) -> Context:
        return cls(Observer.OUTSIDE, frozenset(axioms))

    def extended(self, *axioms: Judgement) -> Context:
        return Context(self.observer, self.axioms | frozenset(axioms))


def _check_outside_axioms(axioms: frozenset[Judgement]) -> None:
    """Внешний наблюдатель утверждает не более одного из A, A⊥ на атом.

    A ⊢ считается тем же, что ⊢ A⊥ (и наоборот).
    """
    asserted: dict[str, set[type]] = {}
    for axiom in axioms:
        if not isinstance(axiom.formula, (Atom, DualAtom)):
            raise ContextError(
                f"внешний наблюдатель получает только атомарные суждения, получено {axiom}"
            )
        literal = axiom.formula
        if axiom.polarity is Polarity.FALSITY:
            literal = dual_formula(literal)
        kinds = asserted.setdefault(literal.name, set())
        kinds.add(type(literal))
        if len(kinds) > 1:
            raise ContextError(
                f"внешний наблюдатель не может утверждать и {literal.name}, и {literal.name}^"
            )


@dataclass(frozen=True)
class Derivation:
    conclusion: Judgement
    rule: Rule
    premises: tuple[Derivation, ...] = ()

    derivable = True

    def to_dict(self) -> dict:
        return {
            "conclusion": render_judgement(self.conclusion),
            "rule": self.rule.value,
            "premises": [premise.to_dict() for premise in self.premises],
        }

    def render_lines(self, unicode: bool = False, indent: int = 0) -> list[str]:
        """Дерево вывода, корень первым, посылки с отступом."""
        lines = [f"{'  ' * indent}{render_judgement(self.conclusion, unicode)}  [{self.rule.value}]"]
        for premise in self.premises:
            lines.extend(premise.render_lines(unicode, indent + 1))
        return lines


@dataclass(frozen=True)
class NotDerivable:
    goal: Judgement

    derivable = False

    def to_dict(self) -> None:
        return None


def derive(context: Context, goal: Judgement) -> Derivation | NotDerivable:
    """Поиск вывода снизу вверх.

    Поиск конечен: структурные правила уменьшают формулу, а дуализация
    не применяется дважды подряд.
    """
    found = _search(context, goal, may_dualize=True)
    if found is None:
        logger.debug("Не выводимо в контексте %s: %s", context.observer.value, goal)
        return NotDerivable(goal)
    return found


def _search(context: Context, goal: Judgement, may_dualize: bool) -> Derivation | None:
    if goal in context.axioms:
        return Derivation(goal, Rule.AXIOM_USE)

    formula = goal.formula
    if goal.polarity is Polarity.ASSERTION and isinstance(formula, Conj):
        premises = _search_pair(context, assertion(formula.left), assertion(formula.right))
        if premises is not None:
            return Derivation(goal, Rule.REFLECT_CONJ, premises)
    if goal.polarity is Polarity.FALSITY and isinstance(formula, Disj):
        premises = _search_pair(context, falsity(formula.left), falsity(formula.right))
        if premises is not None:
            return Derivation(goal, Rule.REFLECT_DISJ, premises)

    if may_dualize:
        premise = _search(context, dual_judgement(goal), may_dualize=False)
        if premise is not None:
            return Derivation(goal, Rule.DUALIZE, (premise,))
    return None


def _search_pair(
    context: Context, left: Judgement, right: Judgement
) -> tuple[Derivation, Derivation] | None:
    left_derivation = _search(context, left, may_dualize=True)
    if left_derivation is None:
        return None
    right_derivation = _search(context, right, may_dualize=True)
    if right_derivation is None:
        return None
    return left_derivation, right_derivation


def verify_derivation(context: Context, derivation: Derivation) -> bool:
    """Каждый лист является аксиомой контекста, каждый узел следует из посылок по своему правилу."""
    premises = derivation.premises
    conclusions = [premise.conclusion for premise in premises]
    try:
        if derivation.rule is Rule.AXIOM_USE:
            valid = not premises and derivation.conclusion in context.axioms
        elif derivation.rule is Rule.REFLECT_CONJ:
            valid = len(premises) == 2 and reflect_conjunction(*conclusions) == derivation.conclusion
        elif derivation.rule is Rule.REFLECT_DISJ:
            valid = len(premises) == 2 and reflect_disjunction(*conclusions) == derivation.conclusion
        else:
            valid = len(premises) == 1 and dual_judgement(conclusions[0]) == derivation.conclusion
    except PolarityError:
        return False
    return valid and all(verify_derivation(context, premise) for premise in premises)
