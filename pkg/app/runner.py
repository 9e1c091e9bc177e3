"""Исполнение сценария: контекст испытания, пачки испытаний, сборка отчёта."""

from __future__ import annotations

import logging
import math
from collections import Counter
from typing import Callable

from app.config import TRIAL_CHUNK_SIZE, TRIAL_WORKERS
from app.derivation import Context, Derivation, NotDerivable, Observer, derive
from app.errors import ScenarioError, StepError
from app.formulas import Judgement
from app.handlers import register_all_handlers
from app.quantum import Qubit
from app.report import Report, StepRecord
from app.rng import SeededSource
from app.scenario import Scenario, Step, validate_scenario
from app.trial_queue import TrialManager
from app.utils import format_frequency

logger = logging.getLogger(__name__)

StepHandler = Callable[[int, Step], StepRecord]

_EMPTY_CONTEXTS = {
    Observer.OUTSIDE: Context.outside(),
    Observer.INSIDE: Context.inside(),
}


class ScenarioContext:
    """Состояние испытаний одной пачки, общее для всех обработчиков директив.

    Контекст и обработчики создаются один раз на пачку; reset()
    готовит новое испытание. При detailed=False обработчики не строят
    события и выводы, а возвращают лишь то, что нужно для подсчёта частот.
    """

    def __init__(self, scenario: Scenario, source: SeededSource) -> None:
        self.scenario = scenario
        self.basis = scenario.basis
        self.source = source
        self.detailed = True
        self.qubit: Qubit | None = None
        self.last_observer = Observer.OUTSIDE
        self._contexts: dict[Observer, Context] = dict(_EMPTY_CONTEXTS)
        self._handlers: dict[str, StepHandler] = {}
        # (контекст, цель) → вывод
        self._derivations: dict[tuple[Context, Judgement], Derivation | NotDerivable] = {}

    def reset(self) -> None:
        """Начинает новое испытание: свежий кубит по описанию, пустые контексты."""
        self.qubit = self.scenario.qubit.build(self.basis)
        self.last_observer = Observer.OUTSIDE
        self._contexts = dict(_EMPTY_CONTEXTS)

    # --- Регистрация обработчиков ---

    def handler(self, directive: str) -> Callable[[StepHandler], StepHandler]:
        def decorator(func: StepHandler) -> StepHandler:
            self.register_handler(directive, func)
            return func
        return decorator

    def register_handler(self, directive: str, func: StepHandler) -> None:
        self._handlers[directive] = func

    # --- Кубит и контексты ---

    def take_qubit(self) -> Qubit:
        """Передаёт кубит обработчику; повторно его не получить."""
        qubit, self.qubit = self.qubit, None
        if qubit is None:
            raise ScenarioError("кубит уже поглощён предыдущим шагом")
        return qubit

    def record_axioms(self, observer: Observer, *axioms: Judgement) -> None:
        self._contexts[observer] = self._contexts[observer].extended(*axioms)
        self.last_observer = observer

    def derive(self, observer: Observer, goal: Judgement) -> Derivation | NotDerivable:
        """Вывод цели в контексте наблюдателя; повторные запросы берутся из памяти."""
        key = (self._contexts[observer], goal)
        result = self._derivations.get(key)
        if result is None:
            result = self._derivations[key] = derive(*key)
        return result

    # --- Исполнение ---

    def dispatch(self, index: int, step: Step) -> StepRecord:
        func = self._handlers.get(step.directive)
        if func is None:
            raise StepError(index, ScenarioError(f"нет обработчика для «{step.directive}»"), line=step.line)
        try:
            return func(index, step)
        except StepError:
            raise
        except Exception as exc:
            raise StepError(index, exc, line=step.line) from exc


def prepare_context(scenario: Scenario, source: SeededSource) -> ScenarioContext:
    ctx = ScenarioContext(scenario, source)
    register_all_handlers(ctx)
    return ctx


def run_trial(ctx: ScenarioContext) -> list[StepRecord]:
    """Одно испытание; контекст сбрасывается перед первым шагом."""
    ctx.reset()
    return [ctx.dispatch(index, step) for index, step in enumerate(ctx.scenario.steps, start=1)]


def run_chunk(
    scenario: Scenario, source: SeededSource, count: int, keep_records: bool
) -> tuple[list[StepRecord] | None, dict[int, Counter]]:
    """Пачка испытаний с общим дочерним источником; записи первого испытания по запросу."""
    ctx = prepare_context(scenario, source)
    records = None
    tallies: dict[int, Counter] = {
        index: Counter() for index in range(1, len(scenario.steps) + 1)
    }
    for trial in range(count):
        ctx.detailed = keep_records and trial == 0
        trial_records = run_trial(ctx)
        if ctx.detailed:
            records = trial_records
        for record in trial_records:
            tallies[record.index][record.tally_key] += 1
    logger.debug("Пачка %s: %d испытаний", source.spawn_key, count)
    return records, tallies


def _chunk_sizes(trials: int, chunk_size: int) -> list[int]:
    chunk_size = max(1, chunk_size)
    count = math.ceil(trials / chunk_size)
    return [min(chunk_size, trials - k * chunk_size) for k in range(count)]


def run_scenario(
    scenario: Scenario,
    workers: int = TRIAL_WORKERS,
    chunk_size: int = TRIAL_CHUNK_SIZE,
) -> Report:
    """Исполняет сценарий trials раз; результат зависит только от (scenario, seed).

    Пачка k получает источник root.fork(k), поэтому ни число воркеров,
    ни порядок их завершения не меняют отчёт.
    """
    validate_scenario(scenario)
    root = SeededSource(scenario.seed)
    sizes = _chunk_sizes(scenario.trials, chunk_size)
    logger.info(
        "Запуск сценария: %d шагов, %d испытаний, семя %d",
        len(scenario.steps), scenario.trials, scenario.seed,
    )

    pool_size = max(1, min(workers, len(sizes)))
    with TrialManager(max_workers=pool_size, max_queue_size=pool_size * 2) as manager:
        for k, size in enumerate(sizes):
            manager.submit(run_chunk, scenario, root.fork(k), size, k == 0)
        logger.debug("Пачек: %d, воркеров: %d", len(sizes), manager.worker_count())
        results = manager.collect()

    records = results[0][0] or []
    totals: dict[int, Counter] = {}
    for _records, tallies in results:
        for index, counter in tallies.items():
            totals.setdefault(index, Counter()).update(counter)

    frequencies: dict[str, dict[str, float]] = {}
    if scenario.trials > 1:
        for index in sorted(totals):
            counter = totals[index]
            frequencies[str(index)] = {
                key: format_frequency(counter[key], scenario.trials) for key in sorted(counter)
            }

    logger.info("Сценарий выполнен: %d записей", len(records))
    return Report(
        seed=scenario.seed,
        trials=scenario.trials,
        steps=tuple(records),
        frequencies=frequencies,
    )
