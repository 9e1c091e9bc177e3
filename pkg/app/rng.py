"""Источник случайности с семенем для воспроизводимых прогонов."""

from __future__ import annotations

import numpy as np

from app.constants import SEED_MAX, SEED_MIN
from app.errors import InvalidStateError


def validate_seed(seed: int) -> int:
    """Проверяет, что семя является 64-битным беззнаковым целым."""
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise InvalidStateError(f"семя должно быть целым числом, получено {seed!r}")
    seed = int(seed)
    if not SEED_MIN <= seed <= SEED_MAX:
        raise InvalidStateError(f"семя вне диапазона [0, 2^64): {seed}")
    return seed


class SeededSource:
    """Обёртка над numpy.random.Generator с известным семенем.

    Дочерние источники (fork) выводятся детерминированно из пары
    (seed, index) через SeedSequence.spawn_key, поэтому результат не
    зависит от порядка, в котором воркеры их получают.
    """

    def __init__(self, seed: int, spawn_key: tuple[int, ...] = ()) -> None:
        self._seed = validate_seed(seed)
        self._spawn_key = tuple(spawn_key)
        sequence = np.random.SeedSequence(self._seed, spawn_key=self._spawn_key)
        self._generator = np.random.Generator(np.random.PCG64(sequence))

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def spawn_key(self) -> tuple[int, ...]:
        return self._spawn_key

    def random(self) -> float:
        return float(self._generator.random())

    def uniform(self, low: float, high: float) -> float:
        return float(self._generator.uniform(low, high))

    def normal(self, size: int) -> np.ndarray:
        return self._generator.standard_normal(size)

    def fork(self, index: int) -> SeededSource:
        """Дочерний источник для подзадачи с номером index."""
        return SeededSource(self._seed, self._spawn_key + (int(index),))
