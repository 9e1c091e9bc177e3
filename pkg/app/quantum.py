"""Математика одного кубита: состояния, базисы, проекторы, гейты, измерение по Борну."""

from __future__ import annotations

import cmath
import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache

import numpy as np

from app.constants import (
    ASCII_DUAL,
    ATOM_NAME_PATTERN,
    DEFAULT_ATOM,
    DEFAULT_GAMMA,
    DEFAULT_PHI,
    ROUNDTRIP_TOLERANCE,
    VALIDATION_TOLERANCE,
)
from app.errors import CloningError, ConsumedQubitError, InvalidStateError, NumericDriftError
from app.rng import SeededSource

logger = logging.getLogger(__name__)

# Амплитуда вероятности: комплексное число с конечными компонентами
Amplitude = complex


def _check_amplitude(value: object, name: str) -> complex:
    try:
        amplitude = complex(value)
    except (TypeError, ValueError) as exc:
        raise InvalidStateError(f"амплитуда {name} не является числом: {value!r}") from exc
    if not cmath.isfinite(amplitude):
        raise InvalidStateError(f"амплитуда {name} не конечна: {value!r}")
    return amplitude


def _check_angle(value: object, name: str) -> float:
    try:
        angle = float(value)
    except (TypeError, ValueError) as exc:
        raise InvalidStateError(f"угол {name} не является числом: {value!r}") from exc
    if not math.isfinite(angle):
        raise InvalidStateError(f"угол {name} не конечен: {value!r}")
    return angle


def _readonly(values) -> np.ndarray:
    array = np.array(values, dtype=complex)
    array.setflags(write=False)
    return array


class BasisIndex(Enum):
    """Какой из двух векторов базиса наблюдался."""

    FIRST = 0
    SECOND = 1

    @property
    def other(self) -> BasisIndex:
        return BasisIndex.SECOND if self is BasisIndex.FIRST else BasisIndex.FIRST


# --- Базисы ---


@dataclass(frozen=True)
class Basis:
    """Ортонормированный базис (A, A⊥), заданный углами (γ, φ).

    first  = (cos γ, e^{iφ} sin γ)
    second = (−e^{−iφ} sin γ, cos γ)
    """

    gamma: float = DEFAULT_GAMMA
    phi: float = DEFAULT_PHI
    atom: str = DEFAULT_ATOM

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", _check_angle(self.gamma, "γ"))
        object.__setattr__(self, "phi", _check_angle(self.phi, "φ"))
        if not isinstance(self.atom, str) or not re.fullmatch(ATOM_NAME_PATTERN, self.atom):
            raise InvalidStateError(f"недопустимое имя атома: {self.atom!r}")
        overlap = abs(np.vdot(self.first, self.second))
        norms = (np.linalg.norm(self.first), np.linalg.norm(self.second))
        if overlap > VALIDATION_TOLERANCE or any(
            abs(norm - 1.0) > VALIDATION_TOLERANCE for norm in norms
        ):
            raise InvalidStateError(f"базис не ортонормирован: γ={self.gamma}, φ={self.phi}")

    @cached_property
    def first(self) -> np.ndarray:
        return _readonly([
            math.cos(self.gamma),
            cmath.exp(1j * self.phi) * math.sin(self.gamma),
        ])

    @cached_property
    def second(self) -> np.ndarray:
        return _readonly([
            -cmath.exp(-1j * self.phi) * math.sin(self.gamma),
            math.cos(self.gamma),
        ])

    @property
    def dual_atom_label(self) -> str:
        return f"{self.atom}{ASCII_DUAL}"

    def vector(self, index: BasisIndex) -> np.ndarray:
        return self.first if index is BasisIndex.FIRST else self.second

    def label(self, index: BasisIndex) -> str:
        """Метка вектора: имя атома для first, дуальный атом для second."""
        return self.atom if index is BasisIndex.FIRST else self.dual_atom_label

    def to_dict(self) -> dict:
        return {"gamma": self.gamma, "phi": self.phi, "atom": self.atom}


COMPUTATIONAL_BASIS = Basis(DEFAULT_GAMMA, DEFAULT_PHI, DEFAULT_ATOM)


def make_basis(gamma: float, phi: float, atom: str = DEFAULT_ATOM) -> Basis:
    """Строит базис, повёрнутый на (γ, φ) относительно вычислительного."""
    return Basis(gamma, phi, atom)


# --- Операторы и гейты ---


class Operator:
    """Произвольный 2×2-оператор (проекторы не унитарны)."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix) -> None:
        array = np.array(matrix, dtype=complex)
        if array.shape != (2, 2):
            raise InvalidStateError(f"ожидалась матрица 2×2, получено {array.shape}")
        if not np.all(np.isfinite(array)):
            raise InvalidStateError("матрица содержит бесконечные или NaN элементы")
        array.setflags(write=False)
        self._matrix = array

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __matmul__(self, other: Operator) -> Operator:
        return Operator(self._matrix @ other.matrix)

    def __add__(self, other: Operator) -> Operator:
        return Operator(self._matrix + other.matrix)

    def is_close(self, other: Operator, tol: float = ROUNDTRIP_TOLERANCE) -> bool:
        """Поэлементное сравнение с абсолютным допуском."""
        return bool(np.allclose(self._matrix, other.matrix, rtol=0.0, atol=tol))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._matrix.tolist()!r})"


class Gate(Operator):
    """Унитарный 2×2-оператор; унитарность проверяется при создании."""

    __slots__ = ()

    def __init__(self, matrix) -> None:
        super().__init__(matrix)
        product = self._matrix.conj().T @ self._matrix
        if not np.allclose(product, np.eye(2), rtol=0.0, atol=VALIDATION_TOLERANCE):
            raise InvalidStateError(f"матрица не унитарна: {self._matrix.tolist()!r}")

    def __matmul__(self, other: Operator) -> Operator:
        if isinstance(other, Gate):
            return Gate(self._matrix @ other.matrix)
        return Operator(self._matrix @ other.matrix)


IDENTITY = Gate(np.eye(2))


def projector(basis: Basis, index: BasisIndex) -> Operator:
    """|v⟩⟨v| для выбранного вектора базиса: эрмитов и идемпотентен."""
    vector = basis.vector(index)
    return Operator(np.outer(vector, vector.conj()))


@lru_cache(maxsize=256)
def basic_measurement_gate(basis: Basis, theta0: float = 0.0, theta1: float = 0.0) -> Gate:
    """Обратимое (базовое) измерение: U = e^{iθ0}·P_first + e^{iθ1}·P_second."""
    theta0 = _check_angle(theta0, "θ0")
    theta1 = _check_angle(theta1, "θ1")
    matrix = (
        cmath.exp(1j * theta0) * projector(basis, BasisIndex.FIRST).matrix
        + cmath.exp(1j * theta1) * projector(basis, BasisIndex.SECOND).matrix
    )
    return Gate(matrix)


@lru_cache(maxsize=256)
def not_gate(basis: Basis) -> Gate:
    """NOT относительно базиса: |first⟩⟨second| + |second⟩⟨first|."""
    first, second = basis.first, basis.second
    return Gate(np.outer(first, second.conj()) + np.outer(second, first.conj()))


@lru_cache(maxsize=256)
def liar_gate(basis: Basis, theta0: float = 0.0, theta1: float = 0.0) -> Gate:
    """Лживое измерение: NOT после базового измерения."""
    return not_gate(basis) @ basic_measurement_gate(basis, theta0, theta1)


def adjoint(gate: Operator) -> Operator:
    """Эрмитово сопряжение; для гейта это обратный гейт."""
    conjugate = gate.matrix.conj().T
    if isinstance(gate, Gate):
        return Gate(conjugate)
    return Operator(conjugate)


# --- Кубит как расходуемый ресурс ---


class Qubit:
    """Нормированное состояние a|first⟩ + b|second⟩ в системе координат frame.

    Вектор хранится в вычислительном базисе. Кубит поглощается
    измерением или гейтом; после этого любое обращение к нему
    завершается ConsumedQubitError. Копирование запрещено.
    """

    __slots__ = ("_vector", "_frame", "_consumed")

    def __init__(self, vector, frame: Basis = COMPUTATIONAL_BASIS) -> None:
        array = np.array(vector, dtype=complex)
        if array.shape != (2,):
            raise InvalidStateError(f"ожидался вектор из двух амплитуд, получено {array.shape}")
        if not np.all(np.isfinite(array)):
            raise InvalidStateError("вектор состояния содержит бесконечные или NaN амплитуды")
        norm_squared = float(np.vdot(array, array).real)
        if abs(norm_squared - 1.0) > VALIDATION_TOLERANCE:
            raise InvalidStateError(f"состояние не нормировано: |a|²+|b|² = {norm_squared!r}")
        array.setflags(write=False)
        self._vector = array
        self._frame = frame
        self._consumed = False

    @classmethod
    def prepared(cls, vector: np.ndarray, frame: Basis = COMPUTATIONAL_BASIS) -> Qubit:
        """Новый кубит из уже проверенного вектора только для чтения, без повторной проверки."""
        if vector.flags.writeable or vector.shape != (2,):
            raise InvalidStateError("готовый вектор должен быть неизменяемым и из двух амплитуд")
        qubit = cls.__new__(cls)
        qubit._vector = vector
        qubit._frame = frame
        qubit._consumed = False
        return qubit

    @property
    def consumed(self) -> bool:
        return self._consumed

    @property
    def frame(self) -> Basis:
        return self._frame

    @property
    def vector(self) -> np.ndarray:
        self._require_live()
        return self._vector

    @property
    def a(self) -> complex:
        return self.amplitudes(self._frame)[0]

    @property
    def b(self) -> complex:
        return self.amplitudes(self._frame)[1]

    def amplitudes(self, basis: Basis) -> tuple[complex, complex]:
        """Координаты (⟨first|q⟩, ⟨second|q⟩) в указанном базисе; кубит не расходуется."""
        vector = self.vector
        return complex(np.vdot(basis.first, vector)), complex(np.vdot(basis.second, vector))

    def consume(self) -> np.ndarray:
        """Забирает вектор состояния и помечает кубит поглощённым."""
        self._require_live()
        self._consumed = True
        return self._vector

    def _require_live(self) -> None:
        if self._consumed:
            raise ConsumedQubitError("кубит уже поглощён измерением или гейтом и не может быть использован повторно")

    def __copy__(self):
        raise CloningError("неизвестное состояние нельзя скопировать")

    def __deepcopy__(self, memo):
        raise CloningError("неизвестное состояние нельзя скопировать")

    def __reduce_ex__(self, protocol):
        raise CloningError("неизвестное состояние нельзя сериализовать и восстановить в двух экземплярах")

    def __repr__(self) -> str:
        if self._consumed:
            return "Qubit(<consumed>)"
        a, b = self.amplitudes(self._frame)
        return f"Qubit(a={a!r}, b={b!r}, frame={self._frame.atom})"


def make_qubit(a: Amplitude, b: Amplitude, frame: Basis = COMPUTATIONAL_BASIS) -> Qubit:
    """Нормирует (a, b) и строит кубит a|first⟩ + b|second⟩ в базисе frame."""
    a = _check_amplitude(a, "a")
    b = _check_amplitude(b, "b")
    norm = math.hypot(abs(a), abs(b))
    if norm == 0.0 or not math.isfinite(norm):
        raise InvalidStateError(f"нулевой или бесконечный вектор: ({a!r}, {b!r})")
    a, b = a / norm, b / norm
    return Qubit(a * frame.first + b * frame.second, frame)


@lru_cache(maxsize=256)
def prepared_vector(a: Amplitude, b: Amplitude, frame: Basis = COMPUTATIONAL_BASIS) -> np.ndarray:
    """Проверенный нормированный вектор для (a, b); общий для всех испытаний сценария."""
    return make_qubit(a, b, frame).consume()


def apply(gate: Gate, qubit: Qubit) -> Qubit:
    """Применяет гейт; входной кубит поглощается, возвращается новый."""
    if not isinstance(gate, Gate):
        raise InvalidStateError("к кубиту применимы только унитарные гейты")
    vector = qubit.consume()
    result = gate.matrix @ vector
    drift = abs(float(np.vdot(result, result).real) - 1.0)
    if drift > VALIDATION_TOLERANCE:
        raise NumericDriftError(f"нормировка ушла на {drift:.3e} после применения гейта")
    return Qubit(result, qubit.frame)


def born_probabilities(qubit: Qubit, basis: Basis) -> tuple[float, float]:
    """Вероятности исходов по Борну; кубит не расходуется."""
    first, second = qubit.amplitudes(basis)
    p_first = min(1.0, max(0.0, abs(first) ** 2))
    p_second = min(1.0, max(0.0, abs(second) ** 2))
    return p_first, p_second


@dataclass(frozen=True)
class Outcome:
    """Результат стандартного измерения."""

    basis: Basis
    index: BasisIndex
    probability: float

    @property
    def label(self) -> str:
        return self.basis.label(self.index)

    def to_dict(self) -> dict:
        return {
            "index": self.index.name.lower(),
            "label": self.label,
            "probability": self.probability,
        }


def measure_standard(qubit: Qubit, basis: Basis, rng: SeededSource) -> tuple[Outcome, Qubit]:
    """Необратимое измерение: исход по Борну, коллапс, входной кубит поглощается."""
    p_first, p_second = born_probabilities(qubit, basis)
    qubit.consume()
    index = BasisIndex.FIRST if rng.random() < p_first else BasisIndex.SECOND
    probability = p_first if index is BasisIndex.FIRST else p_second
    logger.debug(
        "Стандартное измерение в базисе %s: исход %s (p=%.6f)",
        basis.atom, basis.label(index), probability,
    )
    collapsed = Qubit.prepared(basis.vector(index), frame=basis)
    return Outcome(basis, index, probability), collapsed


def states_equal(
    left: Qubit,
    right: Qubit,
    up_to_phase: bool = False,
    tol: float = ROUNDTRIP_TOLERANCE,
) -> bool:
    """Сравнение состояний; глобальная фаза учитывается, если не задано up_to_phase."""
    if up_to_phase:
        return abs(abs(np.vdot(left.vector, right.vector)) - 1.0) <= tol
    return bool(np.allclose(left.vector, right.vector, rtol=0.0, atol=tol))


def random_qubit(source: SeededSource, frame: Basis = COMPUTATIONAL_BASIS) -> Qubit:
    """Случайное состояние (гауссовы амплитуды, затем нормировка)."""
    re_a, im_a, re_b, im_b = source.normal(4)
    return make_qubit(complex(re_a, im_a), complex(re_b, im_b), frame)


def random_basis(source: SeededSource, atom: str = DEFAULT_ATOM) -> Basis:
    return make_basis(source.uniform(0.0, math.pi), source.uniform(0.0, 2 * math.pi), atom)
