"""Общие константы, используемые во всём симуляторе."""

import math

# --- Численные допуски ---
VALIDATION_TOLERANCE = 1e-9  # нормировка, ортонормированность, унитарность
ROUNDTRIP_TOLERANCE = 1e-12  # U†U q = q и прочие тождества обратимости
REPORT_DIGITS = 12  # знаков после запятой в отчётах

# --- Семя генератора ---
SEED_MIN = 0
SEED_MAX = 2**64 - 1

# --- Фазы базового измерения по умолчанию (θ0, θ1) ---
DEFAULT_PHASES = (0.0, 0.0)

# --- Пресеты кубита: координаты в базисе сценария (до нормировки) ---
QUBIT_PRESETS = {
    "zero": (1.0, 0.0),
    "one": (0.0, 1.0),
    "plus": (1.0, 1.0),
    "minus": (1.0, -1.0),
    "plus-i": (1.0, 1j),
    "minus-i": (1.0, -1j),
}

# --- ASCII-нотация ---
ASCII_TURNSTILE = "|-"
ASCII_DUAL = "^"
ASCII_CONJ = "&"
ASCII_DISJ = "(+)"

# --- Unicode-нотация ---
UNICODE_TURNSTILE = "⊢"  # ⊢
UNICODE_DUAL = "⊥"  # ⊥
UNICODE_CONJ = "&"
UNICODE_DISJ = "⊕"  # ⊕

# --- Директивы сценария ---
DIRECTIVE_QUBIT = "qubit"
DIRECTIVE_BASIS = "basis"
DIRECTIVE_SEED = "seed"
DIRECTIVE_TRIALS = "trials"
DIRECTIVE_OUTSIDER_MEASURE = "outsider-measure"
DIRECTIVE_OUTSIDER_NOT_MEASURE = "outsider-not-measure"
DIRECTIVE_INSIDER_BASIC = "insider-basic"
DIRECTIVE_INSIDER_LIAR = "insider-liar"
DIRECTIVE_DERIVE = "derive"
DIRECTIVE_CLASSICAL_STATUS = "classical-status"
DIRECTIVE_CLONE = "clone"
COMMENT_PREFIX = "#"

# Шаги, которые разрушают кубит (стандартное измерение)
CONSUMING_DIRECTIVES = frozenset({
    DIRECTIVE_OUTSIDER_MEASURE,
    DIRECTIVE_OUTSIDER_NOT_MEASURE,
})
# Шаги, которые обращаются к кубиту
QUBIT_DIRECTIVES = frozenset({
    DIRECTIVE_OUTSIDER_MEASURE,
    DIRECTIVE_OUTSIDER_NOT_MEASURE,
    DIRECTIVE_INSIDER_BASIC,
    DIRECTIVE_INSIDER_LIAR,
})

# --- Имена атомов ---
ATOM_NAME_PATTERN = r"[A-Za-z_][A-Za-z0-9_]*"

# --- Базис по умолчанию ---
DEFAULT_ATOM = "A"
DEFAULT_GAMMA = 0.0
DEFAULT_PHI = 0.0

# --- Диагностика ---
NO_CLONING_TAG = "no-cloning"

# --- Коды завершения ---
EXIT_OK = 0
EXIT_SCENARIO_ERROR = 1
EXIT_NUMERIC_ERROR = 2

# --- Заголовок текстового отчёта ---
REPORT_HEADER = "# insider judgement report"

# --- Выражения амплитуд и углов ---
EXPRESSION_CONSTANTS = {
    "pi": math.pi,
}

# --- Проверка аксиом ---
FRESH_ATOM_PREFIX = "B"
FRESH_ATOM_COUNT = 50
