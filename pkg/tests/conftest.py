import os
import pathlib

# Тесты не пишут файл логов
os.environ["LOG_TO_FILE"] = "false"

import pytest

from app.rng import SeededSource

SCENARIO_DIR = pathlib.Path(__file__).resolve().parent.parent / "scenarios"


@pytest.fixture
def source() -> SeededSource:
    return SeededSource(1234)


@pytest.fixture
def scenario_dir() -> pathlib.Path:
    return SCENARIO_DIR
