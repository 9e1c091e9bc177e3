"""Настройка логирования с ротацией файлов."""

import logging
import os
from logging.handlers import RotatingFileHandler

from app.config import DATA_DIR, LARK_LOG_LEVEL, LOG_LEVEL, LOG_TO_FILE

# Максимальный размер файла логов: 50 МБ
LOG_MAX_BYTES = 50 * 1024 * 1024
LOG_BACKUP_COUNT = 1
LOG_FILENAME = "judgements.log"
LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def get_log_file_path() -> str:
    """Возвращает путь к файлу логов."""
    return os.path.join(DATA_DIR, LOG_FILENAME)


def setup_logging(to_file: bool = LOG_TO_FILE) -> None:
    """Настраивает логирование: консоль (stderr) + файл с ротацией.

    Отчёты пишутся в stdout, поэтому консольный обработчик
    привязан к stderr и не смешивается с байтами отчёта.
    """
    log_level = getattr(logging, LOG_LEVEL, logging.INFO)

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    # Повторный вызов (тесты, check-axioms после run) не дублирует обработчики
    for handler in list(root_logger.handlers):
        if getattr(handler, "_judgements_handler", False):
            root_logger.removeHandler(handler)
            handler.close()

    console_handler = logging.StreamHandler()
    console_handler.setLevel(log_level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    console_handler._judgements_handler = True
    root_logger.addHandler(console_handler)

    if to_file:
        os.makedirs(DATA_DIR, exist_ok=True)
        file_handler = RotatingFileHandler(
            get_log_file_path(),
            maxBytes=LOG_MAX_BYTES,
            backupCount=LOG_BACKUP_COUNT,
            encoding="utf-8",
        )
        file_handler.setLevel(log_level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        file_handler._judgements_handler = True
        root_logger.addHandler(file_handler)

    logging.getLogger("lark").setLevel(LARK_LOG_LEVEL)
