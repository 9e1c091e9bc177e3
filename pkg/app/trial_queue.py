"""Пул потоков для пачек испытаний."""

from __future__ import annotations

import logging
import queue
import threading

from concurrent.futures import Future
from typing import Callable, Generic, TypeVar

T = TypeVar("T")

logger = logging.getLogger(__name__)

# Метка остановки: каждый воркер завершается, получив её из очереди
_STOP = object()


class TrialManager(Generic[T]):
    """Ограниченная очередь пачек; результаты собираются в порядке постановки.

    Каждая пачка приходит со своим дочерним источником случайности,
    поэтому число воркеров не влияет на содержимое отчёта.
    """

    def __init__(self, max_workers: int, max_queue_size: int) -> None:
        self._pending: queue.Queue[tuple[Callable[..., T], tuple, Future[T]] | object] = queue.Queue(
            maxsize=max_queue_size,
        )
        self._futures: list[Future[T]] = []
        self._threads = [
            threading.Thread(target=self._run_chunks, name=f"trials-{index}", daemon=True)
            for index in range(max(1, max_workers))
        ]
        for thread in self._threads:
            thread.start()

    def submit(self, func: Callable[..., T], *args) -> Future[T]:
        """Ставит пачку в очередь; блокирует, пока в очереди нет места."""
        future: Future[T] = Future()
        self._futures.append(future)
        self._pending.put((func, args, future))
        return future

    def collect(self) -> list[T]:
        """Результаты всех пачек по порядку; при первой ошибке остальные отменяются."""
        results = []
        try:
            for future in self._futures:
                results.append(future.result())
        except BaseException:
            cancelled = sum(future.cancel() for future in self._futures)
            logger.debug("Пачка завершилась ошибкой, отменено ожидающих: %d", cancelled)
            raise
        finally:
            self._futures = []
        return results

    def worker_count(self) -> int:
        """Число потоков-воркеров пула."""
        return len(self._threads)

    def _run_chunks(self) -> None:
        while True:
            item = self._pending.get()
            if item is _STOP:
                self._pending.task_done()
                break
            func, args, future = item
            # Отменённая пачка пропускается без запуска
            if future.set_running_or_notify_cancel():
                try:
                    result = func(*args)
                except Exception as exc:
                    future.set_exception(exc)
                else:
                    future.set_result(result)
            self._pending.task_done()

    def shutdown(self, timeout: float = 2.0) -> None:
        """Останавливает воркеры после того, как очередь опустеет."""
        for _thread in self._threads:
            self._pending.put(_STOP)
        for thread in self._threads:
            thread.join(timeout=timeout)
        logger.debug("Пул испытаний остановлен (%d воркеров)", len(self._threads))

    def __enter__(self) -> TrialManager[T]:
        return self

    def __exit__(self, *_exc_info) -> None:
        self.shutdown()
