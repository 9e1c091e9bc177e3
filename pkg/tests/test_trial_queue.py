import threading
import time

import pytest

from app.trial_queue import TrialManager


def test_results_follow_submission_order():
    with TrialManager(max_workers=3, max_queue_size=4) as manager:
        assert manager.worker_count() == 3
        futures = [manager.submit(pow, index, 2) for index in range(20)]
        assert [future.result(timeout=5) for future in futures] == [index**2 for index in range(20)]


def test_exceptions_reach_the_caller():
    def fail():
        raise RuntimeError("boom")

    with TrialManager(max_workers=1, max_queue_size=1) as manager:
        future = manager.submit(fail)
        with pytest.raises(RuntimeError, match="boom"):
            future.result(timeout=5)


def test_tasks_run_on_worker_threads():
    with TrialManager(max_workers=2, max_queue_size=2) as manager:
        name = manager.submit(lambda: threading.current_thread().name).result(timeout=5)
    assert name != threading.main_thread().name


def test_collect_returns_results_in_order_and_cancels_after_failure():
    release = threading.Event()

    def fail():
        raise ValueError("chunk failed")

    def slow(value):
        release.wait(timeout=5)
        return value

    with TrialManager(max_workers=1, max_queue_size=4) as manager:
        for value in range(3):
            manager.submit(slow, value)
        release.set()
        assert manager.collect() == [0, 1, 2]

        manager.submit(fail)
        later = manager.submit(slow, 99)
        with pytest.raises(ValueError, match="chunk failed"):
            manager.collect()
        assert later.cancelled() or later.result(timeout=5) == 99


def test_idle_pool_shuts_down_without_waiting():
    manager = TrialManager(max_workers=4, max_queue_size=8)
    started = time.perf_counter()
    manager.shutdown()
    assert time.perf_counter() - started < 0.2
    assert not any(thread.is_alive() for thread in manager._threads)


def test_shutdown_finishes_queued_chunks_first():
    manager = TrialManager(max_workers=1, max_queue_size=4)
    futures = [manager.submit(pow, value, 3) for value in range(4)]
    manager.shutdown()
    assert [future.result(timeout=0) for future in futures] == [0, 1, 8, 27]
