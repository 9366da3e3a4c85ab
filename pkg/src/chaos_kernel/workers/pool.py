"""Worker pool for independent evaluations and path blocks."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import Executor, ProcessPoolExecutor
from types import TracebackType
from typing import Any, Self

logger = logging.getLogger(__name__)


class WorkerPool:
    """Fan-out of independent tasks with results returned in submission order.

    One worker runs tasks inline in the coordinator. More workers use a
    process pool; tasks must then be picklable (module-level functions or
    ``functools.partial`` of them). Output order never depends on the worker
    count, so reductions over the results are reproducible.
    """

    def __init__(self, workers: int = 1) -> None:
        """Initialize worker pool."""
        if workers < 1:
            raise ValueError(f"Worker count must be at least 1, got {workers}")
        self._workers = workers
        self._executor: Executor | None = None

    @property
    def workers(self) -> int:
        """Configured worker count."""
        return self._workers

    def start(self) -> None:
        """Start the process pool (no-op for one worker)."""
        if self._executor is not None:
            logger.warning("Worker pool already running")
            return
        if self._workers > 1:
            self._executor = ProcessPoolExecutor(max_workers=self._workers)
            logger.info("Worker pool started (%d processes)", self._workers)

    def stop(self) -> None:
        """Stop the process pool, waiting for running tasks."""
        if self._executor is None:
            return
        self._executor.shutdown(wait=True, cancel_futures=True)
        self._executor = None
        logger.info("Worker pool stopped")

    def __enter__(self) -> Self:
        """Start the pool for a with block."""
        self.start()
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        """Stop the pool on leaving a with block."""
        self.stop()

    def imap[T, R](self, fn: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
        """Results of ``fn`` over ``items``, yielded in input order as they complete."""
        if self._executor is None:
            return map(fn, items)
        return self._executor.map(fn, items)

    def map[T, R](self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Results of ``fn`` over ``items`` in input order."""
        return list(self.imap(fn, items))

    def starmap[R](self, fn: Callable[..., R], arguments: Iterable[tuple[Any, ...]]) -> list[R]:
        """Results of ``fn(*args)`` for each argument tuple, in input order."""
        rows = list(arguments)
        if self._executor is None:
            return [fn(*args) for args in rows]
        if not rows:
            return []
        return list(self._executor.map(fn, *zip(*rows, strict=True)))
