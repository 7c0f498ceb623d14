"""
Base sweep class for batched, optionally parallel scans.

Sweeps split their input into batches, hand each batch to a module-level
worker function (so it can cross process boundaries) and fold the results
back in input order. Reductions therefore do not depend on the worker count.
"""
import time
from abc import ABC, abstractmethod
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, Iterator, Optional

from tqdm import tqdm

from uniqdim.common.config import get_settings
from uniqdim.common.logger import RunLogger, get_run_logger


@dataclass
class SweepStats:
    """Statistics for sweep execution."""

    batches: int = 0
    items: int = 0
    failures: int = 0
    stopped_early: bool = False
    errors: Dict[str, int] = field(default_factory=dict)
    execution_time_ms: int = 0

    def record_batch(self, items: int, failures: int = 0):
        self.batches += 1
        self.items += items
        self.failures += failures

    def record_error(self, error: Exception):
        error_type = type(error).__name__
        self.errors[error_type] = self.errors.get(error_type, 0) + 1

    def __str__(self) -> str:
        return (
            f"Batches: {self.batches} | "
            f"Items: {self.items} | "
            f"Failures: {self.failures} | "
            f"Errors: {sum(self.errors.values())} | "
            f"Time: {self.execution_time_ms}ms"
        )


class BaseSweep(ABC):
    """
    Base class for all sweeps.

    Subclasses provide:
    - ``worker``: a module-level function ``batch -> partial result``
    - ``get_items()``: the batches, in the order results must be folded
    - ``reduce(batch, result)``: fold one partial result into the sweep state
    """

    worker: Callable[[Any], Any]

    def __init__(
        self,
        sweep_name: Optional[str] = None,
        jobs: Optional[int] = None,
        progress: Optional[bool] = None,
    ):
        if sweep_name is None:
            sweep_name = self.__class__.__name__.lower().replace('sweep', '')

        self.sweep_name = sweep_name
        self.settings = get_settings()
        self.jobs = jobs if jobs is not None else self.settings.search.jobs
        self.progress = progress if progress is not None else self.settings.search.progress
        self.logger: RunLogger = get_run_logger(
            f"{self.__class__.__module__}.{self.__class__.__name__}",
            component=sweep_name
        )
        self.stats = SweepStats()

    @abstractmethod
    def get_items(self) -> Iterable[Any]:
        """
        Get work batches.

        Returns:
            Iterable of picklable batches
        """

    @abstractmethod
    def reduce(self, batch: Any, result: Any) -> None:
        """
        Fold one batch result into the sweep state.

        Implementations update ``self.stats`` via ``record_batch``.
        """

    def total_batches(self) -> Optional[int]:
        """Number of batches if known up front (drives the progress bar)."""
        return None

    def should_stop(self) -> bool:
        """Checked after every reduce; return True to stop early (fail-fast)."""
        return False

    def on_error(self, batch: Any, error: Exception) -> None:
        """A batch raised; record it and keep going."""
        self.stats.record_error(error)
        self.logger.error(f"Batch failed: {error}", exc_info=error)

    def _map_serial(self, batches: Iterable[Any]) -> Iterator[tuple[Any, Any]]:
        for batch in batches:
            try:
                yield batch, self.worker(batch)
            except Exception as e:
                yield batch, e

    def _map_parallel(self, batches: Iterable[Any]) -> Iterator[tuple[Any, Any]]:
        window = self.jobs * 4
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            pending: deque = deque()
            try:
                for batch in batches:
                    pending.append((batch, pool.submit(self.worker, batch)))
                    if len(pending) >= window:
                        yield self._collect(*pending.popleft())
                while pending:
                    yield self._collect(*pending.popleft())
            finally:
                for _, future in pending:
                    future.cancel()

    @staticmethod
    def _collect(batch: Any, future) -> tuple[Any, Any]:
        try:
            return batch, future.result()
        except Exception as e:
            return batch, e

    def run(self) -> SweepStats:
        """
        Run the sweep.

        Returns:
            Sweep statistics
        """
        start_time = time.perf_counter()
        with self.logger.log_execution(f'{self.sweep_name}_sweep', jobs=self.jobs):
            batches = self.get_items()
            mapped = self._map_serial(batches) if self.jobs == 1 else self._map_parallel(batches)

            bar = tqdm(
                total=self.total_batches(),
                desc=self.sweep_name,
                unit="batch",
                disable=not self.progress,
                leave=False,
            )
            try:
                for batch, result in mapped:
                    bar.update(1)
                    if isinstance(result, Exception):
                        self.on_error(batch, result)
                        continue
                    self.reduce(batch, result)
                    if self.should_stop():
                        self.stats.stopped_early = True
                        self.logger.warning("Stopping early", batches=self.stats.batches)
                        break
            finally:
                bar.close()
                if hasattr(mapped, 'close'):
                    mapped.close()

            self.stats.execution_time_ms = int((time.perf_counter() - start_time) * 1000)
            self.logger.info(f"Sweep complete: {self.stats}")
            return self.stats
