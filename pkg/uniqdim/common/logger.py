"""
Centralized logging for uniqdim.

Features:
- Structured logging with context (component, order, graph6)
- Colored console output on stderr (stdout carries result records)
- Optional rotating file handler
- Execution time tracking
"""
import logging
import logging.handlers
import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import coloredlogs

CONTEXT_FIELDS = ('component', 'order', 'graph6', 'execution_time_ms')


class ContextFilter(logging.Filter):
    """Add context fields to log records."""

    def __init__(self, context: dict | None = None):
        super().__init__()
        self.context = context or {}

    def filter(self, record: logging.LogRecord) -> bool:
        for key, value in self.context.items():
            setattr(record, key, value)

        # Ensure all expected fields exist
        for field in CONTEXT_FIELDS:
            if not hasattr(record, field):
                setattr(record, field, None)

        return True


class RunLogger:
    """
    Logger for solver runs and sweeps.

    Provides structured logging with context and timing.
    """

    def __init__(self, name: str, component: str | None = None):
        self.logger = logging.getLogger(name)
        self.component = component or (name.split('.')[1] if '.' in name else name)
        self.context: dict[str, Any] = {'component': self.component}

    def _log(self, level: int, message: str, **kwargs):
        extra = {**self.context, **kwargs}
        self.logger.log(level, message, extra=extra)

    def debug(self, message: str, **kwargs):
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs):
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs):
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, exc_info: Exception | None = None, **kwargs):
        """Log error message with context and optional exception."""
        if exc_info:
            self.logger.error(message, exc_info=exc_info, extra={**self.context, **kwargs})
        else:
            self._log(logging.ERROR, message, **kwargs)

    @contextmanager
    def log_execution(self, operation: str, **context):
        """
        Context manager that logs execution time and failures.

        Usage:
            with logger.log_execution('search_n0', k=3):
                ...
        """
        start_time = time.perf_counter()
        self.debug(f"Starting {operation}", **context)

        try:
            yield
            execution_time_ms = int((time.perf_counter() - start_time) * 1000)
            self.info(
                f"Completed {operation}",
                execution_time_ms=execution_time_ms,
                **context
            )
        except Exception as e:
            execution_time_ms = int((time.perf_counter() - start_time) * 1000)
            self.error(
                f"Failed {operation}: {e}",
                exc_info=e,
                execution_time_ms=execution_time_ms,
                **context
            )
            raise


def setup_logging(
    log_level: str | int = logging.WARNING,
    log_dir: Path | None = None,
    log_to_file: bool = False,
    max_log_size_mb: int = 50,
) -> None:
    """
    Configure logging for the whole application.

    Args:
        log_level: Minimum log level to capture
        log_dir: Directory for the rotating log file
        log_to_file: Whether to add the file handler
        max_log_size_mb: Rotation threshold for the log file
    """
    root_logger = logging.getLogger()
    root_logger.handlers.clear()

    console_fmt = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
    coloredlogs.install(
        level=log_level,
        logger=root_logger,
        stream=sys.stderr,
        fmt=console_fmt,
        datefmt='%Y-%m-%d %H:%M:%S',
    )
    for handler in root_logger.handlers:
        handler.addFilter(ContextFilter())

    if log_to_file:
        if log_dir is None:
            log_dir = Path.home() / ".cache" / "uniqdim" / "logs"
        log_dir.mkdir(parents=True, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            log_dir / "uniqdim.log",
            maxBytes=max_log_size_mb * 1024 * 1024,
            backupCount=10
        )
        file_handler.setLevel(log_level)
        file_handler.addFilter(ContextFilter())
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s [%(levelname)s] %(component)s.%(name)s: %(message)s '
            '[order=%(order)s, graph6=%(graph6)s, exec_time=%(execution_time_ms)sms]',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
        root_logger.addHandler(file_handler)


def get_run_logger(name: str, component: str | None = None) -> RunLogger:
    """
    Get a run logger instance.

    Args:
        name: Logger name (usually __name__)
        component: Component name (derived from the module path if None)

    Example:
        >>> logger = get_run_logger(__name__, 'solver')
        >>> logger.info("Search finished", order=7)
    """
    return RunLogger(name, component)
