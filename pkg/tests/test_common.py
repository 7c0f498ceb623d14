import logging

import pytest
from pydantic import ValidationError

from uniqdim.common.config import RunConfig, get_settings
from uniqdim.common.exceptions import ConfigurationError, GraphFormatError, UniqDimError
from uniqdim.common.logger import get_run_logger
from uniqdim.common.paths import checkpoint_path, data_dir
from uniqdim.common.sweep import BaseSweep, SweepStats


def _square(x):
    return x * x


def _explode(x):
    if x == 3:
        raise ValueError("three")
    return x


class SquareSweep(BaseSweep):
    worker = staticmethod(_square)

    def __init__(self, items, stop_at=None, **kwargs):
        super().__init__(**kwargs)
        self.items = items
        self.stop_at = stop_at
        self.seen = []

    def get_items(self):
        return self.items

    def reduce(self, batch, result):
        self.seen.append(result)
        self.stats.record_batch(1)

    def should_stop(self):
        return self.stop_at is not None and len(self.seen) >= self.stop_at


class ExplodingSweep(SquareSweep):
    worker = staticmethod(_explode)


class TestSettings:
    def test_defaults(self):
        settings = get_settings()
        assert settings.search.jobs == 1
        assert settings.solver.randomly_k_max_order == 20
        assert not settings.solver.self_check

    def test_env_override(self, settings_env):
        settings = settings_env(JOBS=3, LOG_LEVEL="debug")
        assert settings.search.jobs == 3
        assert settings.logging.log_level == "DEBUG"

    @pytest.mark.parametrize("key, value", [("JOBS", 0), ("BATCH_SIZE", -1), ("LOG_LEVEL", "LOUD")])
    def test_invalid_env(self, settings_env, key, value):
        with pytest.raises(ConfigurationError):
            settings_env(**{key: value})

    def test_data_dir_is_isolated(self, isolated_data_dir):
        assert data_dir() == isolated_data_dir / "data"
        assert checkpoint_path("n0-k3").name == "n0-k3.json"
        assert checkpoint_path("n0-k3").parent.is_dir()


class TestRunConfig:
    def test_single_source(self, tmp_path):
        config = RunConfig(subcommand='dim', input_path=tmp_path / "g.g6")
        assert config.input_format == 'graph6'

    @pytest.mark.parametrize("kwargs", [
        {'subcommand': 'dim'},
        {'subcommand': 'audit', 'inline_edges': '2 1 / 0 1', 'use_stdin': True},
        {'subcommand': 'audit', 'use_stdin': True, 'jobs': 0},
        {'subcommand': 'construct', 'use_stdin': True, 'inline_edges': '2 1 / 0 1'},
        {'subcommand': 'shout', 'use_stdin': True},
    ])
    def test_rejected(self, kwargs):
        with pytest.raises(ValidationError):
            RunConfig(**kwargs)

    def test_generating_subcommands_need_no_source(self):
        assert RunConfig(subcommand='construct').use_stdin is False
        assert RunConfig(subcommand='search-n0').jobs == 1

    def test_exhaustive_counts_as_source(self):
        RunConfig(subcommand='audit', exhaustive_order=5)


class TestExceptions:
    def test_format_error_carries_offset(self):
        e = GraphFormatError("bad character", 7, context={'char': ' '})
        assert isinstance(e, UniqDimError)
        assert e.offset == 7
        assert e.context == {'offset': 7, 'char': ' '}
        assert "offset 7" in str(e)


class TestRunLogger:
    def test_log_execution(self, caplog):
        logger = get_run_logger("uniqdim.tests.timing", "tests")
        with caplog.at_level(logging.DEBUG, logger="uniqdim.tests.timing"):
            with logger.log_execution("unit", order=4):
                pass
        messages = [r.getMessage() for r in caplog.records]
        assert messages == ["Starting unit", "Completed unit"]
        assert caplog.records[-1].component == "tests"
        assert caplog.records[-1].order == 4

    def test_log_execution_reraises(self, caplog):
        logger = get_run_logger("uniqdim.tests.timing", "tests")
        with caplog.at_level(logging.ERROR, logger="uniqdim.tests.timing"):
            with pytest.raises(RuntimeError):
                with logger.log_execution("unit"):
                    raise RuntimeError("boom")
        assert caplog.records[-1].getMessage() == "Failed unit: boom"


class TestSweep:
    def test_serial_in_order(self):
        sweep = SquareSweep([1, 2, 3, 4])
        stats = sweep.run()
        assert sweep.seen == [1, 4, 9, 16]
        assert stats.batches == 4

    def test_parallel_in_order(self):
        sweep = SquareSweep(list(range(20)), jobs=2)
        sweep.run()
        assert sweep.seen == [x * x for x in range(20)]

    def test_stop_early(self):
        sweep = SquareSweep(iter(range(10)), stop_at=3)
        stats = sweep.run()
        assert sweep.seen == [0, 1, 4]
        assert stats.stopped_early

    def test_batch_errors_recorded(self):
        sweep = ExplodingSweep([1, 2, 3, 4])
        stats = sweep.run()
        assert sweep.seen == [1, 2, 4]
        assert stats.errors == {'ValueError': 1}

    def test_stats_str(self):
        stats = SweepStats()
        stats.record_batch(5, failures=1)
        assert str(stats).startswith("Batches: 1 | Items: 5 | Failures: 1")
