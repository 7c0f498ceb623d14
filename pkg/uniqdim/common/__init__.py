"""
Common utilities shared across uniqdim modules.
"""

from uniqdim.common.config import RunConfig, Settings, get_settings, reload_settings
from uniqdim.common.exceptions import (
    ClaimFalsifiedError,
    ConfigurationError,
    ConstructionError,
    DisconnectedGraphError,
    GraphError,
    GraphFormatError,
    SearchError,
    SolverError,
    UniqDimError,
)
from uniqdim.common.logger import RunLogger, get_run_logger, setup_logging
from uniqdim.common.paths import base6_fixture_path, checkpoint_path, data_dir
from uniqdim.common.sweep import BaseSweep, SweepStats

__all__ = [
    # Configuration
    'Settings',
    'RunConfig',
    'get_settings',
    'reload_settings',

    # Logging
    'RunLogger',
    'get_run_logger',
    'setup_logging',

    # Exceptions
    'UniqDimError',
    'ConfigurationError',
    'GraphError',
    'DisconnectedGraphError',
    'GraphFormatError',
    'SolverError',
    'ConstructionError',
    'SearchError',
    'ClaimFalsifiedError',

    # Paths
    'data_dir',
    'base6_fixture_path',
    'checkpoint_path',

    # Sweeps
    'BaseSweep',
    'SweepStats',
]
