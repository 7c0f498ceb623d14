"""
Path constants and utilities.

All paths are derived from configuration so tests can redirect them.
"""
from pathlib import Path

from uniqdim.common.config import get_settings


def data_dir() -> Path:
    """Directory for frozen fixtures and checkpoints (created on demand)."""
    d = get_settings().search.data_dir
    d.mkdir(parents=True, exist_ok=True)
    return d


def base6_fixture_path() -> Path:
    """Frozen graph6 line of the order-6 base graph."""
    return data_dir() / "base6.g6"


def checkpoint_path(name: str) -> Path:
    """
    Default checkpoint location for a named stream scan.

    Args:
        name: Scan name (e.g. "n0-k3")

    Returns:
        Path to the JSON checkpoint file
    """
    d = data_dir() / "checkpoints"
    d.mkdir(parents=True, exist_ok=True)
    return d / f"{name}.json"
