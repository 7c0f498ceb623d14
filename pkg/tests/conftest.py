"""
Shared fixtures.

Exhaustive sweeps over order 7 are marked ``slow`` and run with --runslow.
"""
import networkx as nx
import pytest

from uniqdim.common.config import reload_settings
from uniqdim.graphs.core import Graph, build_graph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps over order 7 (minutes)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True, scope="session")
def isolated_data_dir(tmp_path_factory):
    """Fixtures, checkpoints and logs go to a per-session temp directory."""
    root = tmp_path_factory.mktemp("uniqdim")
    with pytest.MonkeyPatch.context() as mp:
        mp.setenv("UNIQDIM_DATA_DIR", str(root / "data"))
        mp.setenv("UNIQDIM_LOG_DIR", str(root / "logs"))
        mp.delenv("UNIQDIM_JOBS", raising=False)
        mp.delenv("UNIQDIM_SELF_CHECK", raising=False)
        mp.delenv("UNIQDIM_ORDER_BOUND_PRUNING", raising=False)
        reload_settings()
        yield root
    reload_settings()


@pytest.fixture
def settings_env(monkeypatch):
    """Set UNIQDIM_* variables for one test; settings are rebuilt before and after."""
    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"UNIQDIM_{key}", str(value))
        return reload_settings()

    yield apply
    monkeypatch.undo()
    reload_settings()


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# Explicit edge set of the order-9 graph: u1..u3 = 0..2, w1..w6 = 3..8.
ORDER9_EDGES = [(a, b) for a in range(3, 9) for b in range(a + 1, 9)] + [
    (i - 1, 2 + j) for i in (1, 2, 3) for j in (i, i + 1, 6)
]


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def order9():
    return build_graph(9, ORDER9_EDGES)
