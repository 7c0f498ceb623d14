"""
The order-6 uniquely 2-dimensional base graph.

Found by exhaustive search: the first connected labeled graph on 6
vertices (ascending edge mask) that has diameter 2, a vertex of degree 5 outside
its basis and a unique metric basis of size 2. The first hit is frozen to the data
directory so every composite built from it is byte-stable across runs.
"""
from functools import lru_cache
from pathlib import Path
from typing import Optional

from uniqdim.common.exceptions import ClaimFalsifiedError, GraphFormatError
from uniqdim.common.logger import get_run_logger
from uniqdim.common.paths import base6_fixture_path
from uniqdim.constructions.families import ConstructedGraph, Prediction
from uniqdim.graphs.core import Graph, degree, diameter, distances, max_degree
from uniqdim.graphs.enumerate import connected_masks, mask_count
from uniqdim.graphs.formats import emit_graph6, read_graphs
from uniqdim.solver.basis import iter_bases

logger = get_run_logger(__name__, 'constructions')

BASE_ORDER = 6
BASE_DIMENSION = 2


def _unique_basis(g: Graph) -> Optional[tuple[int, ...]]:
    """The unique 2-vertex basis of g, or None."""
    if max_degree(g) != BASE_ORDER - 1:
        return None
    d = distances(g)
    if diameter(g, d) != 2:
        return None
    bases = []
    for basis in iter_bases(g, d):
        bases.append(basis)
        if len(bases) > 1:
            return None
    if len(bases) != 1 or len(bases[0]) != BASE_DIMENSION:
        return None
    # join_identify merges a universal vertex, so one must sit outside the basis
    if not any(degree(g, v) == BASE_ORDER - 1 for v in range(BASE_ORDER) if v not in bases[0]):
        return None
    return bases[0]


def _wrap(g: Graph, basis: tuple[int, ...]) -> ConstructedGraph:
    return ConstructedGraph(
        graph=g,
        designated_basis=basis,
        predicted=Prediction(order=BASE_ORDER, dimension=BASE_DIMENSION, diameter=2, max_degree=BASE_ORDER - 1),
        family='base6',
        params={'k': BASE_DIMENSION},
        labels=tuple(str(v) for v in range(BASE_ORDER)),
    )


def search_base6() -> ConstructedGraph:
    """
    Scan all labeled connected graphs on 6 vertices, ascending.

    Raises:
        ClaimFalsifiedError: no qualifying graph exists
    """
    with logger.log_execution('search_base6', order=BASE_ORDER):
        for mask in connected_masks(BASE_ORDER, 0, mask_count(BASE_ORDER)):
            g = Graph.from_edge_mask(BASE_ORDER, mask)
            basis = _unique_basis(g)
            if basis is not None:
                logger.info(f"Found base graph {emit_graph6(g)}", graph6=emit_graph6(g))
                return _wrap(g, basis)
    raise ClaimFalsifiedError(
        "No uniquely 2-dimensional graph of order 6, diameter 2 and a degree-5 vertex",
        context={'order': BASE_ORDER}
    )


def _load_fixture(path: Path) -> Optional[ConstructedGraph]:
    try:
        graphs = list(read_graphs(path.read_text(encoding='utf-8').splitlines(), 'graph6'))
    except (OSError, GraphFormatError) as e:
        logger.warning(f"Ignoring unreadable base6 fixture {path}: {e}")
        return None
    if len(graphs) != 1 or graphs[0].n != BASE_ORDER:
        logger.warning(f"Ignoring malformed base6 fixture {path}")
        return None
    basis = _unique_basis(graphs[0])
    if basis is None:
        logger.warning(f"Ignoring base6 fixture {path}: graph does not qualify")
        return None
    return _wrap(graphs[0], basis)


@lru_cache(maxsize=1)
def find_base6(use_fixture: bool = True) -> ConstructedGraph:
    """
    The order-6 base graph, from the frozen fixture when one is present.

    A fixture is re-validated on load; an invalid one is replaced.
    """
    path = base6_fixture_path()
    if use_fixture and path.exists():
        found = _load_fixture(path)
        if found is not None:
            return found

    found = search_base6()
    if use_fixture:
        path.write_text(
            "# order-6 uniquely 2-dimensional base graph (first hit, ascending edge mask)\n"
            f"{emit_graph6(found.graph)}\n",
            encoding='utf-8'
        )
        logger.info(f"Froze base graph to {path}")
    return found
