"""
Naive reference implementations.

Full subset scans in ascending cardinality that compare metric
representations directly. They share nothing with the branch-and-bound
path beyond the distance matrix and exist to cross-check it.
"""
from itertools import combinations

from uniqdim.graphs.core import Graph, distances
from uniqdim.solver.resolving import representation


def _resolves(dist, n: int, w_set: tuple[int, ...]) -> bool:
    reps = {representation(dist, v, w_set) for v in range(n)}
    return len(reps) == n


def naive_metric_dimension(g: Graph) -> int:
    d = distances(g)
    for k in range(g.n + 1):
        for w_set in combinations(range(g.n), k):
            if _resolves(d, g.n, w_set):
                return k
    return g.n


def naive_all_bases(g: Graph) -> list[tuple[int, ...]]:
    d = distances(g)
    k = naive_metric_dimension(g)
    return [w for w in combinations(range(g.n), k) if _resolves(d, g.n, w)]
