"""
Graph representation, hop distances and classical invariants.

Vertices are 0..n-1. Adjacency is stored as one integer bit row per vertex,
and vertex sets are integer masks, so set algebra is single-word for n <= 64.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from uniqdim.common.config import VERTEX_CAP
from uniqdim.common.exceptions import DisconnectedGraphError, GraphError, SolverError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def pair_index(i: int, j: int) -> int:
    """Bit index of pair {i, j} in upper-triangle column-major order (graph6 order)."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


# PAIRS[b] is the pair whose edge bit is b; independent of n.
PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for j in range(1, VERTEX_CAP) for i in range(j)
)


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    ``rows[v]`` has bit u set iff u ~ v. Instances are immutable; use
    ``build_graph`` or ``Graph.from_rows`` for validated construction.
    """
    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        n = len(rows)
        _check_order(n)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"Row {v} references a vertex >= {n}", context={'vertex': v})
            if row >> v & 1:
                raise GraphError(f"Self-loop at vertex {v}", context={'vertex': v})
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"Asymmetric adjacency between {v} and {u}", context={'u': u, 'v': v})
        return cls(n, rows)

    @classmethod
    def from_edge_mask(cls, n: int, edge_mask: int) -> "Graph":
        """Graph whose edge set is the upper-triangle bitmask ``edge_mask``."""
        rows = [0] * n
        while edge_mask:
            low = edge_mask & -edge_mask
            i, j = PAIRS[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            edge_mask ^= low
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_mask(self) -> int:
        mask = 0
        for j in range(1, self.n):
            for i in iter_bits(self.rows[j] & ((1 << j) - 1)):
                mask |= 1 << pair_index(i, j)
        return mask

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a


def _check_order(n: int) -> None:
    if not 1 <= n <= VERTEX_CAP:
        raise GraphError(f"Order {n} outside 1..{VERTEX_CAP}", context={'n': n})


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """
    Build a graph from an edge list; duplicate edges collapse.

    Raises:
        GraphError: self-loop, vertex index >= n, or n above the cap
    """
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"Self-loop at vertex {u}", context={'vertex': u})
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) references a vertex outside 0..{n - 1}", context={'edge': (u, v), 'n': n})
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def degree(g: Graph, v: int) -> int:
    return g.rows[v].bit_count()


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.rows)


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.rows)


def reachable_mask(g: Graph, source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable_mask(g, 0) == g.full_mask


@dataclass(frozen=True, slots=True)
class DistanceMatrix:
    """
    All-pairs hop distances.

    ``layers[v][i]`` is the vertex mask of Γ_i(v); ``dist[u][v]`` is d(u, v).
    """
    n: int
    dist: tuple[tuple[int, ...], ...]
    layers: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.dist[u]

    def eccentricity(self, v: int) -> int:
        return len(self.layers[v]) - 1

    def as_array(self) -> np.ndarray:
        a = np.array(self.dist, dtype=np.int16)
        a.setflags(write=False)
        return a


def distances(g: Graph) -> DistanceMatrix:
    """
    BFS from every vertex.

    Raises:
        DisconnectedGraphError: names a source and a vertex it cannot reach
    """
    full = g.full_mask
    rows = g.rows
    dist = []
    layers = []
    for s in range(g.n):
        frontier = seen = 1 << s
        levels = [frontier]
        while True:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            nxt &= ~seen
            if not nxt:
                break
            levels.append(nxt)
            seen |= nxt
            frontier = nxt
        if seen != full:
            missing = ((full & ~seen) & -(full & ~seen)).bit_length() - 1
            raise DisconnectedGraphError(s, missing)
        row = [0] * g.n
        for i, level in enumerate(levels):
            for v in iter_bits(level):
                row[v] = i
        dist.append(tuple(row))
        layers.append(tuple(levels))
    return DistanceMatrix(g.n, tuple(dist), tuple(layers))


def diameter(g: Graph, d: Optional[DistanceMatrix] = None) -> int:
    d = d or distances(g)
    return max(d.eccentricity(v) for v in range(g.n))


def girth(g: Graph, d: Optional[DistanceMatrix] = None) -> Optional[int]:
    """
    Length of a shortest cycle, or None when g is acyclic.

    From each source s: a vertex at level i with two parents closes an even
    cycle of length <= 2i, an edge inside level i an odd one of length <= 2i+1.
    The minimum over all sources is exact.
    """
    d = d or distances(g)
    best = None
    for s in range(g.n):
        levels = d.layers[s]
        for i in range(1, len(levels)):
            for v in iter_bits(levels[i]):
                row = g.rows[v]
                if (row & levels[i - 1]).bit_count() >= 2:
                    cand = 2 * i
                elif row & levels[i]:
                    cand = 2 * i + 1
                else:
                    continue
                if best is None or cand < best:
                    best = cand
    return best


def gamma_mask(d: DistanceMatrix, v: int, i: int) -> int:
    levels = d.layers[v]
    return levels[i] if 0 <= i < len(levels) else 0


def gamma(g: Graph, d: DistanceMatrix, v: int, i: int) -> frozenset[int]:
    """Γ_i(v): the vertices at distance exactly i from v."""
    if not 0 <= v < g.n:
        raise GraphError(f"Vertex {v} outside 0..{g.n - 1}", context={'vertex': v})
    return frozenset(iter_bits(gamma_mask(d, v, i)))


def are_twins(g: Graph, u: int, v: int) -> bool:
    """N(u) \\ {v} == N(v) \\ {u}."""
    return g.rows[u] & ~(1 << v) == g.rows[v] & ~(1 << u)


@dataclass(frozen=True, slots=True)
class TwinClasses:
    """Partition of the vertices into maximal classes of mutual twins."""
    classes: tuple[tuple[int, ...], ...]

    @property
    def has_twins(self) -> bool:
        return any(len(c) >= 2 for c in self.classes)

    def sizes(self) -> list[int]:
        return sorted((len(c) for c in self.classes), reverse=True)

    def nontrivial(self) -> list[tuple[int, ...]]:
        return [c for c in self.classes if len(c) >= 2]


def twin_classes(g: Graph) -> TwinClasses:
    """
    Group vertices into twin classes.

    Classes are closed under the pairwise relation (union-find) and then
    re-checked pairwise, so a non-transitive relation raises rather than
    producing a wrong partition.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if are_twins(g, u, v):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)

    classes = tuple(tuple(members) for _, members in sorted(groups.items()))
    for members in classes:
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if not are_twins(g, members[a], members[b]):
                    raise GraphError(
                        "Twin relation is not transitive",
                        context={'u': members[a], 'v': members[b], 'class': members}
                    )
    return TwinClasses(classes)


def check_distance_axioms(g: Graph, d: DistanceMatrix) -> None:
    """
    Verify zero diagonal, symmetry, triangle inequality and dist == 1 <=> adjacent.

    Raises:
        SolverError: on the first violated axiom, with the offending entry
    """
    a = d.as_array().astype(np.int32)
    n = g.n
    if np.any(np.diag(a) != 0):
        v = int(np.flatnonzero(np.diag(a))[0])
        raise SolverError("Nonzero diagonal distance", context={'vertex': v})
    if not np.array_equal(a, a.T):
        u, v = map(int, np.argwhere(a != a.T)[0])
        raise SolverError("Asymmetric distances", context={'u': u, 'v': v})
    off = ~np.eye(n, dtype=bool)
    if np.any(a[off] < 1) or np.any(a[off] > n - 1):
        raise SolverError("Off-diagonal distance outside 1..n-1")
    if not np.array_equal(a == 1, g.adjacency_matrix()):
        u, v = map(int, np.argwhere((a == 1) != g.adjacency_matrix())[0])
        raise SolverError("dist == 1 disagrees with adjacency", context={'u': u, 'v': v})
    # via[i, j, k] = d(i, j) + d(j, k) must dominate d(i, k)
    via = a[:, :, None] + a[None, :, :]
    bad = a[:, None, :] > via
    if np.any(bad):
        i, j, k = map(int, np.argwhere(bad)[0])
        raise SolverError("Triangle inequality violated", context={'i': i, 'j': j, 'k': k})
