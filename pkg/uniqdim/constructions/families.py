"""
Uniquely k-dimensional graph families.

Every generator returns a ``ConstructedGraph``: the graph, the basis it is
designed around and the parameters the construction predicts. Vertex
numbering is fixed per family (U first, then W) so graph6 output is stable.
Predictions are claims; ``verify_constructed`` checks them with the solver.
"""
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from math import ceil
from typing import Literal, Optional

from uniqdim.common.config import VERTEX_CAP
from uniqdim.common.exceptions import ClaimFalsifiedError, ConstructionError
from uniqdim.common.logger import get_run_logger
from uniqdim.graphs.core import Graph, build_graph, degree, diameter, distances, max_degree
from uniqdim.graphs.formats import emit_graph6
from uniqdim.solver.basis import BasisReport, all_bases

logger = get_run_logger(__name__, 'constructions')


@dataclass(frozen=True)
class Prediction:
    """Parameters a construction promises; None means the construction says nothing."""
    order: int
    dimension: int
    diameter: Optional[int] = None
    max_degree: Optional[int] = None


@dataclass(frozen=True)
class ConstructedGraph:
    graph: Graph
    designated_basis: tuple[int, ...]
    predicted: Prediction
    family: str
    params: dict = field(default_factory=dict)
    labels: tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return self.graph.n

    def label(self, v: int) -> str:
        return self.labels[v] if v < len(self.labels) else str(v)

    def metadata_line(self) -> str:
        return (
            f"# family={self.family} k={self.predicted.dimension} "
            f"m={self.params.get('m', 0)} n={self.graph.n}"
        )


def _check_cap(order: int, family: str) -> None:
    if order > VERTEX_CAP:
        raise ConstructionError(
            f"{family}: order {order} exceeds the vertex cap {VERTEX_CAP}",
            context={'family': family, 'order': order}
        )


def construct_3k(k: int) -> ConstructedGraph:
    """
    Order 3k: U = {u1..uk} independent, W = {w1..w2k} a clique,
    u_k ~ w_2i for all i and u_i ~ w_2i-1, w_2i for i < k.

    Vertex u_i is i-1, w_j is k+j-1.
    """
    if not 2 <= k <= VERTEX_CAP // 3:
        raise ConstructionError(f"construct_3k needs 2 <= k <= {VERTEX_CAP // 3}, got {k}", context={'k': k})

    def u(i: int) -> int:
        return i - 1

    def w(j: int) -> int:
        return k + j - 1

    edges = [(w(a), w(b)) for a in range(1, 2 * k + 1) for b in range(a + 1, 2 * k + 1)]
    edges += [(u(k), w(2 * i)) for i in range(1, k + 1)]
    for i in range(1, k):
        edges += [(u(i), w(2 * i - 1)), (u(i), w(2 * i))]

    labels = tuple(f"u{i}" for i in range(1, k + 1)) + tuple(f"w{j}" for j in range(1, 2 * k + 1))
    return ConstructedGraph(
        graph=build_graph(3 * k, edges),
        designated_basis=tuple(range(k)),
        predicted=Prediction(order=3 * k, dimension=k),
        family='3k',
        params={'k': k},
        labels=labels,
    )


def construct_k_plus_3k(k: int) -> ConstructedGraph:
    """
    Order k + 3^k, diameter 3.

    W is every k-tuple over {1, 2, 3} (vertex k + position in
    ``itertools.product`` order). Two tuples are adjacent when they differ
    in exactly one coordinate and by exactly one there; (2, ..., 2) is also
    joined to all of W. w ~ u_i iff coordinate i of w is 1.
    """
    order = k + 3 ** k
    if k < 2:
        raise ConstructionError(f"construct_k_plus_3k needs k >= 2, got {k}", context={'k': k})
    _check_cap(order, 'kplus3k')

    tuples = list(product((1, 2, 3), repeat=k))
    index = {t: k + i for i, t in enumerate(tuples)}
    center = index[(2,) * k]

    edges = []
    for a, x in enumerate(tuples):
        for y in tuples[a + 1:]:
            diffs = [abs(p - q) for p, q in zip(x, y) if p != q]
            if diffs == [1]:
                edges.append((index[x], index[y]))
    # duplicates with the tuple rule collapse in build_graph
    edges += [(center, index[t]) for t in tuples if index[t] != center]
    for t in tuples:
        edges += [(i, index[t]) for i in range(k) if t[i] == 1]

    labels = tuple(f"u{i}" for i in range(1, k + 1)) + tuple(
        "(" + ",".join(map(str, t)) + ")" for t in tuples
    )
    return ConstructedGraph(
        graph=build_graph(order, edges),
        designated_basis=tuple(range(k)),
        predicted=Prediction(order=order, dimension=k, diameter=3),
        family='kplus3k',
        params={'k': k},
        labels=labels,
    )


def tuple_vertex(k: int, t: tuple[int, ...]) -> int:
    """Vertex index of tuple ``t`` in ``construct_k_plus_3k(k)``."""
    return k + list(product((1, 2, 3), repeat=k)).index(tuple(t))


def construct_order9() -> ConstructedGraph:
    """
    Uniquely 3-dimensional graph of order 9 with maximum degree 8.

    u1..u3 are 0..2 and w1..w6 are 3..8; W is a clique and u_i ~ w_j for
    j in {i, i+1, 6}.
    """
    def w(j: int) -> int:
        return 2 + j

    edges = [(w(a), w(b)) for a in range(1, 7) for b in range(a + 1, 7)]
    for i in range(1, 4):
        edges += [(i - 1, w(j)) for j in (i, i + 1, 6)]

    return ConstructedGraph(
        graph=build_graph(9, edges),
        designated_basis=(0, 1, 2),
        predicted=Prediction(order=9, dimension=3, diameter=2, max_degree=8),
        family='order9',
        params={'k': 3},
        labels=('u1', 'u2', 'u3', 'w1', 'w2', 'w3', 'w4', 'w5', 'w6'),
    )


def universal_vertex(c: ConstructedGraph) -> int:
    """
    Lowest-index vertex of degree n-1 outside the designated basis.

    Raises:
        ConstructionError: no such vertex
    """
    g = c.graph
    universal = [v for v in range(g.n) if degree(g, v) == g.n - 1]
    outside = [v for v in universal if v not in c.designated_basis]
    if not outside:
        raise ConstructionError(
            f"{c.family}: no universal vertex outside the basis",
            context={'family': c.family, 'universal': universal}
        )
    return outside[0]


def join_identify(a: ConstructedGraph, b: ConstructedGraph) -> ConstructedGraph:
    """
    Join a and b completely, then merge their universal vertices into v0.

    a keeps its numbering (v0 is a's universal vertex); b's other vertices
    follow in order. The basis is the union of both designated bases.
    """
    v1 = universal_vertex(a)
    v2 = universal_vertex(b)
    n1, n2 = a.n, b.n
    order = n1 + n2 - 1
    _check_cap(order, 'join')

    mapping = {}
    nxt = n1
    for y in range(n2):
        if y == v2:
            mapping[y] = v1
        else:
            mapping[y] = nxt
            nxt += 1

    edges = list(a.graph.edges())
    edges += [(mapping[x], mapping[y]) for x, y in b.graph.edges()]
    a_side = [x for x in range(n1) if x != v1]
    b_side = [mapping[y] for y in range(n2) if y != v2]
    edges += [(x, y) for x in a_side for y in b_side]

    labels = [a.label(x) if x != v1 else 'v0' for x in range(n1)]
    labels += [f"{b.label(y)}'" for y in range(n2) if y != v2]

    basis = tuple(sorted(a.designated_basis + tuple(mapping[y] for y in b.designated_basis)))
    return ConstructedGraph(
        graph=build_graph(order, edges),
        designated_basis=basis,
        predicted=Prediction(
            order=order,
            dimension=a.predicted.dimension + b.predicted.dimension,
            max_degree=order - 1,
        ),
        family='join',
        params={'k': a.predicted.dimension + b.predicted.dimension, 'parts': (a.family, b.family)},
        labels=tuple(labels),
    )


def five_halves_order(k: int) -> int:
    """⌈5k/2⌉ + 1."""
    return ceil(5 * k / 2) + 1


def construct_5k_half(k: int, base6: Optional[ConstructedGraph] = None) -> ConstructedGraph:
    """
    Order ⌈5k/2⌉ + 1 by folding ``join_identify``.

    k = 2k': k' copies of the order-6 base graph.
    k = 2k'+1: k'-1 copies of it and one order-9 graph.
    """
    if k < 2:
        raise ConstructionError(f"construct_5k_half needs k >= 2, got {k}", context={'k': k})
    _check_cap(five_halves_order(k), 'fivehalves')

    copies = k // 2 if k % 2 == 0 else k // 2 - 1
    if copies and base6 is None:
        from uniqdim.constructions.base6 import find_base6
        base6 = find_base6()
    parts = [base6] * copies
    if k % 2:
        parts.append(construct_order9())
    c = reduce(join_identify, parts)

    return ConstructedGraph(
        graph=c.graph,
        designated_basis=c.designated_basis,
        predicted=Prediction(order=five_halves_order(k), dimension=k, max_degree=c.predicted.max_degree),
        family='fivehalves',
        params={'k': k},
        labels=c.labels,
    )


def extension_anchor(c: ConstructedGraph, u: int, prefer: Literal['lowest', 'highest'] = 'lowest') -> int:
    """The vertex outside the basis farthest from u, ties by index preference."""
    d = distances(c.graph)
    candidates = [v for v in range(c.n) if v not in c.designated_basis]
    if not candidates:
        raise ConstructionError("No vertex outside the basis to extend from", context={'family': c.family})
    far = max(d[v][u] for v in candidates)
    ties = [v for v in candidates if d[v][u] == far]
    return ties[0] if prefer == 'lowest' else ties[-1]


def extend_by_path(
    c: ConstructedGraph,
    m: int,
    u: Optional[int] = None,
    prefer: Literal['lowest', 'highest'] = 'lowest',
) -> ConstructedGraph:
    """
    Attach a path of m new vertices at v0, the non-basis vertex farthest from u.

    Path vertices are n..n+m-1 with n adjacent to v0. The designated basis
    is unchanged.

    Raises:
        ConstructionError: m < 1, u not in the basis or order above the cap
    """
    if m < 1:
        raise ConstructionError(f"extend_by_path needs m >= 1, got {m}", context={'m': m})
    if u is None:
        u = c.designated_basis[0]
    if u not in c.designated_basis:
        raise ConstructionError(
            f"Vertex {u} is not in the basis {c.designated_basis}",
            context={'u': u, 'basis': c.designated_basis}
        )
    if prefer not in ('lowest', 'highest'):
        raise ConstructionError(f"prefer must be 'lowest' or 'highest', got {prefer!r}")
    order = c.n + m
    _check_cap(order, 'extend')

    v0 = extension_anchor(c, u, prefer)
    path = [v0] + list(range(c.n, order))
    edges = list(c.graph.edges()) + list(zip(path, path[1:]))

    labels = list(c.labels or (str(v) for v in range(c.n)))
    labels += [f"p{j}" for j in range(1, m + 1)]
    logger.debug(f"Extending {c.family} at v0={v0}", order=order)
    return ConstructedGraph(
        graph=build_graph(order, edges),
        designated_basis=c.designated_basis,
        predicted=Prediction(order=order, dimension=c.predicted.dimension),
        family=c.family,
        params={**c.params, 'm': c.params.get('m', 0) + m, 'u': u, 'v0': v0},
        labels=tuple(labels),
    )


def verify_constructed(c: ConstructedGraph, report: Optional[BasisReport] = None) -> BasisReport:
    """
    Check a construction's claims with the exact solver.

    Raises:
        ClaimFalsifiedError: the designated basis is not the unique basis,
            or an order / dimension / diameter / max-degree prediction fails;
            the context carries the computed values
    """
    g = c.graph
    report = report or all_bases(g)
    witness = {
        'family': c.family,
        'graph6': emit_graph6(g),
        'designated_basis': c.designated_basis,
        'bases': report.bases[:5],
        'dimension': report.dimension,
    }
    p = c.predicted
    if g.n != p.order:
        raise ClaimFalsifiedError(f"{c.family}: order {g.n} != predicted {p.order}", context=witness)
    if report.dimension != p.dimension:
        raise ClaimFalsifiedError(
            f"{c.family}: dimension {report.dimension} != predicted {p.dimension}", context=witness
        )
    if report.bases != (tuple(c.designated_basis),):
        raise ClaimFalsifiedError(
            f"{c.family}: designated basis is not the unique metric basis ({report.count} bases)",
            context=witness
        )
    if p.diameter is not None and diameter(g) != p.diameter:
        raise ClaimFalsifiedError(f"{c.family}: diameter {diameter(g)} != predicted {p.diameter}", context=witness)
    if p.max_degree is not None and max_degree(g) != p.max_degree:
        raise ClaimFalsifiedError(
            f"{c.family}: max degree {max_degree(g)} != predicted {p.max_degree}", context=witness
        )
    logger.info(f"Verified {c.family}", order=g.n, graph6=witness['graph6'])
    return report
