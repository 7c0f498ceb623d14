"""
Exact metric dimension and metric-basis enumeration.

Metric bases are the minimum hitting sets of the pair-distinguisher masks.
The search walks cardinalities upward from the twin lower bound to a greedy
upper bound (with ``order_bound_pruning`` set, from no lower than the smallest
k with n <= k + d^k; audits never use it). Within one cardinality it enumerates
k-subsets in lexicographic order by depth-first search with three cuts:

- every unhit set must still meet the vertices not yet passed over;
- the next vertex cannot exceed the largest usable element of any unhit set;
- a greedy packing of disjoint unhit sets must fit in the remaining budget.
"""
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from uniqdim.common.config import get_settings
from uniqdim.common.exceptions import SolverError
from uniqdim.common.logger import get_run_logger
from uniqdim.graphs.core import (
    DistanceMatrix,
    Graph,
    TwinClasses,
    check_distance_axioms,
    diameter,
    distances,
    iter_bits,
    twin_classes,
)
from uniqdim.solver.resolving import PairDistinguishers, is_resolving, pair_distinguishers

logger = get_run_logger(__name__, 'solver')

Basis = tuple[int, ...]


@dataclass(frozen=True)
class BasisReport:
    """
    Result of a complete basis enumeration.

    ``randomly_k`` is None when it was not evaluated (large n).
    ``trivial`` marks K1, whose dimension 0 / empty basis is a convention.
    """
    n: int
    dimension: int
    bases: tuple[Basis, ...]
    randomly_k: Optional[bool]
    trivial: bool = False

    @property
    def unique(self) -> bool:
        return len(self.bases) == 1

    @property
    def count(self) -> int:
        return len(self.bases)


def twin_lower_bound(classes: TwinClasses) -> int:
    """Σ(|class| - 1): a resolving set misses at most one vertex per twin class."""
    return sum(len(c) - 1 for c in classes.classes)


def order_lower_bound(n: int, d: int) -> int:
    """Smallest k with n <= k + d^k."""
    k = 0
    while n > k + d ** k:
        k += 1
    return k


def greedy_hitting_set(sets: tuple[int, ...]) -> int:
    """Mask of a hitting set built by repeatedly taking the vertex in most unhit sets (lowest index on ties)."""
    chosen = 0
    unhit = list(sets)
    while unhit:
        counts: dict[int, int] = {}
        for s in unhit:
            for v in iter_bits(s):
                counts[v] = counts.get(v, 0) + 1
        best = min(counts, key=lambda v: (-counts[v], v))
        chosen |= 1 << best
        unhit = [s for s in unhit if not s >> best & 1]
    return chosen


def _packing_bound(unhit: list[int]) -> int:
    """Size of a greedy family of pairwise disjoint sets; each needs its own vertex."""
    used = 0
    count = 0
    for s in sorted(unhit, key=lambda m: m.bit_count()):
        if not s & used:
            used |= s
            count += 1
    return count


def hitting_sets_of_size(sets: tuple[int, ...], n: int, k: int) -> Iterator[int]:
    """
    All k-vertex masks meeting every set, in lexicographic order of sorted vertices.
    """
    full = (1 << n) - 1

    def extend(start: int, chosen: int, budget: int, unhit: list[int]) -> Iterator[int]:
        if not unhit:
            if budget == 0:
                yield chosen
                return
            # Already resolving: any completion by larger vertices works.
            yield from _completions(chosen, start, n, budget)
            return
        if budget == 0:
            return
        allowed = full & ~((1 << start) - 1)
        ceiling = n - 1
        for s in unhit:
            usable = s & allowed
            if not usable:
                return
            top = usable.bit_length() - 1
            if top < ceiling:
                ceiling = top
        restricted = [s & allowed for s in unhit]
        if _packing_bound(restricted) > budget:
            return
        for v in range(start, ceiling + 1):
            if n - v < budget:
                return
            bit = 1 << v
            yield from extend(v + 1, chosen | bit, budget - 1, [s for s in unhit if not s & bit])

    yield from extend(0, 0, k, list(sets))


def _completions(chosen: int, start: int, n: int, budget: int) -> Iterator[int]:
    if budget == 0:
        yield chosen
        return
    for v in range(start, n - budget + 1):
        yield from _completions(chosen | (1 << v), v + 1, n, budget - 1)


@dataclass
class _Problem:
    g: Graph
    d: DistanceMatrix
    pd: PairDistinguishers
    lower: int
    upper: int


def _order_bound_enabled(order_bound: Optional[bool]) -> bool:
    return get_settings().solver.order_bound_pruning if order_bound is None else order_bound


def _prepare(g: Graph, d: Optional[DistanceMatrix] = None, order_bound: Optional[bool] = None) -> _Problem:
    d = d or distances(g)
    if get_settings().solver.self_check:
        check_distance_axioms(g, d)
    pd = pair_distinguishers(d)
    lower = twin_lower_bound(twin_classes(g))
    if _order_bound_enabled(order_bound):
        lower = max(lower, order_lower_bound(g.n, diameter(g, d)))
    upper = greedy_hitting_set(pd.minimal).bit_count()
    if lower > upper:
        raise SolverError(
            "Lower bound exceeds a known resolving set",
            context={'lower': lower, 'upper': upper, 'n': g.n}
        )
    return _Problem(g, d, pd, lower, upper)


def _dimension(p: _Problem) -> int:
    for k in range(p.lower, p.upper):
        if next(hitting_sets_of_size(p.pd.minimal, p.g.n, k), None) is not None:
            return k
    return p.upper


def metric_dimension(g: Graph, d: Optional[DistanceMatrix] = None, order_bound: Optional[bool] = None) -> int:
    """
    β(G), the size of a minimum resolving set.

    ``order_bound`` overrides the ``order_bound_pruning`` setting.

    Raises:
        DisconnectedGraphError: g is not connected
    """
    if g.n == 1:
        return 0
    return _dimension(_prepare(g, d, order_bound))


def _self_check(p: _Problem, basis_mask: int) -> None:
    """Spot-assert that a found basis resolves and stays resolving when enlarged."""
    basis = tuple(iter_bits(basis_mask))
    if not is_resolving(p.d, basis):
        raise SolverError("Hitting set is not resolving", context={'basis': basis})
    for v in range(p.g.n):
        if not basis_mask >> v & 1 and not is_resolving(p.d, basis + (v,)):
            raise SolverError("Resolving sets are not monotone", context={'basis': basis, 'added': v})


def iter_bases(
    g: Graph,
    d: Optional[DistanceMatrix] = None,
    order_bound: Optional[bool] = None,
) -> Iterator[Basis]:
    """Metric bases in lexicographic order, lazily."""
    if g.n == 1:
        yield ()
        return
    p = _prepare(g, d, order_bound)
    k = _dimension(p)
    check = get_settings().solver.self_check
    for mask in hitting_sets_of_size(p.pd.minimal, g.n, k):
        if check:
            _self_check(p, mask)
        yield tuple(iter_bits(mask))


def count_bases(
    g: Graph,
    limit: Optional[int] = None,
    d: Optional[DistanceMatrix] = None,
    order_bound: Optional[bool] = None,
) -> tuple[int, int]:
    """
    (dimension, number of bases), counting stops at ``limit``.

    ``count_bases(g, limit=2)[1] == 1`` decides uniqueness without a full enumeration.
    """
    if g.n == 1:
        return 0, 1
    p = _prepare(g, d, order_bound)
    k = _dimension(p)
    count = 0
    for _ in hitting_sets_of_size(p.pd.minimal, g.n, k):
        count += 1
        if limit is not None and count >= limit:
            break
    return k, count


def all_bases(
    g: Graph,
    d: Optional[DistanceMatrix] = None,
    evaluate_randomly_k: Optional[bool] = None,
) -> BasisReport:
    """
    Every metric basis of g, sorted, with uniqueness and randomly-k flags.

    ``randomly_k`` is evaluated when n is at most the configured maximum
    order, or whenever ``evaluate_randomly_k`` is True.
    """
    with logger.log_execution('all_bases', order=g.n):
        bases = tuple(iter_bases(g, d))
        k = len(bases[0])
        if evaluate_randomly_k is None:
            evaluate_randomly_k = g.n <= get_settings().solver.randomly_k_max_order
        randomly_k = len(bases) == comb(g.n, k) if evaluate_randomly_k else None
        if g.n == 1:
            logger.warning("K1: dimension 0 with the empty basis by convention", order=1)
        return BasisReport(g.n, k, bases, randomly_k, trivial=g.n == 1)


def is_uniquely_dimensional(g: Graph) -> bool:
    return count_bases(g, limit=2)[1] == 1


def is_uniquely_k_dimensional(g: Graph, k: int) -> bool:
    """
    True iff β(G) = k and the basis is unique.

    With ``order_bound_pruning`` set, n > k + d^k rejects early. A
    (k-1)-hitting set existing means β < k by monotonicity.
    """
    if g.n == 1:
        return k == 0
    if k < 1:
        return False
    d = distances(g)
    if _order_bound_enabled(None) and order_lower_bound(g.n, diameter(g, d)) > k:
        return False
    sets = pair_distinguishers(d).minimal
    if next(hitting_sets_of_size(sets, g.n, k - 1), None) is not None:
        return False
    count = 0
    for _ in hitting_sets_of_size(sets, g.n, k):
        count += 1
        if count > 1:
            return False
    return count == 1
