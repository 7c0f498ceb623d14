"""
Metric representations, resolving-set tests and the pair-distinguisher sets.

W resolves G exactly when it meets every D(u, v) = {w : d(u, w) != d(v, w)};
the solver searches for minimum hitting sets of these masks.
"""
from dataclasses import dataclass
from typing import Iterable, Sequence

from uniqdim.graphs.core import DistanceMatrix, mask_of

MetricVector = tuple[int, ...]


def representation(d: DistanceMatrix, v: int, w_set: Sequence[int]) -> MetricVector:
    """r(v | W): distances from v to each landmark, in landmark order."""
    row = d.dist[v]
    return tuple(row[w] for w in w_set)


def resolves_subset(d: DistanceMatrix, w_set: Sequence[int], t_set: Iterable[int]) -> bool:
    """True iff distinct vertices of T get distinct representations w.r.t. W."""
    seen = set()
    for v in t_set:
        r = representation(d, v, w_set)
        if r in seen:
            return False
        seen.add(r)
    return True


def is_resolving(d: DistanceMatrix, w_set: Iterable[int]) -> bool:
    """
    True iff every vertex has a distinct representation w.r.t. W.

    Each landmark is the only vertex with a 0 in its own coordinate, so only
    vertices outside W need comparing.
    """
    w_list = sorted(set(w_set))
    inside = mask_of(w_list)
    outside = (v for v in range(d.n) if not inside >> v & 1)
    return resolves_subset(d, w_list, outside)


@dataclass(frozen=True, slots=True)
class PairDistinguishers:
    """
    D(u, v) for every pair u < v, as vertex masks.

    ``pairs[i]`` is the i-th pair in (u, v) lexicographic order and
    ``masks[i]`` its distinguisher mask. ``minimal`` keeps only the
    inclusion-minimal distinct masks: hitting those hits all of them.
    """
    n: int
    pairs: tuple[tuple[int, int], ...]
    masks: tuple[int, ...]
    minimal: tuple[int, ...]

    def distinguisher(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        # pairs are in lexicographic order: index of (u, v) among all pairs
        index = u * (2 * self.n - u - 1) // 2 + (v - u - 1)
        return self.masks[index]

    def hits_all(self, w_mask: int) -> bool:
        return all(s & w_mask for s in self.minimal)


def _inclusion_minimal(masks: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for s in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


def pair_distinguishers(d: DistanceMatrix) -> PairDistinguishers:
    """
    Build D(u, v) for every pair from the BFS layers.

    The vertices with d(u, w) == d(v, w) are the union over i of
    Γ_i(u) ∩ Γ_i(v); D(u, v) is the complement.
    """
    n = d.n
    full = (1 << n) - 1
    pairs = []
    masks = []
    for u in range(n):
        lu = d.layers[u]
        for v in range(u + 1, n):
            lv = d.layers[v]
            equal = 0
            for i in range(min(len(lu), len(lv))):
                equal |= lu[i] & lv[i]
            pairs.append((u, v))
            masks.append(full & ~equal)
    return PairDistinguishers(n, tuple(pairs), tuple(masks), _inclusion_minimal(masks))


def hits_all(pd: PairDistinguishers, w_set: Iterable[int]) -> bool:
    """Hitting-set form of ``is_resolving``."""
    return pd.hits_all(mask_of(w_set))
