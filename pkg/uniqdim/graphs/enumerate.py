"""
Exhaustive enumeration of small connected graphs.

Labeled graphs on n vertices are the integers 0 .. 2^(n(n-1)/2) - 1 read as
edge masks, so a scan is a walk over an integer range and any sub-range is
an independent work unit. Isomorphism classes are represented by their
canonical mask: the minimum edge mask over all n! relabelings.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from uniqdim.common.config import ENUMERATION_CAP, get_settings
from uniqdim.common.exceptions import SearchError
from uniqdim.graphs.core import Graph, PAIRS, pair_index

# Canonical masks are computed over blocks of (permutations x masks); keep a block small.
_BLOCK_CELLS = 1 << 21

_NIBBLE = 4


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def mask_count(n: int) -> int:
    """Number of labeled simple graphs on n vertices."""
    return 1 << pair_count(n)


def check_enumerable(n: int) -> None:
    if not 1 <= n <= ENUMERATION_CAP:
        raise SearchError(
            f"Built-in enumeration supports 1 <= n <= {ENUMERATION_CAP}, got {n}; "
            "feed larger orders as a graph6 stream instead",
            context={'n': n}
        )


def _connected_mask(n: int, mask: int) -> bool:
    """Connectivity straight from the edge mask, without building a Graph."""
    rows = [0] * n
    m = mask
    while m:
        low = m & -m
        i, j = PAIRS[low.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        m ^= low
    full = (1 << n) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def connected_masks(n: int, lo: int, hi: int) -> list[int]:
    """Edge masks in [lo, hi) whose graph is connected, ascending."""
    if n == 1:
        return [0] if lo <= 0 < hi else []
    need = n - 1
    return [
        mask for mask in range(lo, min(hi, mask_count(n)))
        if mask.bit_count() >= need and _connected_mask(n, mask)
    ]


@lru_cache(maxsize=None)
def _relabel_tables(n: int) -> np.ndarray:
    """
    Lookup tables for relabeling edge masks.

    ``tables[p, c, x]`` is the image, under permutation p, of the edge bits
    ``x << (4c)``. OR-ing the tables over the nibbles of a mask relabels it.
    """
    bits = pair_count(n)
    chunks = max(1, (bits + _NIBBLE - 1) // _NIBBLE)
    perms = list(itertools.permutations(range(n)))
    images = np.zeros((len(perms), chunks * _NIBBLE), dtype=np.int64)
    for p, perm in enumerate(perms):
        for b in range(bits):
            i, j = PAIRS[b]
            images[p, b] = 1 << pair_index(perm[i], perm[j])

    tables = np.zeros((len(perms), chunks, 1 << _NIBBLE), dtype=np.int64)
    for c in range(chunks):
        for x in range(1, 1 << _NIBBLE):
            low = (x & -x).bit_length() - 1
            tables[:, c, x] = tables[:, c, x & (x - 1)] | images[:, c * _NIBBLE + low]
    tables.setflags(write=False)
    return tables


def canonical_masks(n: int, masks: np.ndarray) -> np.ndarray:
    """Canonical (minimum over relabelings) mask for each entry of ``masks``."""
    check_enumerable(n)
    masks = np.asarray(masks, dtype=np.int64)
    if n == 1 or masks.size == 0:
        return masks.copy()
    tables = _relabel_tables(n)
    perms, chunks, _ = tables.shape
    step = max(1, _BLOCK_CELLS // perms)
    out = np.empty_like(masks)
    for start in range(0, masks.size, step):
        block = masks[start:start + step]
        relabeled = np.zeros((perms, block.size), dtype=np.int64)
        for c in range(chunks):
            nibble = (block >> (c * _NIBBLE)) & 0xF
            relabeled |= tables[:, c, nibble]
        out[start:start + step] = relabeled.min(axis=0)
    return out


def canonical_mask(g: Graph) -> int:
    return int(canonical_masks(g.n, np.array([g.edge_mask], dtype=np.int64))[0])


def is_canonical(g: Graph) -> bool:
    return canonical_mask(g) == g.edge_mask


def class_representatives(n: int, masks: list[int]) -> list[int]:
    """The masks (ascending input) that are the canonical member of their class."""
    if not masks:
        return []
    arr = np.array(masks, dtype=np.int64)
    keep = canonical_masks(n, arr) == arr
    return [int(m) for m in arr[keep]]


@dataclass(frozen=True)
class MaskRange:
    """A half-open range of labeled edge masks on n vertices (one work batch)."""
    n: int
    lo: int
    hi: int
    dedup: bool = False

    def masks(self) -> list[int]:
        found = connected_masks(self.n, self.lo, self.hi)
        return class_representatives(self.n, found) if self.dedup else found

    def graphs(self) -> Iterator[Graph]:
        for mask in self.masks():
            yield Graph.from_edge_mask(self.n, mask)

    def __len__(self) -> int:
        return self.hi - self.lo


def mask_ranges(n: int, batch_size: int, dedup: bool = False) -> list[MaskRange]:
    """Split the labeled mask space of order n into consecutive batches."""
    check_enumerable(n)
    total = mask_count(n)
    return [MaskRange(n, lo, min(lo + batch_size, total), dedup) for lo in range(0, total, batch_size)]


def enumerate_connected(n: int, dedup: bool = False, batch_size: Optional[int] = None) -> Iterator[Graph]:
    """
    Connected graphs on n vertices in ascending edge-mask order.

    With ``dedup`` only the canonical member of each isomorphism class is
    produced (still ascending). Masks are filtered ``batch_size`` at a time
    (default: the configured sweep batch size).

    Raises:
        SearchError: n outside 1..8
    """
    check_enumerable(n)
    for batch in mask_ranges(n, batch_size or get_settings().search.batch_size, dedup):
        yield from batch.graphs()
