"""
n0(k): the least order of a uniquely k-dimensional graph.

``search_n0`` scans the built-in enumeration order by order (labeled graphs
or one graph per isomorphism class); ``scan_n0_stream`` counts over an
external graph6 stream for orders beyond the enumerator, with a JSON
checkpoint so long runs can resume. Per order the result records the
number of graphs scanned, the number of hits and the least exemplar.
"""
import json
from dataclasses import asdict, dataclass, field
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, Literal, Optional

from uniqdim.common.config import ENUMERATION_CAP
from uniqdim.common.exceptions import GraphError, SearchError
from uniqdim.common.sweep import BaseSweep
from uniqdim.constructions.families import five_halves_order
from uniqdim.graphs.core import Graph, is_connected
from uniqdim.graphs.enumerate import MaskRange, mask_ranges
from uniqdim.graphs.formats import emit_graph6, parse_graph6
from uniqdim.solver.basis import is_uniquely_k_dimensional
from uniqdim.verifier.sweep import LineBatch

Mode = Literal['labeled', 'classes', 'stream']

# Worker bucket for lines that are not graph6; parsed graphs have order >= 1.
MALFORMED = 0


@dataclass
class OrderCount:
    order: int
    graphs: int = 0
    hits: int = 0
    exemplar: Optional[str] = None
    skipped: bool = False
    errors: int = 0


@dataclass
class N0Result:
    """
    Per-order counts of uniquely k-dimensional connected graphs.

    ``lower_bound`` is 2k+1, ``diameter_bound`` max(2k+1, k+4) (β <= n-d-2
    with d >= 2) and ``upper_bound`` ⌈5k/2⌉+1. ``consistent`` is False when
    a hit appears at an order <= 2k. ``malformed`` counts stream lines that
    were not graph6 at all and so belong to no order.
    """
    k: int
    mode: Mode
    max_order: Optional[int]
    orders: list[OrderCount] = field(default_factory=list)
    malformed: int = 0

    @property
    def n0(self) -> Optional[int]:
        for oc in self.orders:
            if oc.hits:
                return oc.order
        return None

    @property
    def lower_bound(self) -> int:
        return 2 * self.k + 1

    @property
    def diameter_bound(self) -> int:
        return max(2 * self.k + 1, self.k + 4)

    @property
    def upper_bound(self) -> int:
        return five_halves_order(self.k)

    @property
    def consistent(self) -> bool:
        return all(oc.hits == 0 for oc in self.orders if oc.order <= 2 * self.k)

    def order(self, n: int) -> OrderCount:
        for oc in self.orders:
            if oc.order == n:
                return oc
        raise KeyError(n)


def count_unique_in_range(task: tuple[int, MaskRange]) -> tuple[int, int, Optional[int]]:
    """Worker: (graphs scanned, hits, least hit mask) over one mask range."""
    k, batch = task
    graphs = 0
    hits = 0
    least = None
    for mask in batch.masks():
        graphs += 1
        if is_uniquely_k_dimensional(Graph.from_edge_mask(batch.n, mask), k):
            hits += 1
            if least is None:
                least = mask
    return graphs, hits, least


class N0Sweep(BaseSweep):
    """Scan orders 2..max_order of the built-in enumeration."""

    worker = staticmethod(count_unique_in_range)

    def __init__(
        self,
        k: int,
        max_order: int,
        dedup: bool = False,
        skip_below_bound: bool = False,
        batch_size: Optional[int] = None,
        jobs: Optional[int] = None,
        progress: Optional[bool] = None,
    ):
        super().__init__(sweep_name='search_n0', jobs=jobs, progress=progress)
        self.batch_size = batch_size or self.settings.search.batch_size
        self.result = N0Result(k, 'classes' if dedup else 'labeled', max_order)
        self._tasks: list[tuple[int, MaskRange]] = []
        for n in range(2, max_order + 1):
            oc = OrderCount(n, skipped=skip_below_bound and n < 2 * k + 1)
            self.result.orders.append(oc)
            if not oc.skipped:
                self._tasks += [(k, r) for r in mask_ranges(n, self.batch_size, dedup)]

    def get_items(self) -> list[tuple[int, MaskRange]]:
        return self._tasks

    def total_batches(self) -> int:
        return len(self._tasks)

    def reduce(self, batch: tuple[int, MaskRange], result: tuple[int, int, Optional[int]]) -> None:
        _, r = batch
        graphs, hits, least = result
        oc = self.result.order(r.n)
        oc.graphs += graphs
        oc.hits += hits
        # ranges arrive ascending, so the first hit is the least mask
        if least is not None and oc.exemplar is None:
            oc.exemplar = emit_graph6(Graph.from_edge_mask(r.n, least))
        self.stats.record_batch(graphs)

    def on_error(self, batch, error: Exception) -> None:
        # A lost batch makes the counts wrong; do not report partial numbers.
        raise SearchError(f"search_n0 batch failed: {error}", context={'order': batch[1].n}) from error


def search_n0(
    k: int,
    max_order: int,
    dedup: bool = False,
    skip_below_bound: bool = False,
    jobs: Optional[int] = None,
    progress: Optional[bool] = None,
) -> N0Result:
    """
    Count uniquely k-dimensional connected graphs for each order 2..max_order.

    Orders below 2k+1 are scanned unless ``skip_below_bound`` is set.

    Raises:
        SearchError: k < 1 or max_order outside 2..8
    """
    if k < 1:
        raise SearchError(f"k must be >= 1, got {k}", context={'k': k})
    if not 2 <= max_order <= ENUMERATION_CAP:
        raise SearchError(
            f"max_order must be in 2..{ENUMERATION_CAP}; scan larger orders from a graph6 stream",
            context={'max_order': max_order}
        )
    sweep = N0Sweep(k, max_order, dedup, skip_below_bound, jobs=jobs, progress=progress)
    sweep.run()
    result = sweep.result
    if not result.consistent:
        sweep.logger.error(f"Uniquely {k}-dimensional graph found at order <= 2k", n0=result.n0)
    return result


def count_unique_in_lines(task: tuple[int, LineBatch]) -> dict[int, tuple[int, int, Optional[str], int]]:
    """Worker: per order, (graphs, hits, least hit graph6, errors) over a batch of lines."""
    k, batch = task
    counts: dict[int, list] = {}
    for line in batch.lines:
        try:
            g = parse_graph6(line)
        except GraphError:
            counts.setdefault(MALFORMED, [0, 0, None, 0])[3] += 1
            continue
        entry = counts.setdefault(g.n, [0, 0, None, 0])
        if not is_connected(g):
            entry[3] += 1
            continue
        entry[0] += 1
        if is_uniquely_k_dimensional(g, k):
            entry[1] += 1
            if entry[2] is None or line < entry[2]:
                entry[2] = line
    return {n: tuple(v) for n, v in counts.items()}


def _content(lines: Iterable[str]) -> Iterator[str]:
    for raw in lines:
        line = raw.strip()
        if line and not line.startswith('#') and not line.startswith('>>'):
            yield line


class StreamN0Sweep(BaseSweep):
    """Count over an external graph6 stream, checkpointing every ``checkpoint_every`` lines."""

    worker = staticmethod(count_unique_in_lines)

    def __init__(
        self,
        k: int,
        lines: Iterable[str],
        checkpoint: Optional[Path] = None,
        checkpoint_every: Optional[int] = None,
        batch_size: Optional[int] = None,
        jobs: Optional[int] = None,
        progress: Optional[bool] = None,
    ):
        super().__init__(sweep_name='scan_n0_stream', jobs=jobs, progress=progress)
        self.k = k
        self.lines = lines
        self.checkpoint = checkpoint
        self.checkpoint_every = checkpoint_every or self.settings.search.checkpoint_every
        self.batch_size = batch_size or self.settings.search.batch_size
        self.result = N0Result(k, 'stream', None)
        self.position = 0
        self._since_checkpoint = 0
        if checkpoint is not None and checkpoint.exists():
            self._resume(checkpoint)

    def _resume(self, path: Path) -> None:
        state = json.loads(path.read_text(encoding='utf-8'))
        if state.get('k') != self.k:
            raise SearchError(
                f"Checkpoint {path} is for k={state.get('k')}, not k={self.k}",
                context={'checkpoint': str(path)}
            )
        self.position = int(state['line'])
        self.result.orders = [OrderCount(**oc) for oc in state['orders']]
        self.result.malformed = int(state.get('malformed', 0))
        self.logger.info(f"Resuming from line {self.position}", order=len(self.result.orders))

    def write_checkpoint(self) -> None:
        if self.checkpoint is None:
            return
        state = {
            'k': self.k,
            'line': self.position,
            'orders': [asdict(oc) for oc in self.result.orders],
            'malformed': self.result.malformed,
        }
        tmp = self.checkpoint.with_suffix('.tmp')
        tmp.write_text(json.dumps(state, indent=2, sort_keys=True), encoding='utf-8')
        tmp.replace(self.checkpoint)
        self._since_checkpoint = 0

    def get_items(self) -> Iterator[tuple[int, LineBatch]]:
        content = _content(self.lines)
        for _ in islice(content, self.position):
            pass
        start = self.position
        while True:
            chunk = tuple(islice(content, self.batch_size))
            if not chunk:
                return
            yield self.k, LineBatch(start, chunk)
            start += len(chunk)

    def _order(self, n: int) -> OrderCount:
        for oc in self.result.orders:
            if oc.order == n:
                return oc
        oc = OrderCount(n)
        self.result.orders.append(oc)
        self.result.orders.sort(key=lambda o: o.order)
        return oc

    def reduce(self, batch: tuple[int, LineBatch], result: dict) -> None:
        _, lines = batch
        failures = 0
        for n, (graphs, hits, least, errors) in result.items():
            failures += errors
            if n == MALFORMED:
                self.result.malformed += errors
                continue
            oc = self._order(n)
            oc.graphs += graphs
            oc.hits += hits
            oc.errors += errors
            if least is not None and (oc.exemplar is None or least < oc.exemplar):
                oc.exemplar = least
        self.position = lines.start + len(lines)
        self._since_checkpoint += len(lines)
        self.stats.record_batch(len(lines), failures)
        if self._since_checkpoint >= self.checkpoint_every:
            self.write_checkpoint()

    def on_error(self, batch, error: Exception) -> None:
        self.write_checkpoint()
        raise SearchError(f"Stream scan failed near line {batch[1].start}: {error}") from error


def scan_n0_stream(
    k: int,
    lines: Iterable[str],
    checkpoint: Optional[Path] = None,
    checkpoint_every: Optional[int] = None,
    jobs: Optional[int] = None,
    progress: Optional[bool] = None,
) -> N0Result:
    """
    Count uniquely k-dimensional graphs in a graph6 stream, per order.

    Disconnected lines are counted as errors of their order and lines that
    are not graph6 as ``malformed``; neither counts as a graph. With
    ``checkpoint`` set, progress is saved as JSON and a rerun resumes after
    the last saved line.
    """
    sweep = StreamN0Sweep(k, lines, checkpoint, checkpoint_every, jobs=jobs, progress=progress)
    sweep.run()
    sweep.write_checkpoint()
    return sweep.result
