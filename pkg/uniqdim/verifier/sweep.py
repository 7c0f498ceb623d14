"""
Stream audits: run ``audit_graph`` over many graphs in batches.

Input is either graph6 lines (files, stdin, external generators) or the
built-in enumeration of one order. Per-graph errors become marked records;
the stream never stops silently.
"""
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Iterable, Iterator, Optional, Union

from uniqdim.common.exceptions import GraphError, UniqDimError
from uniqdim.common.sweep import BaseSweep
from uniqdim.graphs.core import Graph
from uniqdim.graphs.enumerate import MaskRange, mask_ranges
from uniqdim.graphs.formats import emit_graph6, parse_graph6
from uniqdim.verifier.checks import AuditReport, CheckResult, Verdict, audit_graph, check_ids


@dataclass(frozen=True)
class UnreadableItem:
    """An input item that could not be read into a graph."""
    label: str
    message: str

    @classmethod
    def from_error(cls, error: GraphError) -> "UnreadableItem":
        line = error.context.get('line')
        return cls(f"<line {line}>" if line is not None else "<unreadable>", error.message)


@dataclass(frozen=True)
class LineBatch:
    """Consecutive graph6 lines (or unreadable items); ``start`` is the stream index of the first."""
    start: int
    lines: tuple[Union[str, UnreadableItem], ...]

    def __len__(self) -> int:
        return len(self.lines)


Batch = Union[LineBatch, MaskRange]


@dataclass(frozen=True)
class AuditRecord:
    index: int
    graph6: str
    report: Optional[AuditReport] = None
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.report is not None and not self.report.passed


def _audit_one(index: int, graph6: Union[str, UnreadableItem], parse: bool, graph=None) -> AuditRecord:
    if isinstance(graph6, UnreadableItem):
        return AuditRecord(index, graph6.label, error=graph6.message)
    try:
        g = parse_graph6(graph6) if parse else graph
        return AuditRecord(index, graph6, report=audit_graph(g))
    except UniqDimError as e:
        return AuditRecord(index, graph6, error=e.message)


def audit_batch(batch: Batch) -> list[AuditRecord]:
    """Worker: audit every graph of one batch (module-level so it pickles)."""
    if isinstance(batch, LineBatch):
        return [_audit_one(batch.start + i, line, parse=True) for i, line in enumerate(batch.lines)]
    # Mask ranges are indexed by edge mask.
    records = []
    for mask in batch.masks():
        g = Graph.from_edge_mask(batch.n, mask)
        records.append(_audit_one(mask, emit_graph6(g), parse=False, graph=g))
    return records


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0

    def add(self, verdict: Verdict):
        if verdict == Verdict.PASS:
            self.passed += 1
        elif verdict == Verdict.FAIL:
            self.failed += 1
        else:
            self.not_applicable += 1


@dataclass
class AuditSummary:
    """Aggregate of an audit stream: counts per check plus the first failure."""
    graphs: int = 0
    errors: int = 0
    failed_graphs: int = 0
    tallies: dict[str, CheckTally] = field(default_factory=dict)
    first_failure: Optional[tuple[str, CheckResult]] = None
    first_error: Optional[AuditRecord] = None
    stopped_early: bool = False

    @property
    def passed(self) -> bool:
        return self.failed_graphs == 0 and self.errors == 0

    def add(self, record: AuditRecord):
        self.graphs += 1
        if record.error is not None:
            self.errors += 1
            if self.first_error is None:
                self.first_error = record
            return
        for result in record.report.results:
            self.tallies.setdefault(result.check_id, CheckTally()).add(result.verdict)
        if record.failed:
            self.failed_graphs += 1
            if self.first_failure is None:
                self.first_failure = (record.graph6, record.report.failures[0])


def _stream_item(item: Union[str, Graph, GraphError]) -> Union[str, UnreadableItem]:
    if isinstance(item, Graph):
        return emit_graph6(item)
    if isinstance(item, GraphError):
        return UnreadableItem.from_error(item)
    return item.strip()


def _is_content(line: Union[str, UnreadableItem]) -> bool:
    if isinstance(line, UnreadableItem):
        return True
    return bool(line) and not line.startswith('#') and not line.startswith('>>')


class AuditSweep(BaseSweep):
    """
    Audit sweep over graph6 lines or one enumerated order.

    Records reach ``on_record`` in input order. With ``fail_fast`` the
    sweep stops after the first failing record and drops the rest.
    """

    worker = staticmethod(audit_batch)

    def __init__(
        self,
        lines: Optional[Iterable[Union[str, Graph, GraphError]]] = None,
        exhaustive_order: Optional[int] = None,
        dedup: bool = False,
        fail_fast: bool = False,
        on_record: Optional[Callable[[AuditRecord], None]] = None,
        batch_size: Optional[int] = None,
        jobs: Optional[int] = None,
        progress: Optional[bool] = None,
    ):
        super().__init__(sweep_name='audit', jobs=jobs, progress=progress)
        if (lines is None) == (exhaustive_order is None):
            raise ValueError("AuditSweep needs exactly one of lines or exhaustive_order")
        self.lines = lines
        self.exhaustive_order = exhaustive_order
        self.dedup = dedup
        self.fail_fast = fail_fast
        self.on_record = on_record
        self.batch_size = batch_size or self.settings.search.batch_size
        self.summary = AuditSummary(tallies={cid: CheckTally() for cid in check_ids()})
        self._ranges = mask_ranges(exhaustive_order, self.batch_size, dedup) if exhaustive_order else None

    def get_items(self) -> Iterator[Batch]:
        if self._ranges is not None:
            yield from self._ranges
            return
        content = (line for line in map(_stream_item, self.lines) if _is_content(line))
        start = 0
        while True:
            chunk = tuple(islice(content, self.batch_size))
            if not chunk:
                return
            yield LineBatch(start, chunk)
            start += len(chunk)

    def total_batches(self) -> Optional[int]:
        return len(self._ranges) if self._ranges is not None else None

    def reduce(self, batch: Batch, result: list[AuditRecord]) -> None:
        failures = 0
        for record in result:
            if self.summary.stopped_early:
                break
            self.summary.add(record)
            if self.on_record is not None:
                self.on_record(record)
            if record.failed or record.error is not None:
                failures += 1
                if self.fail_fast:
                    self.summary.stopped_early = True
        self.stats.record_batch(len(result), failures)

    def should_stop(self) -> bool:
        return self.summary.stopped_early

    def on_error(self, batch: Batch, error: Exception) -> None:
        super().on_error(batch, error)
        self.summary.graphs += len(batch)
        self.summary.errors += len(batch)
        if self.fail_fast:
            self.summary.stopped_early = True


def audit_stream(
    graphs: Iterable[Union[str, Graph, GraphError]],
    fail_fast: bool = False,
    on_record: Optional[Callable[[AuditRecord], None]] = None,
    jobs: Optional[int] = None,
) -> AuditSummary:
    """
    Audit graphs (Graph objects or graph6 lines); the summary is independent of ``jobs``.

    GraphError items (from ``read_graphs(..., errors='yield')``) become ERROR records.
    """
    sweep = AuditSweep(lines=graphs, fail_fast=fail_fast, on_record=on_record, jobs=jobs)
    sweep.run()
    return sweep.summary


def audit_exhaustive(
    n: int,
    dedup: bool = False,
    fail_fast: bool = False,
    on_record: Optional[Callable[[AuditRecord], None]] = None,
    jobs: Optional[int] = None,
) -> AuditSummary:
    """Audit every connected graph of order n (one per class with ``dedup``)."""
    sweep = AuditSweep(exhaustive_order=n, dedup=dedup, fail_fast=fail_fast, on_record=on_record, jobs=jobs)
    sweep.run()
    return sweep.summary
