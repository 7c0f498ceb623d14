"""
Line-oriented result records.

Audit records are tab-separated with a fixed column order:

    graph6  n  k  d  g  unique  <one verdict column per catalog check>

g is ``acyclic`` for trees, unique is ``true``/``false``, verdicts are
``pass``/``fail``/``na``. A graph that could not be audited yields
``ERROR<TAB>graph6<TAB>message``. At most one ``FAIL<TAB>...`` line is written,
right before the summary block. Comment lines start with ``#``.
"""
from typing import Optional

from uniqdim.verifier.checks import CheckResult, check_ids
from uniqdim.verifier.n0 import N0Result
from uniqdim.verifier.sweep import AuditRecord, AuditSummary


def bool_text(value: Optional[bool]) -> str:
    if value is None:
        return 'n/a'
    return 'true' if value else 'false'


def girth_text(g: Optional[int]) -> str:
    return 'acyclic' if g is None else str(g)


def audit_header() -> str:
    return '#' + '\t'.join(['graph6', 'n', 'k', 'd', 'g', 'unique'] + check_ids())


def audit_record_line(record: AuditRecord) -> str:
    if record.error is not None:
        return f"ERROR\t{record.graph6}\t{record.error}"
    p = record.report.profile
    verdicts = [r.verdict.value for r in record.report.results]
    fields = [record.graph6, str(p.n), str(p.dimension), str(p.diameter), girth_text(p.girth), bool_text(p.unique)]
    return '\t'.join(fields + verdicts)


def fail_line(subject: str, detail: str, witness: str = '') -> str:
    parts = ['FAIL', subject, detail]
    if witness:
        parts.append(witness)
    return '\t'.join(parts)


def check_fail_line(graph6: str, result: CheckResult) -> str:
    return fail_line(graph6, result.check_id, result.witness_text())


def audit_summary_lines(summary: AuditSummary) -> list[str]:
    lines = []
    if summary.first_failure is not None:
        lines.append(check_fail_line(*summary.first_failure))
    elif summary.first_error is not None:
        lines.append(fail_line(summary.first_error.graph6, 'error', summary.first_error.error))
    lines.append(
        f"summary\tgraphs={summary.graphs}\terrors={summary.errors}\t"
        f"failed={summary.failed_graphs}\tstopped_early={bool_text(summary.stopped_early)}"
    )
    for check_id, tally in summary.tallies.items():
        lines.append(
            f"check\t{check_id}\tpass={tally.passed}\tfail={tally.failed}\tna={tally.not_applicable}"
        )
    return lines


def n0_lines(result: N0Result) -> list[str]:
    """The per-order table, the bounds and the ``n0=`` line."""
    lines = [
        f"# k={result.k} mode={result.mode}",
        '#' + '\t'.join(['order', 'graphs', 'hits', 'skipped', 'errors', 'example']),
    ]
    for oc in result.orders:
        lines.append('\t'.join([
            str(oc.order), str(oc.graphs), str(oc.hits), bool_text(oc.skipped), str(oc.errors), oc.exemplar or '-',
        ]))
    if result.mode == 'stream':
        lines.append(f"malformed\t{result.malformed}")
    lines.append(
        f"bounds\tlower={result.lower_bound}\tdiameter_lower={result.diameter_bound}\tupper={result.upper_bound}"
    )
    if not result.consistent:
        lines.append(fail_line(f"k={result.k}", 'n0_below_2k+1', f"n0={result.n0}"))
    if result.n0 is not None:
        lines.append(f"n0={result.n0}")
    else:
        top = result.max_order if result.max_order is not None else max((oc.order for oc in result.orders), default=0)
        lines.append(f"n0=none(<={top})")
    return lines
