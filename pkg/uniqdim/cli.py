"""
Command-line interface.

Exit status: 0 success / all checks pass, 1 a check failed or a uniqueness
claim was falsified (one ``FAIL<TAB>...`` line on stdout), 2 usage or input
error. Result records go to stdout, logs to stderr.

Inputs are a file argument, ``--edges`` (inline edge list; ``;`` or ``/``
separate lines) or standard input. The format is detected from the first
content line unless ``--format`` is given.
"""
import functools
import itertools
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional

import click
from pydantic import ValidationError

from uniqdim import __version__
from uniqdim.common.config import RunConfig, get_settings
from uniqdim.common.exceptions import ClaimFalsifiedError, ConfigurationError, UniqDimError
from uniqdim.common.logger import get_run_logger, setup_logging
from uniqdim.common.paths import checkpoint_path
from uniqdim.constructions import (
    ConstructedGraph,
    Prediction,
    construct_3k,
    construct_5k_half,
    construct_k_plus_3k,
    construct_order9,
    extend_by_path,
    find_base6,
    verify_constructed,
)
from uniqdim.graphs.core import Graph, diameter, distances, girth
from uniqdim.graphs.formats import detect_format, format_graph, parse_edge_list, read_graphs
from uniqdim.solver.basis import all_bases, metric_dimension
from uniqdim.verifier.n0 import scan_n0_stream, search_n0
from uniqdim.verifier.report import (
    audit_header,
    audit_record_line,
    audit_summary_lines,
    bool_text,
    fail_line,
    girth_text,
    n0_lines,
)
from uniqdim.verifier.sweep import AuditSweep

logger = get_run_logger(__name__, 'cli')

FAMILIES = ('3k', 'kplus3k', 'order9', 'base6', 'fivehalves')

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass
class CliState:
    jobs: int
    progress: bool


class ChecksFailed(Exception):
    """Records were written; exit with the given status."""

    def __init__(self, status: int):
        self.status = status


def handle_errors(f):
    """Map exceptions onto the exit-status contract."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            f(*args, **kwargs)
        except ChecksFailed as e:
            sys.exit(e.status)
        except ClaimFalsifiedError as e:
            subject = e.context.get('graph6') or e.context.get('family') or 'claim'
            click.echo(fail_line(str(subject), e.message))
            sys.exit(EXIT_FAIL)
        except UniqDimError as e:
            click.echo(f"error: {e.message}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


def input_options(f):
    f = click.option('--format', 'fmt', type=click.Choice(['auto', 'graph6', 'edgelist']), default='auto',
                     show_default=True, help='Input format.')(f)
    f = click.option('--edges', 'inline_edges', default=None,
                     help='Inline edge list, e.g. "2 1 / 0 1".')(f)
    f = click.argument('source', required=False, type=click.Path(dir_okay=False, allow_dash=True))(f)
    return f


def build_run_config(
    subcommand: str,
    source: Optional[str],
    inline_edges: Optional[str],
    fmt: str,
    exhaustive_order: Optional[int] = None,
    stdin_default: bool = True,
    **flags,
) -> RunConfig:
    state: CliState = click.get_current_context().find_object(CliState)
    use_stdin = source == '-' or (
        stdin_default and source is None and inline_edges is None and exhaustive_order is None
    )
    try:
        return RunConfig(
            subcommand=subcommand,
            input_path=Path(source) if source not in (None, '-') else None,
            inline_edges=inline_edges,
            use_stdin=use_stdin,
            exhaustive_order=exhaustive_order,
            input_format='edgelist' if inline_edges is not None else ('graph6' if fmt == 'auto' else fmt),
            jobs=state.jobs,
            flags={'format': fmt, **flags},
        )
    except ValidationError as e:
        raise ConfigurationError(f"Invalid invocation: {e.errors()[0]['msg']}") from e


def input_lines(config: RunConfig) -> Iterator[str]:
    if config.inline_edges is not None:
        text = config.inline_edges.replace(';', '\n').replace('/', '\n')
        return iter(text.splitlines())
    if config.input_path is not None:
        try:
            return iter(config.input_path.read_text(encoding='utf-8').splitlines())
        except OSError as e:
            raise ConfigurationError(f"Cannot read {config.input_path}: {e}") from e
    return (line.rstrip('\n') for line in click.get_text_stream('stdin'))


def resolve_format(config: RunConfig, lines: Iterator[str]) -> tuple[str, Iterator[str]]:
    """Apply --format, or detect it from the first content line (which is not consumed)."""
    fmt = config.flags.get('format', 'auto')
    if config.inline_edges is not None:
        return 'edgelist', lines
    if fmt != 'auto':
        return fmt, lines
    head = []
    for line in lines:
        head.append(line)
        stripped = line.strip()
        if stripped and not stripped.startswith('#'):
            break
    return detect_format(head), itertools.chain(head, lines)


def input_graphs(config: RunConfig) -> Iterator[Graph]:
    if config.inline_edges is not None:
        yield parse_edge_list('\n'.join(input_lines(config)))
        return
    fmt, lines = resolve_format(config, input_lines(config))
    yield from read_graphs(lines, fmt)


def single_graph(config: RunConfig) -> Graph:
    graphs = list(itertools.islice(input_graphs(config), 2))
    if len(graphs) != 1:
        raise ConfigurationError(f"{config.subcommand} expects exactly one input graph, got {len(graphs)}")
    return graphs[0]


@click.group()
@click.option('--jobs', '-j', type=click.IntRange(min=1), envvar='UNIQDIM_JOBS', default=None,
              help='Worker processes for stream subcommands [env: UNIQDIM_JOBS].')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                                               case_sensitive=False), default=None, help='Log level (stderr).')
@click.option('--progress/--no-progress', default=None, help='Progress bars on stderr.')
@click.version_option(__version__, prog_name='uniqdim')
@click.pass_context
def cli(ctx, jobs, log_level, progress):
    """Metric dimension, unique metric bases and their constructions."""
    try:
        settings = get_settings()
    except ConfigurationError as e:
        click.echo(f"error: {e.message}", err=True)
        sys.exit(EXIT_USAGE)
    setup_logging(
        log_level=(log_level or settings.logging.log_level).upper(),
        log_dir=settings.logging.log_dir,
        log_to_file=settings.logging.log_to_file,
        max_log_size_mb=settings.logging.max_log_size_mb,
    )
    ctx.obj = CliState(
        jobs=jobs or settings.search.jobs,
        progress=settings.search.progress if progress is None else progress,
    )


@cli.command()
@input_options
@handle_errors
def dim(source, inline_edges, fmt):
    """Print n, diameter, girth and metric dimension of each input graph.

    \b
    Record: n=<n> diameter=<d> girth=<g|acyclic> dimension=<k> (tab-separated)
    """
    config = build_run_config('dim', source, inline_edges, fmt)
    for g in input_graphs(config):
        d = distances(g)
        click.echo(
            f"n={g.n}\tdiameter={diameter(g, d)}\tgirth={girth_text(girth(g, d))}\t"
            f"dimension={metric_dimension(g, d)}"
        )


@cli.command()
@input_options
@click.option('--randomly-k/--no-randomly-k', 'randomly_k', default=None,
              help='Force (or skip) the randomly k-dimensional test regardless of order.')
@handle_errors
def bases(source, inline_edges, fmt, randomly_k):
    """List every metric basis of each input graph.

    \b
    Lines: dimension=<k> bases=<count> unique=<true|false>
           randomly_k<TAB><true|false|n/a>
           basis<TAB><comma-separated vertices>   (one per basis, lexicographic)
    """
    config = build_run_config('bases', source, inline_edges, fmt, randomly_k=randomly_k)
    for g in input_graphs(config):
        report = all_bases(g, evaluate_randomly_k=randomly_k)
        click.echo(f"dimension={report.dimension} bases={report.count} unique={bool_text(report.unique)}")
        click.echo(f"randomly_k\t{bool_text(report.randomly_k)}")
        if report.trivial:
            click.echo("# K1: dimension 0 with the empty basis by convention")
        for basis in report.bases:
            click.echo(f"basis\t{','.join(map(str, basis))}")


@cli.command()
@input_options
@click.option('--exhaustive', 'exhaustive_order', type=click.IntRange(2, 8), default=None,
              help='Audit every connected graph of this order instead of reading input.')
@click.option('--dedup', is_flag=True, help='With --exhaustive: one graph per isomorphism class.')
@click.option('--fail-fast', is_flag=True, help='Stop after the first failing graph.')
@handle_errors
def audit(source, inline_edges, fmt, exhaustive_order, dedup, fail_fast):
    """Run every theorem check on each graph.

    \b
    Record columns: graph6 n k d g unique <verdict per check>
    Verdicts: pass | fail | na. Then one FAIL line (if any) and the summary.
    """
    config = build_run_config(
        'audit', source, inline_edges, fmt,
        exhaustive_order=exhaustive_order, dedup=dedup, fail_fast=fail_fast,
    )
    state: CliState = click.get_current_context().obj
    click.echo(audit_header())

    def emit(record):
        click.echo(audit_record_line(record))

    if config.exhaustive_order is not None:
        sweep = AuditSweep(exhaustive_order=config.exhaustive_order, dedup=dedup, fail_fast=fail_fast,
                           on_record=emit, jobs=config.jobs, progress=state.progress)
    else:
        if config.inline_edges is not None:
            graphs: Iterable = input_graphs(config)
        else:
            fmt_used, lines = resolve_format(config, input_lines(config))
            # graph6 lines go to the workers unparsed
            graphs = lines if fmt_used == 'graph6' else read_graphs(lines, 'edgelist', errors='yield')
        sweep = AuditSweep(lines=graphs, fail_fast=fail_fast, on_record=emit,
                           jobs=config.jobs, progress=state.progress)
    sweep.run()

    for line in audit_summary_lines(sweep.summary):
        click.echo(line)
    if sweep.summary.failed_graphs:
        raise ChecksFailed(EXIT_FAIL)
    if sweep.summary.errors:
        raise ChecksFailed(EXIT_USAGE)


def build_family(family: str, k: Optional[int]) -> ConstructedGraph:
    if family in ('3k', 'kplus3k', 'fivehalves') and k is None:
        raise ConfigurationError(f"--k is required for family {family}")
    if family == '3k':
        return construct_3k(k)
    if family == 'kplus3k':
        return construct_k_plus_3k(k)
    if family == 'fivehalves':
        return construct_5k_half(k)
    if family == 'order9':
        return construct_order9()
    return find_base6()


def emit_constructed(c: ConstructedGraph, emit_format: str) -> None:
    click.echo(c.metadata_line())
    click.echo(f"# basis={','.join(map(str, c.designated_basis))} labels={','.join(c.labels)}")
    click.echo(format_graph(c.graph, emit_format), nl=False)


@cli.command()
@click.option('--family', type=click.Choice(FAMILIES), required=True)
@click.option('--k', 'k', type=int, default=None, help='Dimension parameter (3k, kplus3k, fivehalves).')
@click.option('--emit', 'emit_format', type=click.Choice(['graph6', 'edgelist']), default='graph6', show_default=True)
@click.option('--verify', is_flag=True, help='Re-verify the unique basis and predicted parameters.')
@handle_errors
def construct(family, k, emit_format, verify):
    """Build a uniquely k-dimensional graph with its metadata line."""
    build_run_config('construct', None, None, 'auto', stdin_default=False, family=family, k=k)
    c = build_family(family, k)
    emit_constructed(c, emit_format)
    if verify:
        report = verify_constructed(c)
        click.echo(f"# verified unique=true dimension={report.dimension}")


@cli.command('search-n0')
@click.option('--k', 'k', type=click.IntRange(min=1), required=True)
@click.option('--max-n', 'max_n', type=int, default=None, help='Largest order to enumerate (2..8).')
@click.option('--dedup', is_flag=True, help='One graph per isomorphism class.')
@click.option('--skip-below-bound', is_flag=True, help='Skip orders below 2k+1.')
@click.option('--stream', 'stream', type=click.Path(dir_okay=False, allow_dash=True), default=None,
              help='Scan an external graph6 stream instead of enumerating.')
@click.option('--checkpoint', type=click.Path(dir_okay=False), default=None,
              help='JSON checkpoint for --stream (resumes when present).')
@handle_errors
def search_n0_command(k, max_n, dedup, skip_below_bound, stream, checkpoint):
    """Count uniquely k-dimensional graphs per order and report n0.

    \b
    Rows: order graphs hits skipped example, then bounds and n0=<n|none(<=N)>.
    """
    config = build_run_config(
        'search-n0', stream, None, 'graph6', stdin_default=False,
        k=k, max_n=max_n, dedup=dedup, skip_below_bound=skip_below_bound,
    )
    state: CliState = click.get_current_context().obj
    if config.input_path is not None or config.use_stdin:
        ckpt = Path(checkpoint) if checkpoint else checkpoint_path(f"n0-k{k}")
        result = scan_n0_stream(k, input_lines(config), ckpt, jobs=config.jobs, progress=state.progress)
    else:
        if max_n is None:
            raise ConfigurationError("--max-n is required without --stream")
        result = search_n0(k, max_n, dedup=dedup, skip_below_bound=skip_below_bound,
                           jobs=config.jobs, progress=state.progress)
    for line in n0_lines(result):
        click.echo(line)
    if not result.consistent:
        raise ChecksFailed(EXIT_FAIL)


@cli.command()
@input_options
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Path length to attach.')
@click.option('--u', 'u', type=int, default=None, help='Basis vertex to measure from (default: first).')
@click.option('--prefer', type=click.Choice(['lowest', 'highest']), default='lowest', show_default=True,
              help='Tie-break among farthest vertices.')
@click.option('--emit', 'emit_format', type=click.Choice(['graph6', 'edgelist']), default='graph6', show_default=True)
@handle_errors
def extend(source, inline_edges, fmt, m, u, prefer, emit_format):
    """Attach a path to a uniquely dimensional graph and re-verify it."""
    config = build_run_config('extend', source, inline_edges, fmt, m=m, u=u, prefer=prefer)
    g = single_graph(config)
    report = all_bases(g)
    if not report.unique:
        raise ConfigurationError(
            f"extend needs a uniquely dimensional input graph ({report.count} bases found)"
        )
    base = ConstructedGraph(
        graph=g,
        designated_basis=report.bases[0],
        predicted=Prediction(order=g.n, dimension=report.dimension),
        family='input',
        params={'k': report.dimension},
    )
    extended = extend_by_path(base, m, u=u, prefer=prefer)
    emit_constructed(extended, emit_format)
    verified = verify_constructed(extended)
    click.echo(
        f"verdict\tunique=true\tdimension={verified.dimension}\t"
        f"basis={','.join(map(str, verified.bases[0]))}"
    )


@cli.command()
@input_options
@click.option('--to', 'to_format', type=click.Choice(['graph6', 'edgelist']), required=True)
@handle_errors
def convert(source, inline_edges, fmt, to_format):
    """Transcode graphs between graph6 and edge lists."""
    config = build_run_config('convert', source, inline_edges, fmt, to=to_format)
    for g in input_graphs(config):
        click.echo(format_graph(g, to_format), nl=False)


def main():
    cli(prog_name='uniqdim')


if __name__ == "__main__":
    main()
