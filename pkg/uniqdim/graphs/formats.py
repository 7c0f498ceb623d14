"""
Text codecs: graph6 lines and plain edge lists.

graph6 stores n (one character for n <= 62, '~' plus three characters
otherwise) followed by the upper-triangle adjacency bits in column-major
order, six bits per character offset by 63. That bit order is exactly the
``Graph.edge_mask`` order, so encoding is a straight repack of the mask.
"""
import re
from typing import Iterable, Iterator, Literal, Union

from uniqdim.common.config import VERTEX_CAP
from uniqdim.common.exceptions import GraphError, GraphFormatError
from uniqdim.graphs.core import Graph, build_graph

GraphFormat = Literal['graph6', 'edgelist']

GRAPH6_HEADER = ">>graph6<<"

_EDGE_LIST_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ['~'] + [chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)]

    mask = g.edge_mask
    bits = _pair_count(n)
    for start in range(0, bits, 6):
        value = 0
        for t in range(6):
            value = (value << 1) | (mask >> (start + t) & 1)
        out.append(chr(value + 63))
    return ''.join(out)


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    A trailing newline and a leading ``>>graph6<<`` header are tolerated.

    Raises:
        GraphFormatError: bad character, wrong length, nonzero padding or
            order outside 1..64; ``offset`` is the byte offset of the problem
    """
    line = text.rstrip('\r\n')
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not line:
        raise GraphFormatError("Empty graph6 line", base)
    if line[0] in ':;&':
        raise GraphFormatError("sparse6/digraph6 lines are not graph6", base)

    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"Invalid graph6 character {ch!r}", base + i, context={'char': ch})

    if line[0] != '~':
        n = ord(line[0]) - 63
        pos = 1
    else:
        if len(line) < 4 or line[1] == '~':
            raise GraphFormatError("Unsupported graph6 order encoding", base + 1)
        n = 0
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4

    if not 1 <= n <= VERTEX_CAP:
        raise GraphFormatError(f"Order {n} outside 1..{VERTEX_CAP}", base, context={'n': n})

    bits = _pair_count(n)
    expected = pos + (bits + 5) // 6
    if len(line) != expected:
        raise GraphFormatError(
            f"graph6 line for n={n} must have {expected} characters, got {len(line)}",
            base + min(len(line), expected),
            context={'n': n}
        )

    mask = 0
    k = 0
    for offset in range(pos, expected):
        value = ord(line[offset]) - 63
        for t in range(6):
            bit = value >> (5 - t) & 1
            if k >= bits:
                if bit:
                    raise GraphFormatError("Nonzero graph6 padding bits", base + offset)
            elif bit:
                mask |= 1 << k
            k += 1
    return Graph.from_edge_mask(n, mask)


def to_edge_list_text(g: Graph) -> str:
    """``n m`` header then one ``u v`` line per edge (u < v, sorted), newline-terminated."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return '\n'.join(lines) + '\n'


def _content_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """(1-based line number, stripped text) for non-blank, non-comment lines."""
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line and not line.startswith('#'):
            yield number, line


def _parse_int_pair(line: str, number: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"Expected two integers, got {line!r}", number)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"Expected two integers, got {line!r}", number) from None


def _read_edge_list_block(content: Iterator[tuple[int, str]], number: int, header: str) -> Graph:
    n, m = _parse_int_pair(header, number)
    if m < 0:
        raise GraphFormatError("Negative edge count", number)
    edges = []
    last = number
    for _ in range(m):
        try:
            last, line = next(content)
        except StopIteration:
            raise GraphFormatError(f"Expected {m} edges, found {len(edges)}", last + 1) from None
        edges.append(_parse_int_pair(line, last))
    try:
        return build_graph(n, edges)
    except GraphError as e:
        raise GraphFormatError(e.message, number, context=e.context) from e


def parse_edge_list(text: str) -> Graph:
    """
    Parse one edge list: ``n m`` then m lines ``u v`` (0-based).

    Lines starting with ``#`` are ignored.

    Raises:
        GraphFormatError: ``offset`` is the 1-based line number
    """
    content = _content_lines(text.splitlines())
    try:
        number, header = next(content)
    except StopIteration:
        raise GraphFormatError("Empty edge list", 1) from None
    g = _read_edge_list_block(content, number, header)
    for number, line in content:
        raise GraphFormatError(f"Unexpected trailing line {line!r}", number)
    return g


def detect_format(lines: Iterable[str]) -> GraphFormat:
    """
    Guess the format from the first content line.

    Digits are not graph6 characters, so an ``n m`` header is unambiguous.
    """
    for _, line in _content_lines(lines):
        return 'edgelist' if _EDGE_LIST_HEADER.match(line) else 'graph6'
    return 'graph6'


def read_graphs(
    lines: Iterable[str],
    fmt: GraphFormat = 'graph6',
    errors: Literal['raise', 'yield'] = 'raise',
) -> Iterator[Union[Graph, GraphFormatError]]:
    """
    Stream graphs from text lines.

    graph6 streams hold one graph per line (an optional ``>>graph6<<``
    header is accepted); edge-list streams are consecutive ``n m`` blocks.
    Blank lines and ``#`` lines are skipped in both.

    Errors carry the 1-based ``line`` where the item starts. With
    ``errors='yield'`` a malformed item is yielded as its GraphFormatError
    and reading resumes at the next line; an edge list whose edge lines are
    malformed can leave the rest of its block to be read as new headers.
    """
    if fmt not in ('graph6', 'edgelist'):
        raise GraphFormatError(f"Unknown format {fmt!r}", 0)
    content = _content_lines(lines)
    for number, line in content:
        try:
            if fmt == 'graph6':
                yield parse_graph6(line)
            else:
                yield _read_edge_list_block(content, number, line)
        except GraphFormatError as e:
            e.context['line'] = number
            if errors == 'raise':
                raise
            yield e


def format_graph(g: Graph, fmt: GraphFormat = 'graph6') -> str:
    """Serialize ``g`` in ``fmt``; the result always ends with a newline."""
    if fmt == 'graph6':
        return emit_graph6(g) + '\n'
    if fmt == 'edgelist':
        return to_edge_list_text(g)
    raise GraphFormatError(f"Unknown format {fmt!r}", 0)
