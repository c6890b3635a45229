"""Reader and writer for the text graph6 format (single size byte, so
orders up to 62).

A record is the byte n+63 followed by the upper adjacency triangle read
column by column (x01, x02, x12, x03, ...) packed into 6-bit groups, each
emitted as its value plus 63.  Files carry one record per line and may
start with a ">>graph6<<" header.
"""

from .graphs import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the failing byte position."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


def encode_graph6(g):
    if g.n > MAX_ORDER:
        raise ValueError(f"graph6 output limited to n <= {MAX_ORDER}, got {g.n}")
    n = g.n
    chars = [chr(n + 63)]
    acc = 0
    fill = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            fill += 1
            if fill == 6:
                chars.append(chr(acc + 63))
                acc = 0
                fill = 0
    if fill:
        chars.append(chr((acc << (6 - fill)) + 63))
    return "".join(chars)


def parse_graph6(line):
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 record", offset=0)
    for pos, ch in enumerate(text):
        if not (63 <= ord(ch) <= 126):
            raise Graph6Error(
                f"byte {ord(ch)} at offset {pos} outside the graph6 range 63..126",
                offset=pos)
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6Error(
            f"multi-byte order encoding (n > {MAX_ORDER}) is not supported",
            offset=0)
    if n == 0:
        raise Graph6Error("order-0 records are not supported", offset=0)
    bits_needed = n * (n - 1) // 2
    bytes_needed = (bits_needed + 5) // 6
    if len(text) - 1 < bytes_needed:
        raise Graph6Error(
            f"record truncated at offset {len(text)}: order {n} needs "
            f"{bytes_needed} data bytes, found {len(text) - 1}",
            offset=len(text))
    if len(text) - 1 > bytes_needed:
        raise Graph6Error(
            f"record has {len(text) - 1 - bytes_needed} trailing bytes "
            f"beyond offset {1 + bytes_needed}",
            offset=1 + bytes_needed)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(text[1 + idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def iter_graph6(lines):
    """Yield (line_number, Graph) from an iterable of text lines; blank
    lines and a leading header line are skipped.  Parse failures raise
    Graph6Error annotated with the line number."""
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text == HEADER:
            continue
        try:
            yield lineno, parse_graph6(text)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", offset=exc.offset) from exc


def read_graph6_file(path):
    """All graphs in a newline-delimited graph6 file, with line numbers."""
    with open(path, "r", encoding="ascii") as handle:
        return list(iter_graph6(handle))


def write_graph6_file(path, graphs, header=False):
    with open(path, "w", encoding="ascii") as handle:
        if header:
            handle.write(HEADER + "\n")
        for g in graphs:
            handle.write(encode_graph6(g) + "\n")
