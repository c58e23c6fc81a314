"""graph6 reader and writer.

Bits of the upper triangle are taken column by column,
``(0,1), (0,2), (1,2), (0,3), ...``, packed six to a byte with 63 added.
Only graphs with at most 64 vertices are handled.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator

from .graph import MAX_VERTICES, Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``lineno`` is 1-based when reading files."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _as_bytes(line: bytes | str) -> bytes:
    if isinstance(line, str):
        try:
            return line.encode("ascii")
        except UnicodeEncodeError:
            raise Graph6Error("non-ASCII character in graph6 line") from None
    return bytes(line)


def parse_graph6(line: bytes | str) -> Graph:
    data = _as_bytes(line).rstrip(b"\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 line")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at offset {pos} outside 63..126")

    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("vertex count exceeds 64")
        if len(data) < 4:
            raise Graph6Error("truncated size prefix")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}")
    if n == 0:
        raise Graph6Error("graph with zero vertices")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: expected {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing data: expected {nbytes} data bytes, got {len(body)}")

    stream = 0
    for b in body:
        stream = (stream << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if stream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    stream >>= pad

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    acc = nacc = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)


def iter_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(lineno, graph)``; skips a header and blank lines.

    Aborts on the first malformed line with its line number attached.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = _as_bytes(raw).strip()
        if not line:
            continue
        if line == HEADER:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(str(exc), lineno) from None
        except ValueError as exc:
            raise Graph6Error(str(exc), lineno) from None


def read_graph6_file(path: str | os.PathLike) -> list[Graph]:
    with open(path, "rb") as fh:
        return [g for _, g in iter_graph6_lines(fh)]


def write_graph6_file(path: str | os.PathLike, graphs: Iterable[Graph]) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + b"\n")
