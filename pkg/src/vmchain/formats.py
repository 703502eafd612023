"""graph6 and edge-list text formats.

graph6 (McKay): a size header followed by the upper-triangle adjacency bits
taken column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six to a
byte, big-endian within each byte, each byte offset by 63.  Padding bits must
be zero so that parsing and encoding are exact inverses.
"""

from __future__ import annotations

from .errors import ArgumentError, GraphParseError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return chr(126) + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return chr(126) * 2 + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    width = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            width += 1
            if width == 6:
                out.append(chr(63 + acc))
                acc = width = 0
    if width:
        out.append(chr(63 + (acc << (6 - width))))
    return "".join(out)


def _decode_n(data: bytes, base: int) -> tuple[int, int]:
    def val(k):
        if k >= len(data):
            raise GraphParseError("truncated size header", base + k)
        c = data[k]
        if not 63 <= c <= 126:
            raise GraphParseError(f"byte {c!r} outside graph6 range 63..126", base + k)
        return c - 63

    if not data:
        raise GraphParseError("empty graph6 string", base)
    first = val(0)
    if first < 63:
        return first, 1
    if len(data) > 1 and data[1] == 126:
        n = 0
        for k in range(2, 8):
            n = (n << 6) | val(k)
        return n, 8
    n = 0
    for k in range(1, 4):
        n = (n << 6) | val(k)
    return n, 4


def from_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 string (an optional ``>>graph6<<`` prefix is allowed)."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    base = 0
    stripped = data.rstrip(b"\r\n")
    if stripped.startswith(HEADER.encode()):
        base = len(HEADER)
    body = stripped[base:]
    if body[:1] == b":" or body[:1] == b";" or body[:1] == b"&":
        raise GraphParseError("sparse6/digraph6 input is not supported", base)
    n, used = _decode_n(body, base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = body[used:]
    if len(payload) != nbytes:
        off = base + used + min(len(payload), nbytes)
        raise GraphParseError(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(payload)}", off
        )
    rows = [0] * n
    i, j = 0, 1
    for k, c in enumerate(payload):
        if not 63 <= c <= 126:
            raise GraphParseError(f"byte {c!r} outside graph6 range 63..126", base + used + k)
        v = c - 63
        for shift in range(5, -1, -1):
            bit = (v >> shift) & 1
            if j >= n:
                if bit:
                    raise GraphParseError("nonzero padding bit", base + used + k)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def from_edgelist(text: str) -> Graph:
    """Parse ``u v`` pairs, one per line.

    ``#`` starts a comment.  A line holding a single integer fixes the vertex
    count (needed when the top-numbered vertices are isolated); otherwise the
    count is one more than the largest label.
    """
    edges = []
    n = None
    offset = 0
    for line in text.splitlines(keepends=True):
        content = line.split("#", 1)[0].strip()
        if content:
            parts = content.split()
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise GraphParseError(f"non-integer token in {content!r}", offset) from None
            if len(nums) == 1:
                if n is not None or nums[0] < 0:
                    raise GraphParseError("bad or repeated vertex-count line", offset)
                n = nums[0]
            elif len(nums) == 2:
                if min(nums) < 0:
                    raise GraphParseError("negative vertex label", offset)
                if nums[0] == nums[1]:
                    raise GraphParseError(f"loop at vertex {nums[0]}", offset)
                edges.append((nums[0], nums[1]))
            else:
                raise GraphParseError(f"expected 'u v', got {content!r}", offset)
        offset += len(line.encode())
    top = max((max(e) for e in edges), default=-1) + 1
    if n is None:
        n = top
    elif top > n:
        raise GraphParseError(f"edge label {top - 1} exceeds declared n={n}", 0)
    return Graph.from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        for off, line in _lines_with_offsets(text):
            if line.strip():
                try:
                    return from_graph6(line.strip())
                except GraphParseError as e:
                    raise GraphParseError(str(e).rsplit(" (at byte", 1)[0], off + e.offset) from None
        raise GraphParseError("no graph6 line found", 0)
    if fmt == "edgelist":
        return from_edgelist(text)
    raise ArgumentError(f"unknown format {fmt!r}")


def _lines_with_offsets(text: str):
    off = 0
    for line in text.splitlines(keepends=True):
        lead = len(line) - len(line.lstrip())
        yield off + lead, line
        off += len(line.encode())
