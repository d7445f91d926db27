"""graph6, sparse6 and plain adjacency-list text formats.

graph6/sparse6 follow McKay's formats.txt: printable bytes 63..126 carry six
bits each, vertex counts use the 1-, 4- or 8-byte ``N(n)`` prefix.
"""

from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"


class FormatError(GraphError):
    """Malformed serialized graph; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _encode_n(n: int) -> list[int]:
    if n < 0 or n > 68719476735:
        raise GraphError(f"vertex count {n} not representable")
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def _decode_n(vals: list[int], base: int) -> tuple[int, int]:
    """Return ``(n, bytes consumed)``; ``base`` only feeds error offsets."""
    if not vals:
        raise FormatError("missing vertex count", base)
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated 8-byte vertex count", base + len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        return n, 8
    if len(vals) < 4:
        raise FormatError("truncated 4-byte vertex count", base + len(vals))
    n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
    return n, 4


def _values(text: str, base: int) -> list[int]:
    vals = []
    for i, ch in enumerate(text):
        c = ord(ch)
        if c < 63 or c > 126:
            raise FormatError(f"illegal character {ch!r}", base + i)
        vals.append(c - 63)
    return vals


def to_graph6(g: Graph, header: bool = False) -> str:
    vals = _encode_n(g.n)
    bits = []
    for j in range(1, g.n):
        nb = g._adjsets[j]
        bits.extend(1 if i in nb else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        vals.append(x)
    body = "".join(chr(v + 63) for v in vals)
    return GRAPH6_HEADER + body if header else body


def from_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if s.startswith(":") or s.startswith(";") or s.startswith("&"):
        raise FormatError("not graph6 (sparse6/digraph6 marker)", base)
    vals = _values(s, base)
    n, used = _decode_n(vals, base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = vals[used:]
    if len(data) < need:
        raise FormatError(f"expected {need} data bytes, found {len(data)}", base + len(vals))
    if len(data) > need:
        raise FormatError("trailing garbage", base + used + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    pad = need * 6 - nbits
    if pad and data and data[-1] & ((1 << pad) - 1):
        raise FormatError("non-zero padding bits", base + used + need - 1)
    return Graph(n, edges)


def _sparse6_k(n: int) -> int:
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def to_sparse6(g: Graph, header: bool = False) -> str:
    n = g.n
    k = _sparse6_k(n)
    bits: list[int] = []

    def enc(x: int) -> None:
        bits.extend((x >> (k - 1 - i)) & 1 for i in range(k))

    cur = 0
    for v, u in sorted((v, u) for u, v in g.edges):
        if v == cur:
            bits.append(0)
            enc(u)
        elif v == cur + 1:
            cur = v
            bits.append(1)
            enc(u)
        else:
            cur = v
            bits.append(1)
            enc(v)
            bits.append(0)
            enc(u)
    if k < 6 and n == (1 << k) and (-len(bits) % 6) >= k and cur < n - 1:
        bits.append(0)
    bits.extend([1] * (-len(bits) % 6))
    vals = _encode_n(n)
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        vals.append(x)
    body = ":" + "".join(chr(v + 63) for v in vals)
    return SPARSE6_HEADER + body if header else body


def from_sparse6(text: str) -> Graph:
    s = text.strip("\r\n")
    base = 0
    if s.startswith(SPARSE6_HEADER):
        s = s[len(SPARSE6_HEADER):]
        base = len(SPARSE6_HEADER)
    if not s.startswith(":"):
        raise FormatError("sparse6 must start with ':'", base)
    vals = _values(s[1:], base + 1)
    n, used = _decode_n(vals, base + 1)
    k = _sparse6_k(n)
    bits = []
    for x in vals[used:]:
        bits.extend((x >> (5 - i)) & 1 for i in range(6))
    edges = set()
    v = 0
    pos = 0
    while pos + 1 + k <= len(bits):
        b = bits[pos]
        x = 0
        for i in range(k):
            x = (x << 1) | bits[pos + 1 + i]
        pos += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x == v:
            raise FormatError(f"loop at vertex {x}", base + 1 + used + (pos - 1) // 6)
        else:
            edges.add((x, v))
    return Graph(n, edges)


def to_adjacency_text(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_adjacency_text(text: str) -> Graph:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise FormatError("empty adjacency text")
    try:
        n = int(rows[0])
        edges = []
        for r in rows[1:]:
            a, b = r.split()
            edges.append((int(a), int(b)))
    except ValueError as exc:
        raise FormatError(f"bad adjacency text: {exc}") from None
    return Graph(n, edges)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse one graph; ``auto`` picks sparse6 for a leading ':' and graph6 otherwise."""
    t = text.strip()
    if fmt == "adj":
        return from_adjacency_text(text)
    if fmt == "sparse6" or (fmt == "auto" and (t.startswith(":") or t.startswith(SPARSE6_HEADER))):
        return from_sparse6(t)
    if fmt in ("graph6", "auto"):
        return from_graph6(t)
    raise ValueError(f"unknown format {fmt!r}")
