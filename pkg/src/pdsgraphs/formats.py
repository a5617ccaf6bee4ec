"""Graph and certificate file formats.

Edge list: header ``n m`` then one ``u v`` line per edge, ``u < v``, ascending.
graph6: the standard 6-bit printable encoding, upper triangle column by column.
DOT: for inspection only, with vertex labels.
Certificate: ``i -> (x0,x1,x2)`` per vertex for point-labelled targets, or
``i -> j`` for plain vertex maps.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Sequence

from .fields import FieldSpec, parse_element
from .graphs import Graph, ProjectivePoint, format_label

# ---------------------------------------------------------------------------
# edge list


def to_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("edge list must start with a header line 'n m'")
    n, m = map(int, lines[0])
    edges = []
    for parts in lines[1:]:
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {' '.join(parts)!r}")
        u, v = map(int, parts)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"invalid edge ({u}, {v}) for n={n}")
        edges.append((u, v))
    if len(set(map(lambda e: tuple(sorted(e)), edges))) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(G: Graph) -> bytes:
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) for i in range(0, len(bits), 6)
    )
    return _encode_n(G.n) + body


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data or any(not 63 <= c <= 126 for c in data):
        raise ValueError("not a graph6 string")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    else:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    bits = [(v >> (5 - k)) & 1 for v in rest for k in range(6)]
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    edges = [pair for pair, b in zip(pairs, bits) if b]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# DOT


def to_dot(G: Graph) -> str:
    out = ["graph G {"]
    if G.name:
        out[0] = f'graph "{G.name}" {{'
    for u in range(G.n):
        out.append(f'  {u} [label="{G.label(u)}"];')
    out += [f"  {u} -- {v};" for u, v in G.edges()]
    out.append("}")
    return "\n".join(out) + "\n"


FORMATS = ("edges", "graph6", "dot")


def render(G: Graph, fmt: str) -> bytes:
    if fmt == "edges":
        return to_edge_list(G).encode()
    if fmt == "graph6":
        return to_graph6(G) + b"\n"
    if fmt == "dot":
        return to_dot(G).encode()
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def read_graph(path: str | Path) -> Graph:
    """Load an edge list or graph6 file, detected from the first line."""
    data = Path(path).read_bytes()
    first = data.strip().split(b"\n", 1)[0].strip()
    if re.fullmatch(rb"\d+\s+\d+", first):
        return from_edge_list(data.decode())
    return from_graph6(first)


# ---------------------------------------------------------------------------
# certificates


def format_certificate(mapping: Sequence[int], target: Graph | None = None) -> str:
    lines = []
    for i, j in enumerate(mapping):
        label = target.labels[j] if target is not None and target.labels is not None else j
        lines.append(f"{i} -> {format_label(label)}")
    return "\n".join(lines) + "\n"


_CERT_LINE = re.compile(r"^\s*(\d+)\s*->\s*(\(.*\)|\d+)\s*$")


def parse_certificate(text: str, K: FieldSpec | None = None) -> list[int | ProjectivePoint]:
    """Parse certificate lines; point images need the field ``K``."""
    images: dict[int, int | ProjectivePoint] = {}
    for ln in text.splitlines():
        if not ln.strip() or ln.lstrip().startswith("#"):
            continue
        m = _CERT_LINE.match(ln)
        if not m:
            raise ValueError(f"malformed certificate line {ln!r}")
        i, img = int(m.group(1)), m.group(2)
        if i in images:
            raise ValueError(f"vertex {i} mapped twice")
        if img.startswith("("):
            if K is None:
                raise ValueError("point-valued certificate needs the field order (--q)")
            coords = img[1:-1].split(",")
            if len(coords) != 3:
                raise ValueError(f"expected a triple in {ln!r}")
            images[i] = tuple(parse_element(K, c) for c in coords)  # type: ignore[assignment]
        else:
            images[i] = int(img)
    if sorted(images) != list(range(len(images))):
        raise ValueError("certificate does not cover vertices 0..n-1")
    return [images[i] for i in range(len(images))]
