"""graph6 encoding (McKay's format): N(n) followed by the upper triangle of the
adjacency matrix, column by column, packed six bits per printable byte."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ParseError
from .graph import Graph, build_graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def _bits(g: Graph) -> Iterator[int]:
    for j in range(1, g.n):
        for i in range(j):
            yield 1 if j in g.adj[i] else 0


def to_graph6(g: Graph, header: bool = False) -> str:
    out = _encode_n(g.n)
    word, count = 0, 0
    for b in _bits(g):
        word = (word << 1) | b
        count += 1
        if count == 6:
            out.append(word)
            word, count = 0, 0
    if count:
        out.append(word << (6 - count))
    text = "".join(chr(x + 63) for x in out)
    return HEADER + text if header else text


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise ParseError(f"invalid graph6 character in {text!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise ParseError(f"truncated size field in {text!r}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [from_graph6(line) for line in lines if line.strip()]
