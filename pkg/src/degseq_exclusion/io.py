"""graph6 encoding, degree-sequence text form, and DOT export."""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, MAX_VERTICES

_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header).  Bits of the upper triangle are
    taken column by column: (0,1), (0,2), (1,2), (0,3), ...
    """
    if g.n > 62:
        raise ValueError("only the single-byte size form (n <= 62) is supported")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise ValueError("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c < 64 for c in codes):
        raise ValueError(f"invalid graph6 character in {text!r}")
    n = codes[0]
    if n == 63:
        raise ValueError("multi-byte graph6 sizes are beyond the vertex cap")
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 graph has {n} > {MAX_VERTICES} vertices")
    need = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (need + 5) // 6:
        raise ValueError(f"graph6 body length {len(body)} does not match n={n}")
    stream = []
    for c in body:
        stream.extend((c >> (5 - k)) & 1 for k in range(6))
    if any(stream[need:]):
        raise ValueError("graph6 padding bits must be zero")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


def write_graph6(graphs: Iterable[Graph], path) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count


def read_graph6(path) -> list[Graph]:
    with open(path) as fh:
        return [from_graph6(line) for line in fh if line.strip()]


def parse_sequence(text: str) -> tuple:
    """Parse ``"2,2,1"`` style text into a nonincreasing tuple.

    Whitespace is tolerated and the input need not be sorted.  The empty
    string (or ``"()"``) is the empty sequence.
    """
    body = text.strip().strip("()").strip()
    if not body:
        return ()
    terms = []
    for tok in body.split(","):
        tok = tok.strip()
        try:
            value = int(tok)
        except ValueError:
            raise ValueError(f"not an integer: {tok!r}") from None
        if value < 0:
            raise ValueError(f"negative degree: {value}")
        terms.append(value)
    return tuple(sorted(terms, reverse=True))


def format_sequence(d: Sequence[int]) -> str:
    return ",".join(str(x) for x in d)


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dot(nodes: Sequence[str], edges: Iterable[tuple[str, str]], name: str = "P") -> str:
    """Directed DOT for a Hasse diagram; an edge ``(a, b)`` means ``a`` is
    covered by ``b``.  Nodes and edges are emitted in the order given.
    """
    lines = [f"digraph {name} {{"]
    lines += [f'  "{v}";' for v in nodes]
    lines += [f'  "{a}" -> "{b}";' for a, b in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
