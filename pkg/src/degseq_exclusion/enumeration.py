"""Isomorph-free universes of graphs and graphical degree sequences."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Optional

from .graph import Graph, bits, canonical_form
from .io import read_graph6, write_graph6
from .sequences import is_graphical

MAX_GRAPH_VERTICES = 9
MAX_SEQUENCE_LENGTH = 10

# unlabeled graphs on n nodes, n = 0..9
UNLABELED_GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)


def _children(parent: Graph) -> dict:
    """Canonical forms of ``parent`` plus one vertex of minimum degree.

    Every graph arises this way: delete a minimum-degree vertex and the rest
    is isomorphic to some parent.
    """
    n = parent.n + 1
    new = n - 1
    out = {}
    pdeg = parent.degrees()
    for m in range(1 << parent.n):
        d = m.bit_count()
        if any(pdeg[u] + (m >> u & 1) < d for u in range(parent.n)):
            continue
        adj = list(parent.adj)
        for u in bits(m):
            adj[u] |= 1 << new
        adj.append(m)
        c = canonical_form(Graph._trusted(n, adj))
        out[c.adj] = c
    return out


def _children_chunk(parents) -> dict:
    out = {}
    for p in parents:
        out.update(_children(p))
    return out


def _extend(level: list[Graph], workers: int) -> list[Graph]:
    found: dict = {}
    if workers > 1 and len(level) > 64:
        chunks = [level[i::workers * 4] for i in range(workers * 4)]
        with ProcessPoolExecutor(workers) as ex:
            for part in ex.map(_children_chunk, chunks):
                found.update(part)
    else:
        found = _children_chunk(level)
    return [found[k] for k in sorted(found)]


_GRAPH_LEVELS: list = [[Graph(0, ())]]


def all_graphs(n: int, limit: int = MAX_GRAPH_VERTICES, workers: int = 1) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices,
    sorted by adjacency rows.  Levels are cached for the process lifetime."""
    if not 0 <= n <= limit:
        raise ValueError(f"graph enumeration supports 0 <= n <= {limit}, got {n}")
    while len(_GRAPH_LEVELS) <= n:
        _GRAPH_LEVELS.append(_extend(_GRAPH_LEVELS[-1], workers))
    return list(_GRAPH_LEVELS[n])


@lru_cache(maxsize=None)
def _sequences(n: int) -> tuple:
    seqs = []
    for combo in combinations_with_replacement(range(n - 1, -1, -1), n):
        if is_graphical(combo):
            seqs.append(combo)
    return tuple(sorted(seqs, reverse=True))


def all_graphical_sequences(n: int, limit: int = MAX_SEQUENCE_LENGTH) -> list[tuple]:
    """Every graphical sequence of length ``n``, lexicographically descending."""
    if not 0 <= n <= limit:
        raise ValueError(f"sequence enumeration supports 0 <= n <= {limit}, got {n}")
    if n == 0:
        return [()]
    return list(_sequences(n))


class Universe:
    """All graphs on at most ``max_vertices`` vertices, indexed by degree
    sequence, so each sequence's realizations are looked up rather than
    re-enumerated.
    """

    def __init__(self, max_vertices: int, graphs: Optional[Iterable[Graph]] = None, workers: int = 1):
        self.max_vertices = max_vertices
        if graphs is None:
            graphs = [g for n in range(max_vertices + 1) for g in all_graphs(n, workers=workers)]
            self.source = "generated"
        else:
            graphs = list({c.adj: c for c in map(canonical_form, graphs)}.values())
            self.source = "external"
        self._by_seq: dict = {}
        self.graphs_by_n: dict = {n: [] for n in range(max_vertices + 1)}
        for g in sorted(graphs, key=lambda g: (g.n, g.adj)):
            if g.n > max_vertices:
                continue
            self.graphs_by_n[g.n].append(g)
            self._by_seq.setdefault(g.degree_sequence(), []).append(g)

    @classmethod
    def from_graph6_files(cls, max_vertices: int, paths) -> "Universe":
        graphs = [g for p in paths for g in read_graph6(p)]
        return cls(max_vertices, graphs)

    def export_graph6(self, path) -> int:
        return write_graph6(self.graphs(), path)

    def graphs(self, n: Optional[int] = None) -> list[Graph]:
        if n is not None:
            return self.graphs_by_n.get(n, [])
        return [g for k in range(self.max_vertices + 1) for g in self.graphs_by_n[k]]

    def sequences(self, n: Optional[int] = None) -> list[tuple]:
        """Graphical sequences present in the universe, shortest first, then
        lexicographically descending."""
        keys = self._by_seq if n is None else [d for d in self._by_seq if len(d) == n]
        return sorted(keys, key=lambda d: (len(d), tuple(-x for x in d)))

    def realizations(self, d) -> list[Graph]:
        d = tuple(d)
        if len(d) > self.max_vertices:
            raise ValueError(f"sequence longer than the universe bound {self.max_vertices}")
        return self._by_seq.get(d, [])

    def is_complete(self) -> bool:
        """Graph counts equal the known unlabeled-graph counts."""
        return all(len(self.graphs_by_n[n]) == UNLABELED_GRAPH_COUNTS[n] for n in range(self.max_vertices + 1))
