"""Small simple graphs stored as per-vertex neighbourhood bitsets.

Every graph here is an immutable value.  Vertex ``v``'s neighbourhood is the
integer ``adj[v]`` whose bit ``u`` is set iff ``uv`` is an edge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 32


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour index >= {self.n}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj) -> "Graph":
        # skips validation; callers guarantee the invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def degree_sequence(self) -> tuple:
        return tuple(sorted(self.degrees(), reverse=True))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------- families

def empty(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete graph needs n >= 0")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges), so ``path(2)`` is one edge."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def matching(k: int) -> Graph:
    """``k`` disjoint edges; ``matching(2)`` is M2 (2K2)."""
    if k < 0:
        raise ValueError("matching size must be nonnegative")
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


_FAMILY_RE = re.compile(r"^\s*(C|P|K|M|E)\s*(\d+)(?:\s*,\s*(\d+))?\s*$", re.IGNORECASE)


def construct(name: str) -> Graph:
    """Build a named graph: ``C5``, ``P3``, ``K4``, ``K3,3``, ``M2``, ``E4``."""
    m = _FAMILY_RE.match(name)
    if not m:
        raise ValueError(f"unrecognised graph family {name!r}")
    kind, a, b = m.group(1).upper(), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "K":
            raise ValueError(f"only K takes two parameters: {name!r}")
        return complete_bipartite(a, int(b))
    return {"C": cycle, "P": path, "K": complete, "M": matching, "E": empty}[kind](a)


# -------------------------------------------------------------- operations

def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [full ^ nb ^ (1 << v) for v, nb in enumerate(g.adj)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_VERTICES:
        raise ValueError(f"union would have {g1.n + g2.n} > {MAX_VERTICES} vertices")
    return Graph._trusted(g1.n + g2.n, list(g1.adj) + [nb << g1.n for nb in g2.adj])


def induced_subgraph(g: Graph, xs) -> Graph:
    """Subgraph induced on ``xs`` (a bitmask or an iterable of vertices).

    The kept vertices are relabelled ``0..k-1`` in ascending original order.
    """
    xmask = xs if isinstance(xs, int) else mask_of(xs)
    if xmask & ~g.vertex_mask:
        raise ValueError("vertex set contains indices outside the graph")
    keep = list(bits(xmask))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & xmask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph._trusted(len(keep), adj)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``g``'s vertex ``order[i]``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = []
    for v in order:
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph._trusted(g.n, adj)


def add_edges(g: Graph, edges) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edges(g: Graph, edges) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def contract_pair(g: Graph, u: int, v: int) -> Graph:
    """Merge ``u`` and ``v`` into one vertex adjacent to the union of their
    neighbourhoods.  The merged vertex takes index ``min(u, v)``; the other
    index is removed and later vertices shift down by one.  Adjacency of the
    pair is not required.
    """
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("contracted vertices out of range")
    keep, drop = min(u, v), max(u, v)
    merged = (g.adj[u] | g.adj[v]) & ~((1 << u) | (1 << v))
    adj = list(g.adj)
    for w in bits(merged):
        adj[w] |= 1 << keep
    adj[keep] = merged
    for w in range(g.n):
        adj[w] &= ~(1 << drop)
    # close the gap left by ``drop``
    low = (1 << drop) - 1
    out = [(nb & low) | ((nb >> (drop + 1)) << drop) for i, nb in enumerate(adj) if i != drop]
    return Graph._trusted(g.n - 1, out)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge ``uv`` with a path ``u - t - v``; ``t`` gets index ``g.n``."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if g.n + 1 > MAX_VERTICES:
        raise ValueError("subdivision would exceed the vertex cap")
    t = g.n
    adj = list(g.adj)
    adj[u] = (adj[u] & ~(1 << v)) | (1 << t)
    adj[v] = (adj[v] & ~(1 << u)) | (1 << t)
    adj.append((1 << u) | (1 << v))
    return Graph._trusted(g.n + 1, adj)


# ------------------------------------------------- induced-subgraph search

def find_induced(g: Graph, h: Graph) -> Optional[tuple]:
    """Return an injective map ``phi`` (``phi[i]`` is the image of ``h``'s
    vertex ``i``) embedding ``h`` as an induced subgraph of ``g``, or None.

    Backtracking; pattern vertices are placed most-constrained first.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return ()
    gdeg = g.degrees()
    hdeg = h.degrees()
    domains = [[w for w in range(g.n) if gdeg[w] >= hdeg[i]] for i in range(h.n)]
    if any(not d for d in domains):
        return None

    # order: start at the smallest domain, then prefer vertices with the most
    # already-placed neighbours so adjacency constraints bite early
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        best = max(remaining, key=lambda i: ((h.adj[i] & placed).bit_count(), hdeg[i], -len(domains[i])))
        order.append(best)
        remaining.discard(best)
        placed |= 1 << best

    phi = [-1] * h.n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == h.n:
            return True
        i = order[depth]
        for w in domains[i]:
            if used >> w & 1:
                continue
            ok = True
            for j in order[:depth]:
                if h.has_edge(i, j) != g.has_edge(w, phi[j]):
                    ok = False
                    break
            if not ok:
                continue
            phi[i] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
        phi[i] = -1
        return False

    return tuple(phi) if extend(0) else None


def has_induced(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is not None


def is_induced_embedding(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    if len(phi) != h.n or len(set(phi)) != h.n:
        return False
    if any(not 0 <= w < g.n for w in phi):
        return False
    return all(h.has_edge(i, j) == g.has_edge(phi[i], phi[j]) for i, j in combinations(range(h.n), 2))


# ------------------------------------------------------- chordality, holes

def perfect_elimination_order(g: Graph) -> Optional[list[int]]:
    """Maximum cardinality search; returns a perfect elimination ordering
    (vertex eliminated first comes first) or None when ``g`` is not chordal.
    """
    weight = [0] * g.n
    numbered = 0
    visit: list[int] = []
    for _ in range(g.n):
        v = max((w for w in range(g.n) if not numbered >> w & 1), key=lambda w: (weight[w], -w))
        visit.append(v)
        numbered |= 1 << v
        for u in bits(g.adj[v] & ~numbered):
            weight[u] += 1
    peo = visit[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    # each vertex's later neighbours must form a clique
    for v in peo:
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        rest = mask_of(later) & ~(1 << first)
        if rest & ~g.adj[first]:
            return None
    return peo


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def induced_cycles(g: Graph, min_length: int = 3) -> Iterator[tuple]:
    """Yield every induced cycle of length >= ``min_length`` once, as a
    vertex tuple in cyclic order starting at its smallest vertex.
    """
    adj = g.adj
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        # chordless paths s, p1, ..., pk with all p_i > s
        stack = [((s, p1), (1 << s) | (1 << p1)) for p1 in bits(adj[s] & above)]
        while stack:
            pathv, used = stack.pop()
            last = pathv[-1]
            interior = used & ~(1 << s) & ~(1 << last)
            forbidden_nb = 0
            for w in bits(interior):
                forbidden_nb |= adj[w]
            for w in bits(adj[last] & above & ~used & ~forbidden_nb):
                if adj[w] >> s & 1:
                    # w closes the cycle; needs length >= 3 and canonical direction
                    if len(pathv) >= 2 and pathv[1] < w and len(pathv) + 1 >= min_length:
                        yield pathv + (w,)
                    continue
                stack.append((pathv + (w,), used | (1 << w)))


def hole_lengths(g: Graph) -> set[int]:
    return {len(c) for c in induced_cycles(g, 4)}


def has_hole_geq(g: Graph, n: int) -> bool:
    """True iff ``g`` has an induced cycle on at least ``n >= 4`` vertices."""
    if n < 4:
        raise ValueError(f"hole length bound must be >= 4, got {n}")
    if g.n < n:
        return False
    return next(induced_cycles(g, n), None) is not None


# -------------------------------------------------------- canonical labels

def _refine(adj, cells):
    """Refine an ordered partition to the coarsest equitable refinement.

    Split cells are ordered by their neighbour-count signature, so the result
    depends only on the isomorphism type of the coloured graph.
    """
    while True:
        masks = [mask_of(c) for c in cells]
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_rows(adj, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        nb = adj[v]
        while nb:
            low = nb & -nb
            row |= 1 << pos[low.bit_length() - 1]
            nb ^= low
        rows.append(row)
    return tuple(rows)


def canonical_labeling(g: Graph) -> tuple:
    """Return ``(order, rows)``: ``order[i]`` is the vertex placed at position
    ``i`` in the canonical form and ``rows`` its adjacency.

    Individualisation-refinement with a max-certificate leaf rule.  Branching
    only tries one vertex per class of twins, which removes the factorial
    blow-up on cliques, cocliques and complete multipartite graphs.
    """
    adj = g.adj
    n = g.n
    if n == 0:
        return (), ()
    by_degree: dict = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = _refine(adj, [by_degree[d] for d in sorted(by_degree)])

    best_rows = None
    best_order = None

    def search(cells):
        nonlocal best_rows, best_order
        if len(cells) == n:
            order = [c[0] for c in cells]
            rows = _leaf_rows(adj, order)
            if best_rows is None or rows > best_rows:
                best_rows, best_order = rows, order
            return
        # first smallest non-singleton cell
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        cell = cells[idx]
        reps = []
        for v in cell:
            bv = 1 << v
            if any((adj[v] & ~(1 << r)) == (adj[r] & ~bv) for r in reps):
                continue
            reps.append(v)
        for v in reps:
            rest = [w for w in cell if w != v]
            search(_refine(adj, cells[:idx] + [[v], rest] + cells[idx + 1:]))

    search(start)
    return tuple(best_order), best_rows


def canonical_form(g: Graph) -> Graph:
    """Canonical representative of ``g``'s isomorphism class."""
    _, rows = canonical_labeling(g)
    return Graph._trusted(g.n, rows)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1) == canonical_form(g2)
