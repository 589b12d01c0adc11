"""Split graphs and the composition ``(S, A, B) o H``.

``(S, A, B) o H`` is the disjoint union of a split graph ``S`` (``A`` a clique,
``B`` an independent set) and an arbitrary graph ``H``, plus every edge
between ``A`` and ``H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import (
    Graph,
    bits,
    cycle,
    find_induced,
    induced_cycles,
    induced_subgraph,
    mask_of,
    matching,
)
from .sequences import DEFAULT_BOUND, enumerate_realizations, is_graphical


def is_clique(g: Graph, xs: int) -> bool:
    return all((g.adj[v] | (1 << v)) & xs == xs for v in bits(xs))


def is_independent(g: Graph, xs: int) -> bool:
    return all(not g.adj[v] & xs for v in bits(xs))


@dataclass(frozen=True)
class SplitPartition:
    a: tuple
    b: tuple

    @property
    def a_mask(self) -> int:
        return mask_of(self.a)

    @property
    def b_mask(self) -> int:
        return mask_of(self.b)

    def problems(self, g: Graph) -> list[str]:
        """Reasons this is not a split partition of ``g`` (empty when valid)."""
        out = []
        am, bm = self.a_mask, self.b_mask
        if am & bm:
            out.append("A and B overlap")
        if am | bm != g.vertex_mask or len(self.a) + len(self.b) != g.n:
            out.append("A and B do not cover the vertex set exactly")
        if (am | bm) & ~g.vertex_mask:
            out.append("vertex index out of range")
        else:
            if not is_clique(g, am):
                out.append("A is not a clique")
            if not is_independent(g, bm):
                out.append("B is not an independent set")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)


def _partition(g: Graph, am: int) -> SplitPartition:
    return SplitPartition(tuple(bits(am)), tuple(bits(g.vertex_mask & ~am)))


def _threshold_clique(g: Graph) -> int:
    """The top-``m`` vertices by degree, ``m = max{i : d_i >= i - 1}``."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    m = 0
    for i, v in enumerate(order, start=1):
        if g.degree(v) >= i - 1:
            m = i
    return mask_of(order[:m])


def is_split_graph(g: Graph) -> bool:
    """Threshold test: the ``m`` highest-degree vertices must be a clique and
    the rest independent."""
    am = _threshold_clique(g)
    return is_clique(g, am) and is_independent(g, g.vertex_mask & ~am)


def is_split_by_forbidden(g: Graph) -> bool:
    """Independent test: no induced 2K2, C4 or C5."""
    return not any(find_induced(g, h) is not None for h in (matching(2), cycle(4), cycle(5)))


def split_partitions_brute(g: Graph) -> list[SplitPartition]:
    """Every split partition, by trying every vertex subset as ``A``."""
    out = []
    for am in range(1 << g.n):
        if is_clique(g, am) and is_independent(g, g.vertex_mask & ~am):
            out.append(_partition(g, am))
    return out


def split_partition_search(g: Graph) -> Optional[SplitPartition]:
    """Direct search: put each vertex on the clique side or the independent
    side, backtracking as soon as either side breaks."""
    side_a = side_b = 0

    def place(v: int) -> bool:
        nonlocal side_a, side_b
        if v == g.n:
            return True
        nb = g.adj[v]
        if side_a & ~nb == 0:
            side_a |= 1 << v
            if place(v + 1):
                return True
            side_a &= ~(1 << v)
        if not side_b & nb:
            side_b |= 1 << v
            if place(v + 1):
                return True
            side_b &= ~(1 << v)
        return False

    return _partition(g, side_a) if place(0) else None


def find_split_partition(g: Graph) -> Optional[SplitPartition]:
    """A split partition with a largest complete side, breaking ties by the
    lexicographically least sorted ``A``.  None when ``g`` is not split.

    Largest complete sides are maximum cliques.  Besides the threshold clique
    ``A0`` those are ``A0 - a + b`` for ``b`` outside with ``N(b) = A0 - a``.
    """
    a0 = _threshold_clique(g)
    full = g.vertex_mask
    if not (is_clique(g, a0) and is_independent(g, full & ~a0)):
        return None
    candidates = [a0]
    for b in bits(full & ~a0):
        nb = g.adj[b]
        missing = a0 & ~nb
        if missing.bit_count() == 1 and not nb & ~a0:
            alt = (a0 & ~missing) | (1 << b)
            if is_independent(g, full & ~alt):
                candidates.append(alt)
    best = min(candidates, key=lambda m: tuple(bits(m)))
    return _partition(g, best)


def is_split_sequence(d) -> bool:
    """Degree-sequence test: Erdős–Gallai equality at ``k = m``, where
    ``m = max{i : d_i >= i - 1}`` (1-based)."""
    d = tuple(d)
    if not is_graphical(d):
        raise ValueError(f"{d} is not graphical")
    m = 0
    for i, x in enumerate(d, start=1):
        if x >= i - 1:
            m = i
    return sum(d[:m]) == m * (m - 1) + sum(min(x, m) for x in d[m:])


@dataclass(frozen=True)
class CompositionSpec:
    """``(s, a, b) o h``; ``b`` is every vertex of ``s`` not in ``a``."""

    s: Graph
    a: tuple
    h: Graph
    b: tuple = field(init=False)

    def __post_init__(self):
        a = tuple(sorted(set(self.a)))
        object.__setattr__(self, "a", a)
        if any(not 0 <= v < self.s.n for v in a):
            raise ValueError(f"A contains indices outside S: {a}")
        object.__setattr__(self, "b", tuple(v for v in range(self.s.n) if v not in a))
        problems = self.partition.problems(self.s)
        if problems:
            raise ValueError("invalid split partition: " + "; ".join(problems))

    @property
    def partition(self) -> SplitPartition:
        return SplitPartition(self.a, self.b)

    def serialize(self) -> dict:
        from .io import to_graph6

        return {"split": to_graph6(self.s), "a": list(self.a), "h": to_graph6(self.h)}


def compose(spec: CompositionSpec) -> Graph:
    """``S`` keeps indices ``0..|S|-1``; ``H``'s vertex ``i`` becomes ``|S| + i``."""
    s, h = spec.s, spec.h
    shift = s.n
    hmask = ((1 << h.n) - 1) << shift
    am = spec.partition.a_mask
    adj = [nb | hmask if am >> v & 1 else nb for v, nb in enumerate(s.adj)]
    adj += [(nb << shift) | am for nb in h.adj]
    return Graph(s.n + h.n, tuple(adj))


def composition_degrees(spec: CompositionSpec) -> tuple:
    """Degree sequence of ``compose(spec)`` from degree arithmetic alone."""
    s, h = spec.s, spec.h
    a = set(spec.a)
    degs = [s.degree(v) + (h.n if v in a else 0) for v in range(s.n)]
    degs += [h.degree(v) + len(a) for v in range(h.n)]
    return tuple(sorted(degs, reverse=True))


def exterior_split(g: Graph, core: int) -> Optional[tuple]:
    """If every vertex outside ``core`` is complete or anticomplete to it, the
    complete ones form a clique and the anticomplete ones an independent set,
    return ``(a_mask, b_mask)``; otherwise None."""
    am = bm = 0
    for x in bits(g.vertex_mask & ~core):
        nb = g.adj[x] & core
        if nb == core:
            am |= 1 << x
        elif nb == 0:
            bm |= 1 << x
        else:
            return None
    if not (is_clique(g, am) and is_independent(g, bm)):
        return None
    return am, bm


def spec_from_core(g: Graph, core: int, h: Graph, am: int) -> CompositionSpec:
    """Read ``g`` as ``(g - core, A, B) o h``, where ``core`` induces a copy
    of ``h`` and ``am`` is the complete side.  The result is isomorphic to
    ``g``, not equal to it."""
    outside = g.vertex_mask & ~core
    keep = list(bits(outside))
    pos = {v: i for i, v in enumerate(keep)}
    return CompositionSpec(induced_subgraph(g, outside), tuple(pos[v] for v in bits(am)), h)


def match_split_compose_cycle(d, k: int, bound: int = DEFAULT_BOUND, realizations=None) -> Optional[CompositionSpec]:
    """A spec ``(S, A, B) o C_k`` whose degree sequence is ``d``, or None.

    Searches the realizations of ``d`` for an induced ``C_k`` whose exterior
    splits into a clique complete to it and an independent set anticomplete
    to it.
    """
    d = tuple(d)
    if k < 3:
        raise ValueError("cycle length must be >= 3")
    if not is_graphical(d):
        raise ValueError(f"{d} is not graphical")
    n = len(d)
    if n < k:
        return None
    # the cycle vertices all have degree 2 + |A|
    if not any(d.count(2 + a) >= k for a in range(n - k + 1)):
        return None
    if realizations is None:
        realizations = enumerate_realizations(d, bound)
    for g in realizations:
        spec = split_compose_witness(g, k)
        if spec is not None:
            return spec
    return None


def split_compose_witness(g: Graph, k: int) -> Optional[CompositionSpec]:
    """Read ``g`` itself as ``(S, A, B) o C_k`` if possible."""
    for cyc in induced_cycles(g, k):
        if len(cyc) != k:
            continue
        core = mask_of(cyc)
        split = exterior_split(g, core)
        if split is not None:
            return spec_from_core(g, core, cycle(k), split[0])
    return None
