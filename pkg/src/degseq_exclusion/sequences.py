"""Degree sequences: graphicality, realizations and the exclusion preorder.

A degree sequence is a plain tuple of ints in nonincreasing order.  ``D1 <= D2``
in the exclusion preorder ("D1 precedes D2") when some realization of ``D2``
has an induced subgraph realizing ``D1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .graph import Graph, bits, canonical_form, induced_subgraph, is_induced_embedding

DEFAULT_BOUND = 10


def as_sequence(terms: Iterable[int]) -> tuple:
    """Sort into the canonical nonincreasing tuple form."""
    d = tuple(sorted((int(x) for x in terms), reverse=True))
    if d and d[-1] < 0:
        raise ValueError(f"negative degree in {d}")
    return d


def is_graphical(d: Sequence[int]) -> bool:
    """Erdős–Gallai test.  ``d`` must be nonincreasing."""
    n = len(d)
    if any(d[i] < d[i + 1] for i in range(n - 1)):
        raise ValueError(f"sequence {tuple(d)} is not nonincreasing")
    if n == 0:
        return True
    if d[-1] < 0 or sum(d) % 2:
        return False
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return False
    return True


def _require_graphical(d) -> tuple:
    d = tuple(d)
    if not is_graphical(d):
        raise ValueError(f"{d} is not graphical")
    return d


def _check_bound(d, bound: int):
    if len(d) > bound:
        raise ValueError(f"sequence length {len(d)} exceeds the bound {bound}")


def realize_one(d: Sequence[int]) -> Graph:
    """Havel–Hakimi: connect the vertex of largest residual demand to the
    next largest ones, repeatedly."""
    d = _require_graphical(d)
    residual = list(d)
    adj = [0] * len(d)
    while d:
        order = sorted(range(len(d)), key=lambda v: (-residual[v], v))
        v = order[0]
        if residual[v] == 0:
            break
        targets = order[1:residual[v] + 1]
        if len(targets) < residual[v] or residual[targets[-1]] == 0:
            raise AssertionError("Havel-Hakimi stalled on a graphical sequence")
        for u in targets:
            adj[v] |= 1 << u
            adj[u] |= 1 << v
            residual[u] -= 1
        residual[v] = 0
    return Graph(len(d), tuple(adj))


def enumerate_realizations(d: Sequence[int], bound: int = DEFAULT_BOUND) -> list[Graph]:
    """All realizations of ``d`` up to isomorphism, as canonical forms sorted
    by adjacency.  Empty list when ``d`` is not graphical.

    Vertices are filled in order; each vertex picks its later neighbours by
    count from classes of interchangeable vertices (same residual demand,
    same neighbours so far), and the residual demand of the rest must stay
    graphical.
    """
    d = tuple(d)
    _check_bound(d, bound)
    if not is_graphical(d):
        return []
    n = len(d)
    residual = list(d)
    adj = [0] * n
    found: dict = {}

    def fill(i: int):
        if i == n:
            c = canonical_form(Graph._trusted(n, adj))
            found[c.adj] = c
            return
        need = residual[i]
        classes: dict = {}
        for j in range(i + 1, n):
            if residual[j] > 0:
                classes.setdefault((residual[j], adj[j]), []).append(j)
        groups = list(classes.values())
        if need > sum(len(gr) for gr in groups):
            return

        def choose(k: int, left: int, picked: list):
            if left == 0:
                for j in picked:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                    residual[j] -= 1
                saved, residual[i] = residual[i], 0
                rest = sorted(residual[i + 1:], reverse=True)
                if is_graphical(rest):
                    fill(i + 1)
                residual[i] = saved
                for j in picked:
                    adj[i] &= ~(1 << j)
                    adj[j] &= ~(1 << i)
                    residual[j] += 1
                return
            if k == len(groups):
                return
            room = sum(len(gr) for gr in groups[k:])
            if room < left:
                return
            for c in range(min(left, len(groups[k])), -1, -1):
                choose(k + 1, left - c, picked + groups[k][:c])

        choose(0, need, [])

    fill(0)
    return [found[k] for k in sorted(found)]


def complement_sequence(d: Sequence[int]) -> tuple:
    d = _require_graphical(d)
    n = len(d)
    return tuple(sorted((n - 1 - x for x in d), reverse=True))


@dataclass(frozen=True)
class PrecedesWitness:
    """``g1`` realizes the smaller sequence, ``g2`` the larger one, and
    ``embedding[i]`` is the vertex of ``g2`` playing ``g1``'s vertex ``i``."""

    g1: Graph
    g2: Graph
    embedding: tuple

    def verify(self, d1, d2) -> bool:
        return (
            self.g1.degree_sequence() == tuple(d1)
            and self.g2.degree_sequence() == tuple(d2)
            and is_induced_embedding(self.g2, self.g1, self.embedding)
        )


def subset_with_sequence(g: Graph, d1: Sequence[int]) -> Optional[int]:
    """Bitmask of a vertex set of ``g`` whose induced degree sequence is
    ``d1``, or None."""
    m = len(d1)
    if m > g.n:
        return None
    target = tuple(d1)
    if m == 0:
        return 0
    top = target[0]
    # a vertex of induced degree top needs at least top neighbours in g
    degs = g.degrees()
    if sum(1 for x in degs if x >= top) < sum(1 for x in target if x == top):
        return None
    for combo in combinations(range(g.n), m):
        xm = 0
        for v in combo:
            xm |= 1 << v
        seq = sorted(((g.adj[v] & xm).bit_count() for v in combo), reverse=True)
        if tuple(seq) == target:
            return xm
    return None


def find_precedes_witness(d1, d2, bound: int = DEFAULT_BOUND, realizations=None) -> Optional[PrecedesWitness]:
    """Witness for ``d1`` preceding ``d2``, or None if ``d2`` excludes ``d1``.

    ``realizations`` may carry a precomputed ``enumerate_realizations(d2)``.
    """
    d1 = _require_graphical(d1)
    d2 = _require_graphical(d2)
    _check_bound(d2, bound)
    if len(d1) > len(d2):
        return None
    if realizations is None:
        realizations = enumerate_realizations(d2, bound)
    for g in realizations:
        xm = subset_with_sequence(g, d1)
        if xm is not None:
            return PrecedesWitness(induced_subgraph(g, xm), g, tuple(bits(xm)))
    return None


def precedes(d1, d2, bound: int = DEFAULT_BOUND, realizations=None) -> bool:
    return find_precedes_witness(d1, d2, bound, realizations) is not None


def excludes_graph(d, h: Graph, bound: int = DEFAULT_BOUND, realizations=None) -> bool:
    """True iff ``d`` excludes the degree sequence of ``h``."""
    return not precedes(h.degree_sequence(), d, bound, realizations)


def forcibly_counterexample(d, prop: Callable[[Graph], bool], bound: int = DEFAULT_BOUND,
                            realizations=None) -> Optional[Graph]:
    """First realization of ``d`` violating ``prop``, or None."""
    d = _require_graphical(d)
    _check_bound(d, bound)
    if realizations is None:
        realizations = enumerate_realizations(d, bound)
    for g in realizations:
        if not prop(g):
            return g
    return None


def forcibly_holds(d, prop: Callable[[Graph], bool], bound: int = DEFAULT_BOUND, realizations=None) -> bool:
    return forcibly_counterexample(d, prop, bound, realizations) is None
