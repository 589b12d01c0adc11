"""Exhaustive certification of the exclusion results over small universes.

Every ``verify_*`` function scans a complete universe (all graphs, or all
graphical sequences, up to a vertex bound) and returns a
:class:`VerificationReport`.  A report with no counterexamples means every
instance in the universe was checked and agreed.

Mutants
-------
Each check can be run against a deliberately broken variant to show the
harness notices.  ``MUTANTS`` maps names to what they break:

``wrong-composition-side``
    the composition joins ``H`` to ``B`` instead of ``A``
``dropped-theorem-class``
    the cycle classifier forgets the ``SPLIT o C_(n+2)`` class
``skipped-hypothesis``
    the half-join check ignores the "excludes ``C_(k-1)``" hypothesis
``broken-split-test``
    split recognition only forbids 2K2 and C4, so C5 counts as split
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence

from .classify import (
    FORCIBLY_CHORDAL,
    SPLIT_COMPOSE_K33,
    classify_c4_c5,
    classify_exclusion,
    classify_m2_c4,
    classify_matching,
    classify_square,
    forcibly_no_hole_label,
    graph_m2_c4_structure,
    split_compose_label,
)
from .enumeration import UNLABELED_GRAPH_COUNTS, Universe, all_graphical_sequences
from .graph import (
    Graph,
    add_edges,
    bits,
    canonical_form,
    contract_pair,
    cycle,
    disjoint_union,
    find_induced,
    has_hole_geq,
    hole_lengths,
    induced_cycles,
    induced_subgraph,
    is_chordal,
    is_isomorphic,
    mask_of,
    matching,
    path,
    remove_edges,
    subdivide_edge,
)
from .io import format_sequence, poset_to_dot, to_graph6
from .sequences import complement_sequence, subset_with_sequence
from .split import (
    CompositionSpec,
    compose,
    exterior_split,
    find_split_partition,
    is_split_by_forbidden,
    is_split_graph,
    is_split_sequence,
    spec_from_core,
    split_partition_search,
    split_partitions_brute,
)

MUTANTS = {
    "wrong-composition-side": "composition joins H to B instead of A",
    "dropped-theorem-class": "cycle classifier omits the SPLIT o C_(n+2) class",
    "skipped-hypothesis": "half-join check ignores the 'excludes C_(k-1)' hypothesis",
    "broken-split-test": "split test forbids only 2K2 and C4",
}


class GadgetPreconditionError(ValueError):
    """A proof gadget was applied to a configuration it is not defined on."""


@dataclass
class VerificationReport:
    claim: str
    universe: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def add(self, record: dict):
        self.counterexamples.append(record)

    def finish(self, started: float) -> "VerificationReport":
        self.counterexamples.sort(key=lambda r: json.dumps(r, sort_keys=True))
        self.elapsed = time.perf_counter() - started
        return self

    def to_record(self) -> dict:
        # elapsed time is left out so records are reproducible byte for byte
        return {
            "claim": self.claim,
            "universe": self.universe,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
        }

    def to_text(self) -> str:
        status = "ok" if self.ok else "FAILED"
        lines = [f"[{status}] {self.claim} over {self.universe}: {self.checked} instances, "
                 f"{len(self.counterexamples)} counterexamples ({self.elapsed:.2f}s)"]
        lines += [f"  skipped: {s}" for s in self.skipped]
        lines += [f"  counterexample: {json.dumps(c, sort_keys=True)}" for c in self.counterexamples[:20]]
        if len(self.counterexamples) > 20:
            lines.append(f"  ... {len(self.counterexamples) - 20} more")
        return "\n".join(lines)


def _check_mutant(mutant):
    if mutant is not None and mutant not in MUTANTS:
        raise ValueError(f"unknown mutant {mutant!r}; choose from {sorted(MUTANTS)}")


def _pmap(func: Callable, chunks: list, workers: int) -> list:
    """Map over chunks, in order, optionally in worker processes."""
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(workers) as ex:
            return list(ex.map(func, chunks))
    return [func(c) for c in chunks]


def _chunks(items: list, workers: int) -> list:
    if workers <= 1:
        return [items]
    size = max(1, -(-len(items) // (workers * 4)))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _universe(universe: Optional[Universe], max_vertices: int, workers: int = 1) -> Universe:
    if universe is None or universe.max_vertices < max_vertices:
        return Universe(max_vertices, workers=workers)
    return universe


# ------------------------------------------------------------- mutable parts

def _compose_for(mutant):
    if mutant != "wrong-composition-side":
        return compose

    def compose_wrong_side(spec: CompositionSpec) -> Graph:
        s, h = spec.s, spec.h
        hmask = ((1 << h.n) - 1) << s.n
        bm = spec.partition.b_mask
        adj = [nb | hmask if bm >> v & 1 else nb for v, nb in enumerate(s.adj)]
        adj += [(nb << s.n) | bm for nb in h.adj]
        return Graph(s.n + h.n, tuple(adj))

    return compose_wrong_side


def _split_test_for(mutant):
    if mutant != "broken-split-test":
        return is_split_graph
    return lambda g: find_induced(g, matching(2)) is None and find_induced(g, cycle(4)) is None


def _classes_for(mutant, n: int, classes: tuple) -> tuple:
    if mutant == "dropped-theorem-class":
        return tuple(c for c in classes if c != split_compose_label(n + 2))
    return classes


# ---------------------------------------------------------- split recognition

def _no_hole_no_m2(g: Graph) -> bool:
    return find_induced(g, matching(2)) is None and not has_hole_geq(g, 4)


def _prop_split_graphs(args):
    graphs, mutant = args
    split_test = _split_test_for(mutant)
    out = []
    for g in graphs:
        values = {
            "threshold": split_test(g),
            "partition_search": split_partition_search(g) is not None,
            "tie_broken_partition": find_split_partition(g) is not None,
            "no_m2_no_hole": _no_hole_no_m2(g),
            "no_m2_c4_c5": is_split_by_forbidden(g),
            "degree_equality": is_split_sequence(g.degree_sequence()),
        }
        if len(set(values.values())) != 1:
            out.append({"graph6": to_graph6(g), "sequence": list(g.degree_sequence()), "values": values})
    return out


def verify_prop_split(max_n: int, universe: Optional[Universe] = None, mutant: Optional[str] = None,
                      workers: int = 1) -> VerificationReport:
    """Split recognition six ways on every graph, and the degree-sequence
    form on every graphical sequence (split iff excludes 2K2, C4 and C5)."""
    _check_mutant(mutant)
    if max_n > 8:
        raise ValueError("split verification is bounded to 8 vertices")
    started = time.perf_counter()
    uni = _universe(universe, max_n, workers)
    rep = VerificationReport("prop1", f"all graphs and graphical sequences on <= {max_n} vertices")
    graphs = [g for n in range(max_n + 1) for g in uni.graphs(n)]
    for part in _pmap(_prop_split_graphs, [(c, mutant) for c in _chunks(graphs, workers)], workers):
        for rec in part:
            rep.add(rec)
    rep.checked += len(graphs)
    for d in (d for n in range(max_n + 1) for d in uni.sequences(n)):
        reals = uni.realizations(d)
        excl = all(subset_with_sequence(g, t) is None for g in reals
                   for t in ((1, 1, 1, 1), (2, 2, 2, 2), (2, 2, 2, 2, 2)))
        forcibly_split = all(is_split_graph(g) for g in reals)
        seq_split = is_split_sequence(d)
        if not (seq_split == excl == forcibly_split):
            rep.add({"sequence": list(d), "is_split_sequence": seq_split,
                     "excludes_m2_c4_c5": excl, "forcibly_split": forcibly_split})
        rep.checked += 1
    return rep.finish(started)


# ------------------------------------------------------ composition and cycles

def verify_lemma_s_or_h(s_bound: int = 4, h_bound: int = 5, cycle_lengths: Optional[Sequence[int]] = None,
                        mutant: Optional[str] = None) -> VerificationReport:
    """For every split ``S`` (every split partition) and every ``H``: the
    composition has an induced ``C_n`` iff ``S`` or ``H`` does.

    ``cycle_lengths`` defaults to every ``n`` from 4 to ``|S| + |H|``.
    """
    _check_mutant(mutant)
    if s_bound > 4 or h_bound > 5:
        raise ValueError("exhaustive mode supports |S| <= 4 and |H| <= 5")
    started = time.perf_counter()
    comp = _compose_for(mutant)
    uni = Universe(max(s_bound, h_bound))
    lengths = "4..|S|+|H|" if cycle_lengths is None else ",".join(map(str, cycle_lengths))
    rep = VerificationReport("lemma3", f"split S <= {s_bound}, H <= {h_bound}, n in {lengths}")
    specs = []
    for s in (g for n in range(s_bound + 1) for g in uni.graphs(n)):
        for part in split_partitions_brute(s):
            specs.append(CompositionSpec(s, part.a, Graph(0, ())))
    hs = [g for n in range(h_bound + 1) for g in uni.graphs(n)]
    h_holes = {h: hole_lengths(h) for h in hs}
    for base in specs:
        s_holes = hole_lengths(base.s)
        for h in hs:
            spec = CompositionSpec(base.s, base.a, h)
            g = comp(spec)
            g_holes = hole_lengths(g)
            ns = cycle_lengths if cycle_lengths is not None else range(4, g.n + 1)
            for n in ns:
                in_g = n in g_holes
                in_parts = n in s_holes or n in h_holes[h]
                rep.checked += 1
                if in_g != in_parts:
                    rep.add({"split": to_graph6(base.s), "a": list(base.a), "h": to_graph6(h), "n": n,
                             "composition_has_cycle": in_g, "parts_have_cycle": in_parts})
    return rep.finish(started)


# ------------------------------------------------------------------- gadgets

class ContractSubdivide(NamedTuple):
    before: Graph  # G[C + x]
    after: Graph  # contract {v, z}, then subdivide xy with t
    x: int  # index of x in ``after``
    t: int  # index of t in ``after``


def _require(cond: bool, message: str):
    if not cond:
        raise GadgetPreconditionError(message)


def _check_cycle_order(g: Graph, cyc: Sequence[int]):
    k = len(cyc)
    _require(len(set(cyc)) == k, "cycle vertices must be distinct")
    _require(all(0 <= c < g.n for c in cyc), "cycle vertex out of range")
    _require(k >= 5, f"cycle must have at least 5 vertices, got {k}")
    sub = induced_subgraph(g, cyc)
    _require(all(x == 2 for x in sub.degrees()) and all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)),
             "listed vertices do not induce a cycle in the given cyclic order")


def gadget_contract_subdivide(g: Graph, cyc: Sequence[int], x: int, y: int, z: int, v: int) -> ContractSubdivide:
    """Build ``K = G[C + x]`` and ``K'`` = ``K`` with ``v, z`` contracted and
    the edge ``xy`` subdivided by a new vertex ``t``.

    ``cyc`` lists the cycle in cyclic order.  ``K`` and ``K'`` have the same
    degree sequence and ``K' - {x, t}`` is a cycle one shorter than ``C``.
    """
    _check_cycle_order(g, cyc)
    cset = set(cyc)
    _require(0 <= x < g.n and x not in cset, "x must be a vertex outside the cycle")
    _require(y in cset, "y must lie on the cycle")
    _require(z in cset, "z must lie on the cycle")
    _require(g.has_edge(x, y), "x must be adjacent to y")
    _require(not g.has_edge(x, z), "x must be nonadjacent to z")
    i = list(cyc).index(z)
    _require(v in (cyc[i - 1], cyc[(i + 1) % len(cyc)]), "v must be a cycle neighbour of z")
    _require(v != y, "v must differ from y")

    keep = sorted(cset | {x})
    pos = {w: j for j, w in enumerate(keep)}
    k = induced_subgraph(g, keep)
    kv, kz, kx, ky = pos[v], pos[z], pos[x], pos[y]
    drop = max(kv, kz)
    shift = lambda w: w - 1 if w > drop else w  # noqa: E731
    contracted = contract_pair(k, kv, kz)
    after = subdivide_edge(contracted, shift(kx), shift(ky))
    return ContractSubdivide(k, after, shift(kx), after.n - 1)


def gadget_rewire(g: Graph, c1: int, c3: int, x: int, y: int) -> Graph:
    """``G + c1c3 - c3x + xy - yc1``.  Every vertex keeps its degree."""
    verts = (c1, c3, x, y)
    _require(len(set(verts)) == 4, "c1, c3, x, y must be distinct")
    _require(all(0 <= w < g.n for w in verts), "vertex out of range")
    _require(not g.has_edge(c1, c3), "c1c3 must be a non-edge")
    _require(g.has_edge(c3, x), "c3x must be an edge")
    _require(not g.has_edge(x, y), "xy must be a non-edge")
    _require(g.has_edge(y, c1), "yc1 must be an edge")
    return add_edges(remove_edges(g, [(c3, x), (y, c1)]), [(c1, c3), (x, y)])


def gadget_matching_pair(k: int) -> tuple:
    """Degree sequences of ``C_k + P2`` and ``C_(k-1) + P3`` (disjoint unions)."""
    if k < 5:
        raise ValueError(f"k must be >= 5, got {k}")
    return (disjoint_union(cycle(k), path(2)).degree_sequence(),
            disjoint_union(cycle(k - 1), path(3)).degree_sequence())


def _random_contract_config(rng: random.Random):
    k = rng.randint(5, 8)
    extra = rng.randint(1, 3)
    n = k + extra
    edges = [(i, (i + 1) % k) for i in range(k)]
    for a in range(k, n):
        for b in range(n):
            if b != a and (b < k or b < a) and rng.random() < 0.5:
                edges.append((a, b))
    x = k
    # x must see part, but not all, of the cycle
    nbrs = {b for a, b in edges if a == x and b < k}
    if not nbrs:
        b = rng.randrange(k)
        edges.append((x, b))
        nbrs.add(b)
    if len(nbrs) == k:
        b = rng.randrange(k)
        edges = [e for e in edges if e != (x, b)]
        nbrs.discard(b)
    y = rng.choice(sorted(nbrs))
    z = rng.choice([c for c in range(k) if c not in nbrs])
    v = rng.choice([c for c in ((z - 1) % k, (z + 1) % k) if c != y])
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])
    return g, [perm[c] for c in range(k)], perm[x], perm[y], perm[z], perm[v]


def _random_rewire_config(rng: random.Random):
    k = rng.randint(5, 8)
    extra = rng.randint(0, 2)
    n = k + 2 + extra
    xv, yv = k, k + 1
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(xv, c) for c in range(k)] + [(yv, c) for c in range(k)]
    for a in range(k + 2, n):
        for b in range(a):
            if rng.random() < 0.5:
                edges.append((a, b))
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])
    return g, [perm[c] for c in range(k)], perm[xv], perm[yv]


def _is_cycle_in_order(g: Graph, order: Sequence[int]) -> bool:
    k = len(order)
    sub = induced_subgraph(g, order)
    return all(x == 2 for x in sub.degrees()) and all(g.has_edge(order[i], order[(i + 1) % k]) for i in range(k))


def verify_gadgets(samples: int = 1000, seed: int = 0) -> VerificationReport:
    """Degree preservation of the proof gadgets on random valid
    configurations, plus the cycle degree identities up to 10 vertices."""
    started = time.perf_counter()
    rep = VerificationReport("gadgets", f"{samples} random configurations per gadget, seed {seed}; identities to 10")
    rng = random.Random(seed)
    for _ in range(samples):
        g, cyc, x, y, z, v = _random_contract_config(rng)
        res = gadget_contract_subdivide(g, cyc, x, y, z, v)
        rest = induced_subgraph(res.after, res.after.vertex_mask & ~(1 << res.x) & ~(1 << res.t))
        ok_deg = res.before.degree_sequence() == res.after.degree_sequence()
        ok_cyc = is_isomorphic(rest, cycle(len(cyc) - 1))
        rep.checked += 1
        if not (ok_deg and ok_cyc):
            rep.add({"gadget": "contract_subdivide", "graph6": to_graph6(g), "cycle": cyc,
                     "xyzv": [x, y, z, v], "same_degrees": ok_deg, "shorter_cycle": ok_cyc})
    for _ in range(samples):
        g, cyc, x, y = _random_rewire_config(rng)
        c1, c3 = cyc[0], cyc[2]
        g2 = gadget_rewire(g, c1, c3, x, y)
        ok_deg = g.degree_sequence() == g2.degree_sequence()
        ok_cyc = _is_cycle_in_order(g2, [c1] + cyc[2:])
        rep.checked += 1
        if not (ok_deg and ok_cyc):
            rep.add({"gadget": "rewire", "graph6": to_graph6(g), "cycle": cyc, "xy": [x, y],
                     "same_degrees": ok_deg, "shorter_cycle": ok_cyc})
    for k in range(5, 11):
        a, b = gadget_matching_pair(k)
        rep.checked += 1
        if a != b:
            rep.add({"gadget": "matching_pair", "k": k, "left": list(a), "right": list(b)})
    for n in range(4, 8):
        for k in range(3, 11 - n):
            rep.checked += 1
            lhs = cycle(n + k).degree_sequence()
            rhs = disjoint_union(cycle(n), cycle(k)).degree_sequence()
            if lhs != rhs:
                rep.add({"identity": "cycle_split", "n": n, "k": k})
    return rep.finish(started)


# ------------------------------------------------------------------ half-join

def _half_join_chunk(args):
    items, ks, mutant = args
    comp = _compose_for(mutant)
    out = []
    checked = 0
    for d, reals in items:
        for k in ks:
            if len(d) < k:
                continue
            if mutant != "skipped-hypothesis":
                shorter = (2,) * (k - 1)
                if any(subset_with_sequence(g, shorter) is not None for g in reals):
                    continue
            for g in reals:
                for cyc in induced_cycles(g, k):
                    if len(cyc) != k:
                        continue
                    checked += 1
                    core = mask_of(cyc)
                    problem = None
                    outside = g.vertex_mask & ~core
                    am = bm = 0
                    for x in bits(outside):
                        nb = g.adj[x] & core
                        if nb == core:
                            am |= 1 << x
                        elif nb == 0:
                            bm |= 1 << x
                        else:
                            problem = f"vertex {x} is neither complete nor anticomplete to the cycle"
                            break
                    if problem is None and am | bm != outside:
                        problem = "A and B do not cover G - C"
                    if problem is None and exterior_split(g, core) is None:
                        problem = "complete side not a clique or anticomplete side not independent"
                    if problem is None:
                        rebuilt = comp(spec_from_core(g, core, cycle(k), am))
                        if canonical_form(rebuilt) != canonical_form(g):
                            problem = "rebuilt composition is not isomorphic to G"
                    if problem is not None:
                        out.append({"sequence": list(d), "k": k, "graph6": to_graph6(g),
                                    "cycle": list(cyc), "problem": problem})
    return out, checked


def verify_lemma_half_join(max_n: int, ks: Sequence[int] = (5, 6), universe: Optional[Universe] = None,
                           mutant: Optional[str] = None, workers: int = 1) -> VerificationReport:
    """Whenever ``d`` excludes ``C_(k-1)`` and a realization contains an
    induced ``C_k``, that realization is ``(G[A+B], A, B) o C``."""
    _check_mutant(mutant)
    if max_n > 9:
        raise ValueError("half-join verification is bounded to 9 vertices")
    if any(k < 5 for k in ks):
        raise ValueError("k must be >= 5")
    started = time.perf_counter()
    uni = _universe(universe, max_n, workers)
    rep = VerificationReport("lemma4", f"graphical sequences of length <= {max_n}, k in {list(ks)}")
    live = [k for k in ks if k <= max_n]
    rep.skipped = [f"k={k}: no sequence of length >= {k} within the bound" for k in ks if k > max_n]
    items = [(d, uni.realizations(d)) for n in range(max_n + 1) for d in uni.sequences(n)]
    for out, checked in _pmap(_half_join_chunk, [(c, live, mutant) for c in _chunks(items, workers)], workers):
        for rec in out:
            rep.add(rec)
        rep.checked += checked
    return rep.finish(started)


# ----------------------------------------------------------- cycle exclusion

def _theorem_chunk(args):
    items, n, mutant = args
    comp = _compose_for(mutant)
    out = []
    for d, reals in items:
        res = classify_exclusion(d, n, realizations=reals)
        classes = _classes_for(mutant, n, res.classes)
        problems = []
        if res.excludes != bool(classes):
            problems.append("brute-force exclusion disagrees with the structural classes")
        for label, spec in res.compositions.items():
            if comp(spec).degree_sequence() != d:
                problems.append(f"{label} witness does not reproduce the sequence")
        if res.obstruction is not None and not res.obstruction.verify((2,) * n, d):
            problems.append("obstruction witness fails")
        if n == 4:
            chordal = all(is_chordal(g) for g in reals)
            if chordal != (forcibly_no_hole_label(4) in res.classes):
                problems.append("forcibly-no-hole-4 disagrees with forcibly chordal")
        if problems:
            out.append({"sequence": list(d), "n": n, "excludes": res.excludes, "classes": list(classes),
                        "realizations": [to_graph6(g) for g in reals], "problems": problems})
    return out


def verify_theorem(n: int, max_vertices: int, universe: Optional[Universe] = None, mutant: Optional[str] = None,
                   workers: int = 1, allow_long: bool = False) -> VerificationReport:
    """``d`` excludes ``C_n`` iff it is forcibly free of holes on ``>= n``
    vertices, or ``SPLIT o C_(n+1)``, or ``SPLIT o C_(n+2)``.  At ``n = 4``
    the forcibly class is also checked against forcible chordality."""
    _check_mutant(mutant)
    if n < 4:
        raise ValueError("n must be >= 4")
    if max_vertices > 9 or (max_vertices == 9 and not allow_long):
        raise ValueError("max_vertices is bounded to 8 (9 with allow_long)")
    started = time.perf_counter()
    uni = _universe(universe, max_vertices, workers)
    rep = VerificationReport(f"thm-n:{n}", f"graphical sequences of length <= {max_vertices}")
    items = [(d, uni.realizations(d)) for k in range(max_vertices + 1) for d in uni.sequences(k)]
    for out in _pmap(_theorem_chunk, [(c, n, mutant) for c in _chunks(items, workers)], workers):
        for rec in out:
            rep.add(rec)
    rep.checked = len(items)
    return rep.finish(started)


# ------------------------------------------------- matchings and combinations

def verify_theorem_matching(max_vertices: int, universe: Optional[Universe] = None) -> VerificationReport:
    """``d`` excludes 2K2 iff forcibly antichordal, ``SPLIT o C5`` or
    ``SPLIT o K3,3``; classes come from the complement and are checked
    against direct brute force."""
    if max_vertices > 8:
        raise ValueError("max_vertices is bounded to 8")
    started = time.perf_counter()
    uni = _universe(universe, max_vertices)
    rep = VerificationReport("thm6", f"graphical sequences of length <= {max_vertices}")
    for d in (d for k in range(max_vertices + 1) for d in uni.sequences(k)):
        reals = uni.realizations(d)
        res = classify_matching(d, realizations=reals)
        dual = classify_square(complement_sequence(d), realizations=uni.realizations(complement_sequence(d)))
        problems = []
        if not res.consistent:
            problems.append("brute-force exclusion disagrees with the structural classes")
        if res.excludes != dual.excludes:
            problems.append("exclusion of 2K2 differs from exclusion of C4 in the complement")
        problems += res.revalidate()
        rep.checked += 1
        if problems:
            rep.add({"sequence": list(d), "excludes": res.excludes, "classes": list(res.classes),
                     "problems": problems})
    for d, label in (((2, 2, 2, 2, 2), split_compose_label(5)), ((3, 3, 3, 3, 3, 3), SPLIT_COMPOSE_K33)):
        if len(d) > max_vertices:
            rep.skipped.append(f"worked example {format_sequence(d)} longer than the bound")
            continue
        rep.checked += 1
        if label not in classify_matching(d, realizations=uni.realizations(d)).classes:
            rep.add({"sequence": list(d), "missing_class": label})
    return rep.finish(started)


def verify_corollaries(max_vertices: int, universe: Optional[Universe] = None,
                       mutant: Optional[str] = None) -> list[VerificationReport]:
    """Excluding C4 and C5; excluding 2K2 and C4."""
    _check_mutant(mutant)
    if max_vertices > 8:
        raise ValueError("max_vertices is bounded to 8")
    uni = _universe(universe, max_vertices)
    seqs = [d for k in range(max_vertices + 1) for d in uni.sequences(k)]
    reports = []
    for claim, fn in (("cor7", classify_c4_c5), ("cor8", classify_m2_c4)):
        started = time.perf_counter()
        rep = VerificationReport(claim, f"graphical sequences of length <= {max_vertices}")
        for d in seqs:
            res = fn(d, realizations=uni.realizations(d))
            classes = res.classes
            if mutant == "dropped-theorem-class" and claim == "cor7":
                classes = tuple(c for c in classes if c != split_compose_label(6))
            rep.checked += 1
            if res.excludes != bool(classes) or res.revalidate():
                rep.add({"sequence": list(d), "excludes": res.excludes, "classes": list(classes),
                         "problems": res.revalidate() or ["exclusion disagrees with classes"]})
        reports.append(rep.finish(started))
    return reports


def _prop9_chunk(args):
    graphs, mutant = args
    comp = _compose_for(mutant)
    split_test = _split_test_for(mutant)
    out = []
    for g in graphs:
        bad = find_induced(g, matching(2)) is not None or find_induced(g, cycle(4)) is not None
        st = graph_m2_c4_structure(g)
        problem = None
        if bad != (st.kind == "neither"):
            problem = f"structure {st.kind} but induced 2K2/C4 present={bad}"
        elif st.kind == "split" and not (st.partition.is_valid(g) and split_test(g)):
            problem = "split partition does not validate"
        elif st.kind == "split-compose-C5" and not is_isomorphic(comp(st.composition), g):
            problem = "C5 composition does not rebuild the graph"
        if problem:
            out.append({"graph6": to_graph6(g), "sequence": list(g.degree_sequence()), "problem": problem})
    return out


def verify_prop_m2_c4_graphs(max_vertices: int, universe: Optional[Universe] = None, mutant: Optional[str] = None,
                             workers: int = 1) -> VerificationReport:
    """A graph has no induced 2K2 or C4 iff it is split or ``(S, A, B) o C5``."""
    _check_mutant(mutant)
    if max_vertices > 8:
        raise ValueError("max_vertices is bounded to 8")
    started = time.perf_counter()
    uni = _universe(universe, max_vertices, workers)
    rep = VerificationReport("prop9", f"all graphs on <= {max_vertices} vertices")
    graphs = [g for n in range(max_vertices + 1) for g in uni.graphs(n)]
    for out in _pmap(_prop9_chunk, [(c, mutant) for c in _chunks(graphs, workers)], workers):
        for rec in out:
            rep.add(rec)
    rep.checked = len(graphs)
    return rep.finish(started)


def verify_universe_counts(universe: Universe) -> VerificationReport:
    started = time.perf_counter()
    rep = VerificationReport("universe", f"graph and sequence counts for n <= {universe.max_vertices}")
    for n in range(universe.max_vertices + 1):
        rep.checked += 2
        if len(universe.graphs(n)) != UNLABELED_GRAPH_COUNTS[n]:
            rep.add({"n": n, "graphs": len(universe.graphs(n)), "expected": UNLABELED_GRAPH_COUNTS[n]})
        if universe.sequences(n) != all_graphical_sequences(n):
            rep.add({"n": n, "problem": "degree sequences of the graphs differ from the graphical sequences"})
    return rep.finish(started)


# -------------------------------------------------------------------- poset

@dataclass
class ExclusionPoset:
    nodes: list
    down: dict  # sequence -> frozenset of sequences preceding it (itself included)
    covers: list  # (smaller, larger) pairs of the transitive reduction

    def precedes(self, d1, d2) -> bool:
        return tuple(d1) in self.down[tuple(d2)]

    def to_dot(self) -> str:
        name = lambda d: format_sequence(d) or "()"  # noqa: E731
        return poset_to_dot([name(d) for d in self.nodes], [(name(a), name(b)) for a, b in self.covers])

    def to_csv(self) -> str:
        lines = ["lower,upper"]
        lines += [f'"{format_sequence(a)}","{format_sequence(b)}"' for a, b in self.covers]
        return "\n".join(lines) + "\n"


def _downset(g: Graph) -> set:
    seqs = set()
    n = g.n
    adj = g.adj
    for xm in range(1 << n):
        seqs.add(tuple(sorted(((adj[v] & xm).bit_count() for v in bits(xm)), reverse=True)))
    return seqs


def build_exclusion_poset(max_vertices: int, universe: Optional[Universe] = None) -> ExclusionPoset:
    """The exclusion order on every graphical sequence of length at most
    ``max_vertices``, with its Hasse diagram.

    The down-set of ``d`` is the set of degree sequences of induced subgraphs
    of its realizations.  Raises if the computed relation is not reflexive
    and transitive.
    """
    if max_vertices > 7:
        raise ValueError("poset construction is bounded to 7 vertices")
    uni = _universe(universe, max_vertices)
    nodes = [d for k in range(max_vertices + 1) for d in uni.sequences(k)]
    down = {}
    for d in nodes:
        acc: set = set()
        for g in uni.realizations(d):
            acc |= _downset(g)
        down[d] = frozenset(acc)
    for d in nodes:
        if d not in down[d]:
            raise AssertionError(f"reflexivity fails at {d}")
        for e in down[d]:
            if not down[e] <= down[d]:
                raise AssertionError(f"transitivity fails at {e} <= {d}")
    covers = []
    for d in nodes:
        below = down[d] - {d}
        for e in sorted(below, key=lambda s: (len(s), tuple(-x for x in s))):
            between = (f for f in below if len(e) < len(f) and e in down[f])
            if next(between, None) is None:
                covers.append((e, d))
    return ExclusionPoset(nodes, down, covers)


# ---------------------------------------------------------------- dispatch

CLAIMS = ("universe", "prop1", "lemma3", "lemma4", "gadgets", "thm-n:4", "thm-n:5", "thm6", "cor7", "cor8", "prop9")


def run_claim(claim: str, max_vertices: int, universe: Optional[Universe] = None, mutant: Optional[str] = None,
              workers: int = 1, samples: int = 1000, seed: int = 0, allow_long: bool = False) -> list[VerificationReport]:
    """Run one named claim (or ``all``) and return its reports in a fixed order."""
    _check_mutant(mutant)
    if claim == "all":
        uni = _universe(universe, max_vertices, workers)
        out = []
        for c in CLAIMS:
            out += run_claim(c, max_vertices, uni, mutant, workers, samples, seed, allow_long)
        return out
    bound8 = min(max_vertices, 8)
    if claim == "universe":
        return [verify_universe_counts(_universe(universe, max_vertices, workers))]
    if claim == "prop1":
        return [verify_prop_split(bound8, universe, mutant, workers)]
    if claim == "lemma3":
        return [verify_lemma_s_or_h(4, 5, mutant=mutant)]
    if claim == "lemma4":
        return [verify_lemma_half_join(max_vertices, (5, 6), universe, mutant, workers)]
    if claim == "gadgets":
        return [verify_gadgets(samples, seed)]
    if claim.startswith("thm-n:"):
        return [verify_theorem(int(claim[6:]), max_vertices, universe, mutant, workers, allow_long)]
    if claim == "thm6":
        return [verify_theorem_matching(bound8, universe)]
    if claim in ("cor7", "cor8"):
        reps = verify_corollaries(bound8, universe, mutant)
        return [r for r in reps if r.claim == claim]
    if claim == "prop9":
        return [verify_prop_m2_c4_graphs(bound8, universe, mutant, workers)]
    raise ValueError(f"unknown claim {claim!r}")
