"""Structural classification of degree sequences that exclude a cycle or M2.

Each classifier computes the brute-force answer ("does ``d`` exclude the
target?") next to the structural classes, so a disagreement between the two
is visible in every result.

Class labels:

``ForciblyNoHoleGeq<n>``
    no realization has an induced cycle on ``n`` or more vertices
``ForciblyChordal`` / ``ForciblyAntichordal``
    every realization (every complement of a realization) is chordal
``SplitComposeCycle(<k>)``
    ``d`` is the degree sequence of some ``(S, A, B) o C_k``
``SplitComposeK33``
    ``d`` is the degree sequence of some ``(S, A, B) o K_{3,3}``
``Split``
    ``d`` is the degree sequence of a split graph
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import (
    Graph,
    complement,
    complete_bipartite,
    has_hole_geq,
)
from .io import format_sequence, to_graph6
from .sequences import (
    DEFAULT_BOUND,
    PrecedesWitness,
    complement_sequence,
    enumerate_realizations,
    find_precedes_witness,
    is_graphical,
)
from .split import (
    CompositionSpec,
    SplitPartition,
    compose,
    find_split_partition,
    is_split_sequence,
    split_compose_witness,
)

FORCIBLY_CHORDAL = "ForciblyChordal"
FORCIBLY_ANTICHORDAL = "ForciblyAntichordal"
SPLIT_COMPOSE_K33 = "SplitComposeK33"
SPLIT = "Split"


def forcibly_no_hole_label(n: int) -> str:
    return f"ForciblyNoHoleGeq{n}"


def split_compose_label(k: int) -> str:
    return f"SplitComposeCycle({k})"


_PRETTY = {
    FORCIBLY_CHORDAL: "forcibly chordal",
    FORCIBLY_ANTICHORDAL: "forcibly antichordal",
    SPLIT_COMPOSE_K33: "SPLIT∘K3,3",
    SPLIT: "SPLIT",
}


def pretty_label(label: str) -> str:
    if label in _PRETTY:
        return _PRETTY[label]
    if label.startswith("SplitComposeCycle("):
        return f"SPLIT∘C{label[len('SplitComposeCycle('):-1]}"
    if label.startswith("ForciblyNoHoleGeq"):
        return f"forcibly no hole on >= {label[len('ForciblyNoHoleGeq'):]} vertices"
    return label


@dataclass
class ExclusionClassification:
    sequence: tuple
    target: str
    excludes: bool
    classes: tuple = ()
    compositions: dict = field(default_factory=dict)
    obstruction: Optional[PrecedesWitness] = None
    realizations_checked: int = 0

    @property
    def consistent(self) -> bool:
        return self.excludes == bool(self.classes)

    def revalidate(self) -> list[str]:
        """Re-check every witness from scratch; returns the failures."""
        problems = []
        for label, spec in self.compositions.items():
            if compose(spec).degree_sequence() != self.sequence:
                problems.append(f"{label} witness does not reproduce {self.sequence}")
        if self.obstruction is not None:
            g1 = self.obstruction.g1
            if not self.obstruction.verify(g1.degree_sequence(), self.sequence):
                problems.append("precedes witness fails to verify")
        if self.excludes and self.obstruction is not None:
            problems.append("excluding sequence carries an obstruction")
        return problems

    def to_record(self) -> dict:
        rec = {
            "sequence": list(self.sequence),
            "target": self.target,
            "excludes": self.excludes,
            "classes": list(self.classes),
            "compositions": {k: v.serialize() for k, v in sorted(self.compositions.items())},
        }
        if self.obstruction is not None:
            rec["obstruction"] = {
                "g1": to_graph6(self.obstruction.g1),
                "g2": to_graph6(self.obstruction.g2),
                "embedding": list(self.obstruction.embedding),
            }
        return rec

    def to_text(self) -> str:
        head = f"sequence {format_sequence(self.sequence) or '()'} target {self.target}"
        lines = [head, f"excludes={'true' if self.excludes else 'false'}"]
        for label in self.classes:
            lines.append(f"class {pretty_label(label)}")
            spec = self.compositions.get(label)
            if spec is not None:
                lines.append(f"  witness S={to_graph6(spec.s)} A={list(spec.a)} H={to_graph6(spec.h)}")
        if self.obstruction is not None:
            ob = self.obstruction
            lines.append(f"obstruction g2={to_graph6(ob.g2)} vertices={list(ob.embedding)}")
        return "\n".join(lines)


def _prepare(d, bound, realizations):
    d = tuple(d)
    if not is_graphical(d):
        raise ValueError(f"{d} is not graphical")
    if len(d) > bound:
        raise ValueError(f"sequence length {len(d)} exceeds the bound {bound}")
    if realizations is None:
        realizations = enumerate_realizations(d, bound)
    return d, realizations


def _compose_match(realizations, k: int) -> Optional[CompositionSpec]:
    for g in realizations:
        spec = split_compose_witness(g, k)
        if spec is not None:
            return spec
    return None


def classify_exclusion(d, n: int, bound: int = DEFAULT_BOUND, realizations=None) -> ExclusionClassification:
    """Classify ``d`` against the cycle ``C_n`` (``n >= 4``).

    ``excludes`` is decided on the sequence level: no realization of ``d``
    contains an induced subgraph with the degree sequence of ``C_n``.
    """
    if n < 4:
        raise ValueError(f"cycle length must be >= 4, got {n}")
    d, reals = _prepare(d, bound, realizations)
    obstruction = find_precedes_witness((2,) * n, d, bound, reals) if len(d) >= n else None
    classes = []
    compositions = {}
    if all(not has_hole_geq(g, n) for g in reals):
        classes.append(forcibly_no_hole_label(n))
    for k in (n + 1, n + 2):
        spec = _compose_match(reals, k) if len(d) >= k else None
        if spec is not None:
            classes.append(split_compose_label(k))
            compositions[split_compose_label(k)] = spec
    return ExclusionClassification(d, f"C{n}", obstruction is None, tuple(classes), compositions,
                                   obstruction, len(reals))


def classify_square(d, bound: int = DEFAULT_BOUND, realizations=None) -> ExclusionClassification:
    res = classify_exclusion(d, 4, bound, realizations)
    res.classes = tuple(FORCIBLY_CHORDAL if c == forcibly_no_hole_label(4) else c for c in res.classes)
    return res


def classify_matching(d, bound: int = DEFAULT_BOUND, realizations=None) -> ExclusionClassification:
    """Classify ``d`` against M2 by running the square classifier on the
    complementary sequence and translating the classes back."""
    d, reals = _prepare(d, bound, realizations)
    dual = classify_square(complement_sequence(d), bound, [complement(g) for g in reals])
    classes = []
    compositions = {}
    for label in dual.classes:
        if label == FORCIBLY_CHORDAL:
            classes.append(FORCIBLY_ANTICHORDAL)
        elif label == split_compose_label(5):
            # the complement of a C5 composition is again one
            spec = _compose_match(reals, 5)
            if spec is None:
                raise RuntimeError(f"complement duality broke for {d}: no C5 composition")
            classes.append(label)
            compositions[label] = spec
        elif label == split_compose_label(6):
            # complement of (S, A, B) o C6 is (co-S, B, A) o co-C6, and co-C6
            # has the degree sequence of K3,3
            spec6 = dual.compositions[label]
            spec = CompositionSpec(complement(spec6.s), spec6.b, complete_bipartite(3, 3))
            classes.append(SPLIT_COMPOSE_K33)
            compositions[SPLIT_COMPOSE_K33] = spec
    obstruction = find_precedes_witness((1, 1, 1, 1), d, bound, reals) if len(d) >= 4 else None
    return ExclusionClassification(d, "M2", obstruction is None, tuple(classes), compositions,
                                   obstruction, len(reals))


def classify_c4_c5(d, bound: int = DEFAULT_BOUND, realizations=None) -> ExclusionClassification:
    """Excludes both C4 and C5; classes restricted to forcibly chordal and
    ``SPLIT o C6``."""
    d, reals = _prepare(d, bound, realizations)
    sq = classify_square(d, bound, reals)
    ob5 = find_precedes_witness((2,) * 5, d, bound, reals) if len(d) >= 5 else None
    keep = (FORCIBLY_CHORDAL, split_compose_label(6))
    classes = tuple(c for c in sq.classes if c in keep)
    compositions = {c: s for c, s in sq.compositions.items() if c in keep}
    obstruction = sq.obstruction or ob5
    return ExclusionClassification(d, "C4+C5", obstruction is None, classes, compositions,
                                   obstruction, len(reals))


def classify_m2_c4(d, bound: int = DEFAULT_BOUND, realizations=None) -> ExclusionClassification:
    """Excludes both M2 and C4; classes are ``Split`` and ``SPLIT o C5``."""
    d, reals = _prepare(d, bound, realizations)
    ob = None
    if len(d) >= 4:
        ob = find_precedes_witness((1, 1, 1, 1), d, bound, reals) or find_precedes_witness((2, 2, 2, 2), d, bound, reals)
    classes = []
    compositions = {}
    if is_split_sequence(d):
        classes.append(SPLIT)
    spec = _compose_match(reals, 5)
    if spec is not None:
        classes.append(split_compose_label(5))
        compositions[split_compose_label(5)] = spec
    return ExclusionClassification(d, "M2+C4", ob is None, tuple(classes), compositions, ob, len(reals))


def classify(d, target: str, bound: int = DEFAULT_BOUND, realizations=None) -> ExclusionClassification:
    """Dispatch on a target name: ``C4``, ``M2``, ``Cn:<n>``, ``C4C5``, ``M2C4``."""
    t = target.strip().upper()
    if t == "C4":
        return classify_square(d, bound, realizations)
    if t == "M2":
        return classify_matching(d, bound, realizations)
    if t == "C4C5":
        return classify_c4_c5(d, bound, realizations)
    if t == "M2C4":
        return classify_m2_c4(d, bound, realizations)
    if t.startswith("CN:"):
        return classify_exclusion(d, int(t[3:]), bound, realizations)
    raise ValueError(f"unknown exclusion target {target!r}")


@dataclass(frozen=True)
class GraphStructure:
    """Graph-level reading of a graph excluding M2 and C4 (or not)."""

    kind: str  # "split", "split-compose-C5" or "neither"
    partition: Optional[SplitPartition] = None
    composition: Optional[CompositionSpec] = None


def graph_m2_c4_structure(g: Graph) -> GraphStructure:
    part = find_split_partition(g)
    if part is not None:
        return GraphStructure("split", partition=part)
    spec = split_compose_witness(g, 5)
    if spec is not None:
        return GraphStructure("split-compose-C5", composition=spec)
    return GraphStructure("neither")

