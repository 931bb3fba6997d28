"""Labelled cycle graphs recording the corner structure of an orbit surface.

When a compact 3-manifold with circle action has boundary, the boundary of
its orbit surface breaks into circles and into chains of arcs meeting at
corner points.  Each chain closes up into a cycle whose edges carry one of
five labels:

    F   arc of fixed points reaching the boundary
    SE  special-exceptional arc (isotropy Z/2 acting by reflection)
    SP  arc that is the orbit space of a 2-sphere boundary component
    K   arc that is the orbit space of a Klein-bottle boundary component
    RP  arc that is the orbit space of a projective-plane boundary component

F and SE are interior-type labels (they bound the fixed and special
exceptional sets), SP/K/RP are boundary-type labels.  Around a cycle the two
kinds alternate, and the corner between two consecutive arcs is F-type or
SE-type according to the interior arc it touches.  The admissible
adjacencies are:

    F  only next to SP or RP        SP only between two F arcs
    SE only next to K  or RP        K  only between two SE arcs
                                    RP only between one F and one SE arc

A consequence of these rules is that every valid cycle has even length and
contains an even number of RP edges.

Cycles are unoriented and have no distinguished starting edge, so two cycles
are the same exactly when one is a rotation or a reflection of the other.
Equality of graphs is decided through canonical cycle words: the
lexicographically smallest word over all rotations of a cycle and of its
reversal, under the fixed label order F < SE < SP < K < RP.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Sequence, Union


class EdgeLabel(IntEnum):
    """The five arc labels, ordered F < SE < SP < K < RP for canonical words."""

    F = 0
    SE = 1
    SP = 2
    K = 3
    RP = 4

    @property
    def interior(self) -> bool:
        """True for F and SE, the labels bounding interior strata."""
        return self in (EdgeLabel.F, EdgeLabel.SE)

    def __str__(self) -> str:
        return self.name


LabelLike = Union[EdgeLabel, str]
Cycle = tuple[EdgeLabel, ...]


def as_label(value: LabelLike) -> EdgeLabel:
    if isinstance(value, EdgeLabel):
        return value
    try:
        return EdgeLabel[value]
    except KeyError:
        raise ValueError(f"unknown edge label {value!r}; expected one of F, SE, SP, K, RP") from None


def as_cycle(edges: Iterable[LabelLike]) -> Cycle:
    return tuple(as_label(e) for e in edges)


@dataclass(frozen=True)
class CycleGraph:
    """A finite union of labelled cycles, stored as a tuple of edge-label words.

    The tuple is a multiset: repeated cycles are allowed and order carries no
    meaning.  The empty graph is ``CycleGraph()``.
    """

    cycles: tuple[Cycle, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycles", tuple(as_cycle(c) for c in self.cycles))

    @classmethod
    def from_labels(cls, cycles: Iterable[Iterable[LabelLike]]) -> "CycleGraph":
        return cls(tuple(tuple(c) for c in cycles))

    def __len__(self) -> int:
        return len(self.cycles)

    def __bool__(self) -> bool:
        return bool(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def edge_count(self, label: LabelLike) -> int:
        lab = as_label(label)
        return sum(cycle.count(lab) for cycle in self.cycles)


EMPTY_GRAPH = CycleGraph()


@dataclass(frozen=True)
class GraphViolation:
    """One broken adjacency or shape rule, located by cycle and edge position."""

    cycle: int
    position: int | None
    message: str

    def __str__(self) -> str:
        where = f"cycle {self.cycle}"
        if self.position is not None:
            where += f", edge {self.position}"
        return f"{where}: {self.message}"


@dataclass(frozen=True)
class GraphReport:
    ok: bool
    violations: tuple[GraphViolation, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


# Interior labels admissible next to each boundary-type label and vice versa.
_ALLOWED_NEIGHBOURS = {
    EdgeLabel.F: (EdgeLabel.SP, EdgeLabel.RP),
    EdgeLabel.SE: (EdgeLabel.K, EdgeLabel.RP),
    EdgeLabel.SP: (EdgeLabel.F, EdgeLabel.F),
    EdgeLabel.K: (EdgeLabel.SE, EdgeLabel.SE),
}

_ALLOWED_TEXT = {
    EdgeLabel.F: "SP or RP",
    EdgeLabel.SE: "K or RP",
}


def validate_graph(graph: CycleGraph) -> GraphReport:
    """Check every cycle of ``graph`` against the adjacency rules.

    Returns a report rather than raising: violations are data.  Each
    violation names the offending cycle and, where meaningful, the edge
    position inside it.
    """
    violations: list[GraphViolation] = []
    F, SE, RP = EdgeLabel.F, EdgeLabel.SE, EdgeLabel.RP
    interior = (True, True, False, False, False)  # indexed by label value

    def bad(ci: int, pos: int | None, msg: str) -> None:
        violations.append(GraphViolation(ci, pos, msg))

    for ci, cycle in enumerate(graph.cycles):
        n = len(cycle)
        if n < 2:
            bad(ci, None, f"cycle has {n} edge(s); at least 2 are required")
            continue
        if n % 2:
            bad(ci, None, f"cycle has odd length {n}; interior and boundary arcs must alternate")
        left = cycle[-1]
        for i, lab in enumerate(cycle):
            right = cycle[i + 1] if i + 1 < n else cycle[0]
            if interior[lab]:
                allowed = _ALLOWED_NEIGHBOURS[lab]
                for nb in (left, right):
                    if nb not in allowed:
                        bad(ci, i, f"{lab.name} arc next to {nb.name}; {lab.name} "
                                   f"may only meet {_ALLOWED_TEXT[lab]}")
            elif lab is RP:
                if not ((left is F and right is SE) or (left is SE and right is F)):
                    bad(ci, i, f"RP arc between {left.name} and {right.name}; "
                               "RP must join one F arc and one SE arc")
            else:
                want = _ALLOWED_NEIGHBOURS[lab][0]
                for nb in (left, right):
                    if nb is not want:
                        bad(ci, i, f"{lab.name} arc next to {nb.name}; {lab.name} "
                                   f"must lie between two {want.name} arcs")
            left = lab
        # Implied by the adjacency rules, asserted independently.
        if cycle.count(RP) % 2:
            bad(ci, None, f"cycle contains an odd number ({cycle.count(RP)}) of RP arcs")

    return GraphReport(ok=not violations, violations=tuple(violations))


def _rotations(word: Cycle):
    for i in range(len(word)):
        yield word[i:] + word[:i]


def canonicalize_cycle(cycle: Sequence[LabelLike]) -> Cycle:
    """Smallest word over all rotations of the cycle and of its reversal.

    The comparison uses the label order F < SE < SP < K < RP, so canonical
    words of valid cycles always start with an interior arc.
    """
    word = as_cycle(cycle)
    if len(word) < 2:
        return word
    reverse = word[::-1]
    return min(min(_rotations(word)), min(_rotations(reverse)))


def graph_canonical(graph: CycleGraph) -> tuple[Cycle, ...]:
    """Sorted multiset of canonical cycle words; the graph's fingerprint."""
    return tuple(sorted(canonicalize_cycle(c) for c in graph.cycles))


def graphs_isomorphic(a: CycleGraph, b: CycleGraph) -> bool:
    """True when the two graphs agree up to relabelling cycles and rotating or
    reflecting each cycle."""
    return graph_canonical(a) == graph_canonical(b)


def vertex_labels(cycle: Sequence[LabelLike]) -> tuple[EdgeLabel, ...]:
    """Type of each corner of a valid cycle, as the interior label it touches.

    Corner ``i`` sits between edges ``i-1`` and ``i``; exactly one of these
    is interior-type, and that label (F or SE) is the corner's type.  Raises
    ``ValueError`` when a corner joins zero or two interior arcs, since the
    typing is then ambiguous.
    """
    word = as_cycle(cycle)
    n = len(word)
    out = []
    for i in range(n):
        incident = [lab for lab in (word[(i - 1) % n], word[i]) if lab.interior]
        if len(incident) != 1:
            raise ValueError(f"corner {i} joins arcs {word[(i - 1) % n]} and {word[i]}; "
                             "its type is not determined")
        out.append(incident[0])
    return tuple(out)


def render_cycle(cycle: Sequence[LabelLike]) -> str:
    return "<" + ",".join(str(lab) for lab in as_cycle(cycle)) + ">"
