"""Orbit invariants of compact, connected 3-manifolds with effective circle actions.

An action is recorded by the datum

    {b; (eps, g, f, s, t); (m_1, n_1), ..., (m_r, n_r); G}

where ``b`` is the obstruction to a section over the principal part, ``eps``
and ``g`` are the orientability and genus of the orbit surface, ``f`` and
``s`` count the fixed circles and special-exceptional circles away from the
boundary, ``t`` counts torus boundary components, the coprime pairs
``(m_i, n_i)`` describe the exceptional orbits, and ``G`` is a union of
labelled cycle graphs encoding the corner structure (see ``cyclegraph``).

Two data describe equivariantly diffeomorphic manifolds exactly when their
canonical forms coincide, which is what :func:`equivalent` decides.  A datum
is admissible when:

  (1)  b = 0 whenever f+s+t > 0 or G is nonempty; b is an arbitrary integer
       for orientable data, lies in {0, 1} for nonorientable closed data
       without fixed or special-exceptional circles, and is 0 in that case
       as soon as some m_i = 2;
  (2)  every pair has gcd(m, n) = 1 with 0 < n < m for eps = o and
       0 < n <= m/2 for eps = n;
  (3)  G satisfies the cycle-graph adjacency rules.

Nonorientable surfaces have genus at least 1, so eps = n additionally
requires g >= 1.  Validation is total: it accepts arbitrary field values and
returns a report of violations instead of raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .cyclegraph import (
    EMPTY_GRAPH,
    Cycle,
    CycleGraph,
    EdgeLabel,
    graph_canonical,
    validate_graph,
    vertex_labels,
)


class Orientability(Enum):
    ORIENTABLE = "o"
    NONORIENTABLE = "n"

    @classmethod
    def from_letter(cls, letter: str) -> "Orientability":
        try:
            return cls(letter)
        except ValueError:
            raise ValueError(f"orientability must be 'o' or 'n', got {letter!r}") from None

    def __str__(self) -> str:
        return self.value


ORIENTABLE = Orientability.ORIENTABLE
NONORIENTABLE = Orientability.NONORIENTABLE


@dataclass(frozen=True, order=True)
class SeifertPair:
    """Coprime pair (m, n) attached to an exceptional orbit with isotropy Z/m."""

    m: int
    n: int

    def __str__(self) -> str:
        return f"({self.m},{self.n})"


PairLike = Union[SeifertPair, tuple]


def _as_pair(value: PairLike) -> SeifertPair:
    if isinstance(value, SeifertPair):
        return value
    m, n = value
    return SeifertPair(int(m), int(n))


def _as_graph(value) -> CycleGraph:
    if isinstance(value, CycleGraph):
        return value
    return CycleGraph.from_labels(value)


@dataclass(frozen=True)
class OrbitInvariants:
    """The full classification datum.  Construction never validates; see
    :func:`validate`."""

    b: int
    eps: Orientability
    g: int
    f: int
    s: int
    t: int
    pairs: tuple[SeifertPair, ...] = ()
    graph: CycleGraph = EMPTY_GRAPH

    def __post_init__(self) -> None:
        if isinstance(self.eps, str):
            object.__setattr__(self, "eps", Orientability.from_letter(self.eps))
        object.__setattr__(self, "pairs", tuple(_as_pair(p) for p in self.pairs))
        object.__setattr__(self, "graph", _as_graph(self.graph))

    @property
    def closed(self) -> bool:
        return self.t == 0 and not self.graph

    @property
    def boundary_circles(self) -> int:
        """Boundary components of the orbit surface: every F/SE circle, every
        torus boundary, and every cycle of the graph contributes one."""
        return self.f + self.s + self.t + len(self.graph)

    def replace(self, **changes) -> "OrbitInvariants":
        fields = dict(b=self.b, eps=self.eps, g=self.g, f=self.f, s=self.s,
                      t=self.t, pairs=self.pairs, graph=self.graph)
        fields.update(changes)
        return OrbitInvariants(**fields)

    def __str__(self) -> str:
        from .textio import serialize

        return serialize(self)


@dataclass(frozen=True)
class Violation:
    """A broken admissibility condition: (1), (2), (3), parity,
    nonorientable-genus, or domain for malformed field values."""

    condition: str
    message: str

    def __str__(self) -> str:
        return f"condition {self.condition}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


class InvariantError(ValueError):
    """An operation that requires an admissible datum received an invalid one."""

    def __init__(self, report: ValidationReport, context: str = ""):
        self.report = report
        prefix = f"{context}: " if context else ""
        super().__init__(prefix + str(report))


def validate(inv: OrbitInvariants) -> ValidationReport:
    """Total admissibility check; violations are returned, never raised."""
    violations: list[Violation] = []

    def bad(condition: str, message: str) -> None:
        violations.append(Violation(condition, message))

    counts_ok = True
    for name in ("g", "f", "s", "t"):
        value = getattr(inv, name)
        if not isinstance(value, int) or value < 0:
            bad("domain", f"{name} must be a nonnegative integer, got {value!r}")
            counts_ok = False
    if not isinstance(inv.b, int):
        bad("domain", f"b must be an integer, got {inv.b!r}")
        counts_ok = False

    if counts_ok:
        has_boundary_structure = inv.f + inv.s + inv.t > 0 or bool(inv.graph)
        if has_boundary_structure:
            if inv.b != 0:
                bad("1", f"b must be 0 when f+s+t > 0 or the graph is nonempty, got b={inv.b}")
        elif inv.eps is NONORIENTABLE:
            if inv.b not in (0, 1):
                bad("1", f"b lies in Z/2 for nonorientable closed data without fixed or "
                         f"special-exceptional circles, got b={inv.b}")
            if inv.b != 0 and any(p.m == 2 for p in inv.pairs):
                bad("1", "b must be 0 for nonorientable closed data when some m_i = 2")

    for idx, pair in enumerate(inv.pairs):
        where = f"pair #{idx} {pair}"
        if pair.m < 2 or pair.n < 1:
            bad("2", f"{where}: need m >= 2 and n >= 1")
            continue
        if math.gcd(pair.m, pair.n) != 1:
            bad("2", f"{where}: gcd(m, n) = {math.gcd(pair.m, pair.n)} != 1")
        if inv.eps is ORIENTABLE:
            if not pair.n < pair.m:
                bad("2", f"{where}: need 0 < n < m for orientable data")
        else:
            if not 2 * pair.n <= pair.m:
                bad("2", f"{where}: need 0 < n <= m/2 for nonorientable data")

    graph_report = validate_graph(inv.graph)
    for gv in graph_report.violations:
        bad("3", str(gv))

    if graph_report.ok and counts_ok:
        counts = derived_counts(inv)
        if not (counts.v_f == 2 * counts.f0_minus_f == 2 * counts.s_p + counts.r_p):
            bad("parity", f"corner count v_f={counts.v_f} breaks "
                          f"v_f = 2(f0-f) = 2*s_p + r_p")
        if not (counts.v_s == 2 * counts.s0_minus_s == 2 * counts.k + counts.r_p):
            bad("parity", f"corner count v_s={counts.v_s} breaks "
                          f"v_s = 2(s0-s) = 2*k + r_p")
        if counts.v_f % 2 or counts.v_s % 2 or counts.r_p % 2:
            bad("parity", "corner and RP counts must all be even")

    if inv.eps is NONORIENTABLE and isinstance(inv.g, int) and inv.g < 1:
        bad("nonorientable-genus", f"a nonorientable surface has genus >= 1, got g={inv.g}")

    return ValidationReport(ok=not violations, violations=tuple(violations))


def require_valid(inv: OrbitInvariants, context: str = "") -> OrbitInvariants:
    report = validate(inv)
    if not report.ok:
        raise InvariantError(report, context)
    return inv


def normalize(inv: OrbitInvariants) -> OrbitInvariants:
    """Reduce a datum to its normalized representative.

    Three reductions are applied, each of which preserves the manifold:
    for nonorientable data every in-range pair (m, n) is replaced by
    (m, min(n, m-n)); for nonorientable closed data without fixed or
    special-exceptional circles b is reduced mod 2, and set to 0 outright
    when some m_i = 2.  Anything else (a pair with gcd > 1, a bad graph, and
    so on) is not normalizable and is returned unchanged so that ``validate``
    still reports it.  Idempotent.
    """
    pairs = inv.pairs
    if inv.eps is NONORIENTABLE:
        pairs = tuple(
            SeifertPair(p.m, min(p.n, p.m - p.n)) if 0 < p.n < p.m else p
            for p in pairs
        )
    b = inv.b
    if (inv.eps is NONORIENTABLE and inv.f + inv.s + inv.t == 0 and not inv.graph
            and isinstance(b, int)):
        b %= 2
        if any(p.m == 2 for p in pairs):
            b = 0
    return inv.replace(b=b, pairs=pairs)


@dataclass(frozen=True)
class DerivedCounts:
    """Counts read off the graph, tied together by the corner identities
    v_f = 2(f0-f) = 2*s_p + r_p and v_s = 2(s0-s) = 2*k + r_p."""

    f0_minus_f: int
    s0_minus_s: int
    s_p: int
    k: int
    r_p: int
    v_f: int
    v_s: int
    boundary_circles: int


def derived_counts(inv: OrbitInvariants) -> DerivedCounts:
    """Edge and corner counts of the datum's graph.

    Corners are counted by their type (each corner touches exactly one
    interior arc, whose label decides F-type versus SE-type), so the parity
    identities act as an independent cross-check on the edge counts.
    """
    graph = inv.graph
    v_f = v_s = 0
    for cycle in graph.cycles:
        for lab in vertex_labels(cycle):
            if lab is EdgeLabel.F:
                v_f += 1
            else:
                v_s += 1
    return DerivedCounts(
        f0_minus_f=graph.edge_count(EdgeLabel.F),
        s0_minus_s=graph.edge_count(EdgeLabel.SE),
        s_p=graph.edge_count(EdgeLabel.SP),
        k=graph.edge_count(EdgeLabel.K),
        r_p=graph.edge_count(EdgeLabel.RP),
        v_f=v_f,
        v_s=v_s,
        boundary_circles=inv.boundary_circles,
    )


@dataclass(frozen=True)
class CanonicalForm:
    """Normalized, hashable fingerprint: two data are equivalent exactly when
    their forms compare equal."""

    b: int
    eps: Orientability
    g: int
    f: int
    s: int
    t: int
    pairs: tuple[SeifertPair, ...]
    graph_canon: tuple[Cycle, ...]

    def sort_key(self):
        return (
            self.eps.value,
            self.g,
            self.f,
            self.s,
            self.t,
            self.b,
            self.pairs,
            self.graph_canon,
        )


def canonical_form(inv: OrbitInvariants) -> CanonicalForm:
    """Normalize, then forget pair order and every cycle presentation.

    Raises :class:`InvariantError` naming the violations when the normalized
    datum is still inadmissible.
    """
    norm = require_valid(normalize(inv), "canonical_form")
    return CanonicalForm(
        b=norm.b,
        eps=norm.eps,
        g=norm.g,
        f=norm.f,
        s=norm.s,
        t=norm.t,
        pairs=tuple(sorted(norm.pairs)),
        graph_canon=graph_canonical(norm.graph),
    )


def equivalent(a: OrbitInvariants, b: OrbitInvariants) -> bool:
    """Decide equivariant diffeomorphism of the two described manifolds."""
    return canonical_form(a) == canonical_form(b)


class Surface2d(Enum):
    """The seven compact connected 2-manifolds carrying an effective circle
    action."""

    DISK = "disk"
    CYLINDER = "cylinder"
    MOBIUS_BAND = "Mobius band"
    SPHERE = "sphere"
    PROJECTIVE_PLANE = "projective plane"
    TORUS = "torus"
    KLEIN_BOTTLE = "Klein bottle"

    def __str__(self) -> str:
        return self.value


# Keyed by (boundary circles, fixed points, special exceptional orbits).
# The boundary count of the 1-dimensional orbit space is 2 for every row
# except the torus, whose orbit space is a circle; it is determined by the
# surface type and is therefore not part of the key.
_SURFACES = {
    (1, 1, 0): Surface2d.DISK,
    (2, 0, 0): Surface2d.CYLINDER,
    (1, 0, 1): Surface2d.MOBIUS_BAND,
    (0, 2, 0): Surface2d.SPHERE,
    (0, 1, 1): Surface2d.PROJECTIVE_PLANE,
    (0, 0, 0): Surface2d.TORUS,
    (0, 0, 2): Surface2d.KLEIN_BOTTLE,
}


def classify_2d(boundary: int, fixed: int, special: int) -> Surface2d | None:
    """Classify a 2-manifold with circle action from (b, f, s) counts.

    Exactly seven triples occur:

        disk (1,1,0), cylinder (2,0,0), Mobius band (1,0,1),
        sphere (0,2,0), projective plane (0,1,1), torus (0,0,0),
        Klein bottle (0,0,2).

    Returns ``None`` for every other triple: no such manifold exists.
    """
    return _SURFACES.get((boundary, fixed, special))
