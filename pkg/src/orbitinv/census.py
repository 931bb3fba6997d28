"""Bounded enumeration of admissible data, deduplicated by canonical form.

Every admissible datum inside the bounds is produced exactly once up to
equivalence, in a deterministic order: orientable before nonorientable, then
increasing genus, circle counts, pair multisets, graphs, and obstruction.
Candidates the admissibility conditions reject (a nonorientable surface of
genus 0, a nonzero obstruction next to boundary structure) are silently
skipped, which is what makes hand counts at tiny bounds easy to verify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .cyclegraph import Cycle, CycleGraph, EdgeLabel, canonicalize_cycle, validate_graph
from .invariants import (
    NONORIENTABLE,
    ORIENTABLE,
    OrbitInvariants,
    SeifertPair,
    canonical_form,
    validate,
)


@dataclass(frozen=True)
class EnumerationBounds:
    """Finite search box; every field of 0 switches that feature off."""

    max_g: int = 0
    max_f: int = 0
    max_s: int = 0
    max_t: int = 0
    max_r: int = 0
    max_m: int = 0
    max_cycles: int = 0
    max_cycle_len: int = 0
    b_range: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        for name in ("max_g", "max_f", "max_s", "max_t", "max_r", "max_m",
                     "max_cycles", "max_cycle_len"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
        lo, hi = self.b_range
        if lo > hi:
            raise ValueError(f"empty b_range {self.b_range}")


# Interior label -> boundary labels that may follow it, and back.
_NEXT = {
    EdgeLabel.F: (EdgeLabel.SP, EdgeLabel.RP),
    EdgeLabel.SE: (EdgeLabel.K, EdgeLabel.RP),
    EdgeLabel.SP: (EdgeLabel.F,),
    EdgeLabel.K: (EdgeLabel.SE,),
    EdgeLabel.RP: (EdgeLabel.F, EdgeLabel.SE),
}


def valid_cycle_words(max_len: int) -> tuple[Cycle, ...]:
    """All canonical words of admissible cycles with at most ``max_len`` edges.

    A depth-first walk over the adjacency relation proposes candidate
    cycles; ``validate_graph`` has the final say (it also enforces the
    rule that an RP arc joins one F and one SE arc, which is not a pairwise
    constraint).
    """
    found: set[Cycle] = set()

    def extend(word: list[EdgeLabel], target: int) -> None:
        if len(word) == target:
            candidate = tuple(word)
            if candidate[0] in _NEXT[candidate[-1]]:
                if validate_graph(CycleGraph((candidate,))).ok:
                    found.add(canonicalize_cycle(candidate))
            return
        for nxt in _NEXT[word[-1]]:
            word.append(nxt)
            extend(word, target)
            word.pop()

    for length in range(2, max_len + 1, 2):
        # canonical words start with an interior label
        for start in (EdgeLabel.F, EdgeLabel.SE):
            extend([start], length)
    return tuple(sorted(found))


def _graphs(bounds: EnumerationBounds) -> list[CycleGraph]:
    words = valid_cycle_words(bounds.max_cycle_len) if bounds.max_cycles else ()
    graphs = [CycleGraph()]
    for count in range(1, bounds.max_cycles + 1):
        for combo in combinations_with_replacement(words, count):
            graphs.append(CycleGraph(combo))
    return graphs


def _pairs_for(eps, bounds: EnumerationBounds) -> list[tuple[SeifertPair, ...]]:
    singles = []
    for m in range(2, bounds.max_m + 1):
        top = m - 1 if eps is ORIENTABLE else m // 2
        for n in range(1, top + 1):
            if math.gcd(m, n) == 1:
                singles.append(SeifertPair(m, n))
    multisets: list[tuple[SeifertPair, ...]] = [()]
    for count in range(1, bounds.max_r + 1):
        multisets.extend(combinations_with_replacement(singles, count))
    return multisets


def enumerate_invariants(bounds: EnumerationBounds) -> Iterator[OrbitInvariants]:
    """Stream the census in a deterministic order, one datum per equivalence
    class."""
    seen = set()
    graphs = _graphs(bounds)
    lo, hi = bounds.b_range
    for eps in (ORIENTABLE, NONORIENTABLE):
        pair_multisets = _pairs_for(eps, bounds)
        for g in range(0, bounds.max_g + 1):
            for f in range(0, bounds.max_f + 1):
                for s in range(0, bounds.max_s + 1):
                    for t in range(0, bounds.max_t + 1):
                        for graph in graphs:
                            for pairs in pair_multisets:
                                if f + s + t > 0 or graph:
                                    bs = (0,)
                                elif eps is NONORIENTABLE:
                                    limit = (0,) if any(p.m == 2 for p in pairs) else (0, 1)
                                    bs = tuple(b for b in limit if lo <= b <= hi)
                                else:
                                    bs = tuple(range(lo, hi + 1))
                                for b in bs:
                                    inv = OrbitInvariants(b=b, eps=eps, g=g, f=f, s=s,
                                                          t=t, pairs=pairs, graph=graph)
                                    if not validate(inv).ok:
                                        continue
                                    form = canonical_form(inv)
                                    if form in seen:
                                        continue
                                    seen.add(form)
                                    yield inv
