"""Cycle validation, canonical words, and graph isomorphism."""

import itertools

import pytest
from hypothesis import given, strategies as st

from orbitinv import (
    CycleGraph,
    EdgeLabel,
    canonicalize_cycle,
    graph_canonical,
    graphs_isomorphic,
    valid_cycle_words,
    validate_graph,
    vertex_labels,
)

F, SE, SP, K, RP = EdgeLabel.F, EdgeLabel.SE, EdgeLabel.SP, EdgeLabel.K, EdgeLabel.RP
ALL_LABELS = [F, SE, SP, K, RP]


def brute_canonical(word):
    """Oracle: materialize all rotations of the word and of its reversal."""
    word = tuple(word)
    n = len(word)
    variants = [word[i:] + word[:i] for i in range(n)]
    rev = word[::-1]
    variants += [rev[i:] + rev[:i] for i in range(n)]
    return min(variants)


def all_cycles_upto(max_len):
    for length in range(2, max_len + 1):
        for word in itertools.product(ALL_LABELS, repeat=length):
            yield word


# Valid words up to length 6 are cheap to enumerate and plenty for property
# tests; the full length-8 scan lives in the session fixture.
VALID_CYCLES = [w for w in all_cycles_upto(6) if validate_graph(CycleGraph((w,))).ok]


class TestValidateGraph:
    def test_fixed_arc_meeting_sphere_boundary(self):
        assert validate_graph(CycleGraph.from_labels([["F", "SP"]])).ok

    def test_fixed_arc_next_to_special_arc_rejected(self):
        report = validate_graph(CycleGraph.from_labels([["F", "SE"]]))
        assert not report.ok
        assert any("F" in v.message and "SE" in v.message for v in report.violations)

    def test_rp_pair_cycle(self):
        assert validate_graph(CycleGraph.from_labels([["F", "RP", "SE", "RP"]])).ok

    def test_six_cycle_with_klein_arc(self):
        assert validate_graph(CycleGraph.from_labels([["F", "RP", "SE", "K", "SE", "RP"]])).ok

    def test_violation_names_cycle_and_position(self):
        report = validate_graph(CycleGraph.from_labels([["F", "SP"], ["SP", "SP"]]))
        assert not report.ok
        assert all(v.cycle == 1 for v in report.violations)
        assert any(v.position is not None for v in report.violations)

    def test_rp_needs_one_f_and_one_se(self):
        # in a 2-cycle both neighbours of RP are the same arc
        assert not validate_graph(CycleGraph.from_labels([["F", "RP"]])).ok
        assert not validate_graph(CycleGraph.from_labels([["F", "RP", "F", "RP"]])).ok

    def test_empty_graph_ok(self):
        assert validate_graph(CycleGraph()).ok

    def test_too_short_cycle(self):
        assert not validate_graph(CycleGraph.from_labels([["F"]])).ok


class TestCanonicalWord:
    def test_sp_f_rotates_to_f_sp(self):
        assert canonicalize_cycle((SP, F)) == (F, SP)

    def test_four_cycle(self):
        # enumerate all 8 rotations/reflections by hand: minimum starts F,RP,SE,RP
        assert canonicalize_cycle((RP, SE, RP, F)) == (F, RP, SE, RP)
        assert brute_canonical((RP, SE, RP, F)) == (F, RP, SE, RP)

    def test_reflection_symmetric_word(self):
        assert canonicalize_cycle((F, SP)[::-1]) == (F, SP)

    @given(st.sampled_from(VALID_CYCLES), st.integers(0, 7), st.booleans())
    def test_rotation_reflection_invariance(self, word, k, reflect):
        moved = word[k % len(word):] + word[:k % len(word)]
        if reflect:
            moved = moved[::-1]
        assert canonicalize_cycle(moved) == canonicalize_cycle(word)

    @given(st.lists(st.sampled_from(ALL_LABELS), min_size=2, max_size=9))
    def test_matches_brute_force_on_arbitrary_words(self, labels):
        assert canonicalize_cycle(labels) == brute_canonical(labels)


class TestGraphCanonical:
    def test_cycle_order_is_forgotten(self):
        a = CycleGraph.from_labels([["F", "SP"], ["SE", "K"]])
        b = CycleGraph.from_labels([["K", "SE"], ["SP", "F"]])
        assert graph_canonical(a) == graph_canonical(b)

    def test_empty(self):
        assert graph_canonical(CycleGraph()) == ()

    def test_random_rotations_of_ten_cycle_are_stable(self):
        word = (F, SP, F, SP, F, RP, SE, RP, F, SP)
        assert validate_graph(CycleGraph((word,))).ok
        expected = graph_canonical(CycleGraph((word,)))
        for k in range(10):
            rotated = word[k:] + word[:k]
            for variant in (rotated, rotated[::-1]):
                assert graph_canonical(CycleGraph((variant,))) == expected


def brute_isomorphic(a: CycleGraph, b: CycleGraph) -> bool:
    """Oracle: search over all assignments of cycles and all rotations and
    reflections inside each cycle."""
    if len(a) != len(b):
        return False

    def same_cycle(x, y):
        if len(x) != len(y):
            return False
        variants = [y[i:] + y[:i] for i in range(len(y))]
        rev = y[::-1]
        variants += [rev[i:] + rev[:i] for i in range(len(y))]
        return x in variants

    for perm in itertools.permutations(range(len(b))):
        if all(same_cycle(a.cycles[i], b.cycles[perm[i]]) for i in range(len(a))):
            return True
    return False


class TestIsomorphism:
    def test_rotated_singletons(self):
        assert graphs_isomorphic(CycleGraph.from_labels([["F", "SP"]]),
                                 CycleGraph.from_labels([["SP", "F"]]))

    def test_different_label_multisets(self):
        assert not graphs_isomorphic(CycleGraph.from_labels([["F", "SP"]]),
                                     CycleGraph.from_labels([["SE", "K"]]))

    def test_six_cycles_differing_by_reflection(self):
        word = (F, SP, F, RP, SE, RP)
        assert validate_graph(CycleGraph((word,))).ok
        assert graphs_isomorphic(CycleGraph((word,)), CycleGraph((word[::-1],)))

    def test_agrees_with_brute_force_up_to_length_8(self, exhaustive_cycles_8):
        import random

        rng = random.Random(88)
        for _ in range(400):
            cycles_a = [rng.choice(exhaustive_cycles_8) for _ in range(rng.randint(0, 3))]
            if rng.random() < 0.5:
                cycles_b = list(cycles_a)
                rng.shuffle(cycles_b)
                moved = []
                for word in cycles_b:
                    k = rng.randrange(len(word))
                    variant = word[k:] + word[:k]
                    if rng.random() < 0.5:
                        variant = variant[::-1]
                    moved.append(variant)
                cycles_b = moved
            else:
                cycles_b = [rng.choice(exhaustive_cycles_8)
                            for _ in range(rng.randint(0, 3))]
            a, b = CycleGraph(tuple(cycles_a)), CycleGraph(tuple(cycles_b))
            assert graphs_isomorphic(a, b) == brute_isomorphic(a, b)

    @given(st.data())
    def test_agrees_with_brute_force(self, data):
        cycles_a = data.draw(st.lists(st.sampled_from(VALID_CYCLES), min_size=0, max_size=3))
        if data.draw(st.booleans()):
            # a shuffled/rotated copy, which must compare isomorphic
            perm = data.draw(st.permutations(cycles_a))
            cycles_b = []
            for word in perm:
                k = data.draw(st.integers(0, 7)) % len(word)
                moved = word[k:] + word[:k]
                if data.draw(st.booleans()):
                    moved = moved[::-1]
                cycles_b.append(moved)
        else:
            cycles_b = data.draw(st.lists(st.sampled_from(VALID_CYCLES),
                                          min_size=0, max_size=3))
        a, b = CycleGraph(tuple(cycles_a)), CycleGraph(tuple(cycles_b))
        assert graphs_isomorphic(a, b) == brute_isomorphic(a, b)


class TestVertexTyping:
    def test_total_and_unambiguous_on_valid_cycles(self):
        for word in VALID_CYCLES:
            labels = vertex_labels(word)
            assert len(labels) == len(word)
            assert set(labels) <= {F, SE}

    def test_counts_match_interior_arc_ends(self):
        # each F arc has two F-type corners, each RP arc one of each type
        for word in VALID_CYCLES:
            labels = vertex_labels(word)
            f_corners = sum(1 for lab in labels if lab is F)
            assert f_corners == 2 * word.count(SP) + word.count(RP)

    def test_ambiguous_corner_raises(self):
        with pytest.raises(ValueError):
            vertex_labels((F, F))
        with pytest.raises(ValueError):
            vertex_labels((SP, K))


class TestRpParity:
    def test_every_accepted_cycle_has_even_rp_count(self):
        assert VALID_CYCLES  # sanity: the filter is not vacuous
        for word in VALID_CYCLES:
            assert word.count(RP) % 2 == 0


class TestWordEnumeration:
    def test_agrees_with_brute_force_filter_up_to_6(self):
        expected = sorted({canonicalize_cycle(w) for w in VALID_CYCLES})
        assert list(valid_cycle_words(6)) == expected

    def test_agrees_with_exhaustive_scan_up_to_8(self, exhaustive_cycles_8):
        expected = sorted({canonicalize_cycle(w) for w in exhaustive_cycles_8})
        assert list(valid_cycle_words(8)) == expected

    def test_length_two_words(self):
        assert valid_cycle_words(2) == ((F, SP), (SE, K))
