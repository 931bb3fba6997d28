"""Poincare series reduction, expansion, and the closed-form formulas."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbitinv import (
    EnumerationBounds,
    OrbitInvariants,
    PoincareSeries,
    Poly,
    betti,
    enumerate_invariants,
    equivariant_poincare,
    fixed_set_shape,
    orbit_space_poincare,
)


def datum(b=0, eps="o", g=0, f=0, s=0, t=0, pairs=(), graph=()):
    return OrbitInvariants(b=b, eps=eps, g=g, f=f, s=s, t=t, pairs=pairs, graph=graph)


def expand_oracle(num, den, upto):
    """Independent expansion: invert the denominator term by term through
    repeated convolution, then convolve with the numerator."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    inv = [Fraction(1) / den[0]]
    for k in range(1, upto + 1):
        acc = Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc += den[j] * inv[k - j]
        inv.append(-acc / den[0])
    out = []
    for k in range(upto + 1):
        out.append(sum(num[j] * inv[k - j] for j in range(min(k, len(num) - 1) + 1)))
    return out


class TestPoincareSeries:
    def test_reduction_cancels_common_factor(self):
        # (1 + x^3)/(1 - x^2) shares the factor 1 + x
        series = PoincareSeries((1, 0, 0, 1), (1, 0, -1))
        assert series.num == (1, -1, 1)
        assert series.den == (1, -1)

    def test_denominator_constant_term_positive(self):
        series = PoincareSeries((1,), (-1, 1))
        assert series.den[0] > 0

    def test_pole_at_zero_rejected(self):
        with pytest.raises(ValueError, match="pole"):
            PoincareSeries((1,), (0, 1))

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            PoincareSeries((1,), (0,))

    def test_geometric_series(self):
        assert PoincareSeries((1,), (1, 0, -1)).expansion(6) == [1, 0, 1, 0, 1, 0, 1]

    def test_negative_coefficient_detected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            PoincareSeries((1, 0, -1)).expansion(4)

    def test_equality_is_canonical(self):
        a = PoincareSeries((2, 0, 0, 2), (2, 0, -2))
        b = PoincareSeries((1, -1, 1), (1, -1))
        assert a == b and hash(a) == hash(b)
        assert a != PoincareSeries((1,), (1, -1))

    def test_arithmetic(self):
        half_even = PoincareSeries((1,), (1, 0, -1))       # 1/(1-x^2)
        assert half_even + half_even == PoincareSeries((2,), (1, 0, -1))
        assert half_even * Poly((0, 0, 1)) + 1 == PoincareSeries((1,), (1, 0, -1))
        assert 1 + PoincareSeries((0, 1)) == PoincareSeries((1, 1))

    @given(st.lists(st.integers(0, 5), min_size=1, max_size=5),
           st.lists(st.integers(-3, 3), min_size=0, max_size=4))
    def test_expansion_matches_convolution_oracle(self, num, den_tail):
        den = [1] + den_tail
        series = PoincareSeries(Poly(num), Poly(den))
        try:
            got = series.expansion(12)
        except ValueError:
            # not a nonnegative-integer series; the oracle must agree
            oracle = expand_oracle(num, den, 12)
            assert any(c < 0 or c.denominator != 1 for c in oracle)
            return
        assert got == expand_oracle(num, den, 12)


class TestOrbitSpacePoincare:
    def test_closed_orientable(self):
        assert orbit_space_poincare(datum(b=2, g=1)) == PoincareSeries((1, 2, 1))

    def test_closed_nonorientable(self):
        assert orbit_space_poincare(datum(b=1, eps="n", g=3)) == PoincareSeries((1, 3))

    def test_with_boundary(self):
        # B = 3 boundary circles: wedge of 2g + B - 1 = 2 circles
        assert orbit_space_poincare(datum(f=2, s=1)) == PoincareSeries((1, 2))

    def test_graph_cycles_count_as_boundary(self):
        assert orbit_space_poincare(datum(graph=[["F", "SP"]])) == PoincareSeries((1, 0))


class TestFixedSetShape:
    def test_circles_only(self):
        shape = fixed_set_shape(datum(f=2))
        assert (shape.circles, shape.intervals) == (2, 0)

    def test_interval_from_graph(self):
        shape = fixed_set_shape(datum(graph=[["F", "SP"]]))
        assert (shape.circles, shape.intervals) == (0, 1)

    def test_mixed(self):
        shape = fixed_set_shape(datum(f=1, graph=[["F", "SP", "F", "SP"]]))
        assert (shape.circles, shape.intervals) == (1, 2)

    def test_cohomology_polynomial(self):
        assert fixed_set_shape(datum(f=2, graph=[["F", "SP"]])).cohomology_polynomial() \
            == Poly((3, 2))


class TestEquivariantPoincare:
    def test_one_fixed_circle(self):
        assert equivariant_poincare(datum(f=1)) == PoincareSeries((1, 0, 0, 1), (1, 0, -1))

    def test_genus_one_with_circles(self):
        series = equivariant_poincare(datum(g=1, f=2, s=1))
        expected = PoincareSeries((1, 4)) + PoincareSeries((0, 0, 2, 2), (1, 0, -1))
        assert series == expected
        assert series.expansion(6) == [1, 4, 2, 2, 2, 2, 2]

    def test_closed_free_orientable(self):
        assert equivariant_poincare(datum(b=3)) == PoincareSeries((1, 0, 1))

    def test_fixed_interval_contributes_even_degrees_only(self):
        series = equivariant_poincare(datum(graph=[["F", "SP"]]))
        assert series == PoincareSeries((1,), (1, 0, -1))
        assert series.expansion(5) == [1, 0, 1, 0, 1, 0]


class TestBetti:
    def test_long_division_of_one_fixed_circle(self):
        inv = datum(f=1)
        assert [betti(inv, k) for k in range(6)] == [1, 0, 1, 1, 1, 1]

    def test_first_betti_nonorientable(self):
        assert betti(datum(eps="n", g=2, f=1, s=2), 1) == 4

    def test_odd_degrees_count_fixed_circles(self):
        assert betti(datum(g=1, f=2, s=1), 7) == 2

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            betti(datum(f=1), -1)

    def test_closed_fixed_points_match_shape(self):
        bounds = EnumerationBounds(max_g=2, max_f=3, max_s=2)
        checked = 0
        for inv in enumerate_invariants(bounds):
            if not inv.closed or inv.f == 0:
                continue
            checked += 1
            shape = fixed_set_shape(inv)
            assert betti(inv, 3) == shape.circles
            assert betti(inv, 2) - betti(inv, 3) == shape.intervals == 0
        assert checked > 20
