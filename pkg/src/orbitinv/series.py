"""Exact equivariant Poincare series and Betti numbers.

The rational equivariant cohomology of a compact 3-manifold with circle
action splits, as a graded vector space, into the cohomology of the orbit
surface plus one copy of ``x^2/(1-x^2)`` (respectively ``x^2(1+x)/(1-x^2)``)
for every fixed interval (respectively fixed circle).  All the generating
functions here are therefore rational with integer coefficients, and Betti
numbers come out of exact power-series division, never truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .cyclegraph import EdgeLabel
from .invariants import ORIENTABLE, OrbitInvariants, require_valid
from .polyq import ONE, Poly, X, as_poly, exact_div, poly_gcd


class PoincareSeries:
    """A reduced rational function p(x)/q(x) representing a power series
    ``sum b_k x^k`` with nonnegative integer coefficients.

    Stored in the canonical form: numerator and denominator are coprime
    integer-coefficient polynomials, jointly primitive, and the denominator
    has positive constant term.  Structural equality therefore decides
    equality of rational functions.  The nonnegative-integrality of the
    expansion is checked whenever coefficients are extracted.
    """

    __slots__ = ("num", "den")

    def __init__(self, numerator, denominator=1):
        num = as_poly(numerator)
        den = as_poly(denominator)
        if den.is_zero:
            raise ZeroDivisionError("series denominator is zero")
        if num.is_zero:
            self.num, self.den = (), (1,)
            return
        g = poly_gcd(num, den)
        num = exact_div(num, g)
        den = exact_div(den, g)
        if den.constant_term == 0:
            raise ValueError("rational function has a pole at x = 0; not a power series")
        scale = lcm(*(c.denominator for c in num.coeffs + den.coeffs))
        nums = [int(c * scale) for c in num.coeffs]
        dens = [int(c * scale) for c in den.coeffs]
        content = gcd(*(abs(c) for c in nums + dens))
        sign = 1 if dens[0] > 0 else -1
        self.num = tuple(c * sign // content for c in nums)
        self.den = tuple(c * sign // content for c in dens)

    @property
    def numerator(self) -> Poly:
        return Poly(self.num)

    @property
    def denominator(self) -> Poly:
        return Poly(self.den)

    def expansion(self, upto: int) -> list[int]:
        """Coefficients b_0 .. b_upto by exact long division.

        Raises ``ValueError`` if any coefficient in the requested range fails
        to be a nonnegative integer, which would mean the rational function
        is not a Poincare series at all.
        """
        if upto < 0:
            return []
        out: list[int] = []
        d0 = self.den[0]
        for k in range(upto + 1):
            acc = Fraction(self.num[k] if k < len(self.num) else 0)
            for j in range(1, min(k, len(self.den) - 1) + 1):
                acc -= self.den[j] * out[k - j]
            b = acc / d0
            if b.denominator != 1 or b < 0:
                raise ValueError(f"coefficient of x^{k} is {b}; "
                                 "not a nonnegative-integer power series")
            out.append(int(b))
        return out

    def coefficient(self, k: int) -> int:
        if k < 0:
            raise ValueError("degree must be nonnegative")
        return self.expansion(k)[k]

    def __add__(self, other) -> "PoincareSeries":
        other = _coerce_series(other)
        if other is None:
            return NotImplemented
        return PoincareSeries(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __mul__(self, other) -> "PoincareSeries":
        other = _coerce_series(other)
        if other is None:
            return NotImplemented
        return PoincareSeries(self.numerator * other.numerator,
                              self.denominator * other.denominator)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, PoincareSeries):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Poly)):
            return self == PoincareSeries(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PoincareSeries", self.num, self.den))

    def render(self, var: str = "x") -> str:
        num = self.numerator.render(var)
        if self.den == (1,):
            return num
        return f"({num})/({self.denominator.render(var)})"

    def render_expansion(self, upto: int, var: str = "x") -> str:
        """Prefix of the power series, e.g. ``1 + 2x + x^2 + x^3 + ...``."""
        text = Poly(self.expansion(upto)).render(var)
        finite = len(self.den) == 1 and self.numerator.degree <= upto
        return text if finite else f"{text} + ..."

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PoincareSeries({list(self.num)}, {list(self.den)})"


def _coerce_series(value) -> PoincareSeries | None:
    if isinstance(value, PoincareSeries):
        return value
    if isinstance(value, (int, Poly)):
        return PoincareSeries(value)
    return None


@dataclass(frozen=True)
class FixedSetShape:
    """Connected components of the fixed-point set: circles (away from the
    boundary) and intervals (F arcs of the graph)."""

    circles: int
    intervals: int

    def cohomology_polynomial(self) -> Poly:
        """Poincare polynomial of the fixed set: each circle contributes 1+x,
        each interval contributes 1."""
        return Poly((self.circles + self.intervals, self.circles))


def fixed_set_shape(inv: OrbitInvariants) -> FixedSetShape:
    require_valid(inv, "fixed_set_shape")
    return FixedSetShape(circles=inv.f, intervals=inv.graph.edge_count(EdgeLabel.F))


def orbit_space_poincare(inv: OrbitInvariants) -> PoincareSeries:
    """Poincare series of the orbit surface (a polynomial).

    A closed surface gives 1 + 2g x + x^2 (orientable) or 1 + g x
    (nonorientable); a surface with B > 0 boundary circles is homotopy
    equivalent to a wedge of 2g+B-1 (orientable) or g+B-1 (nonorientable)
    circles.
    """
    require_valid(inv, "orbit_space_poincare")
    B = inv.boundary_circles
    if inv.eps is ORIENTABLE:
        poly = Poly((1, 2 * inv.g, 1)) if B == 0 else Poly((1, 2 * inv.g + B - 1))
    else:
        poly = Poly((1, inv.g)) if B == 0 else Poly((1, inv.g + B - 1))
    return PoincareSeries(poly)


def equivariant_poincare(inv: OrbitInvariants) -> PoincareSeries:
    """Poincare series of the rational equivariant cohomology.

    The orbit-surface series plus ``x^2 * (circles * (1+x) + intervals)``
    over ``1 - x^2``, reduced.  For closed data with fixed circles this
    collapses to ``1 + (2g+f+s-1) x + f (x^2+x^3)/(1-x^2)`` in the orientable
    case and its g+f+s-1 analogue otherwise.
    """
    base = orbit_space_poincare(inv)
    shape = fixed_set_shape(inv)
    if shape.circles == 0 and shape.intervals == 0:
        return base
    fiber_poly = Poly((shape.circles + shape.intervals, shape.circles))
    return base + PoincareSeries(X * X * fiber_poly, ONE - X * X)


def betti(inv: OrbitInvariants, k: int) -> int:
    """dim of the degree-k rational equivariant cohomology."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return equivariant_poincare(inv).coefficient(k)
