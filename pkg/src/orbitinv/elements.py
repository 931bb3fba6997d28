"""Cup-product and module algebra of rational equivariant cohomology classes.

For a closed datum with f > 0 fixed circles the equivariant cohomology
embeds, as a ring, into

    H*(orbit surface)  (+)  sum over fixed circles of  Q[u] (x) H*(S^1),

so a class is stored by its coefficients there:

    D                constant class of the orbit surface (degree 0)
    A_k, B_k         degree-1 surface classes alpha_k, beta_k (no B for a
                     nonorientable orbit surface)
    C_i              boundary classes theta_i along the f fixed circles
    C_se_j           boundary classes along the s special-exceptional circles
    p_i(u), q_i(u)   the component in Q[u] delta_i (+) Q[u] theta_i on the
                     i-th fixed circle, with u of degree 2

subject to the kernel relations of the restriction to the fixed set:

    (1)  sum A_k + sum B_k + sum C_i + sum C_se_j = 0
    (2)  p_i(0) = D for every i
    (3)  q_i(0) = C_i for every i

The cup product is componentwise: degree >= 1 surface classes multiply to
zero (the surface has boundary, so its H^2 vanishes), and on each fixed
circle (p delta + q theta)(p' delta + q' theta) = pp' delta + (pq'+qp')
theta.  The degree-2 polynomial generator acts through its image
sum_i u delta_i.  Everything is exact over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .invariants import ORIENTABLE, OrbitInvariants, require_valid
from .polyq import Poly, as_poly

Coeff = Union[int, Fraction]


class RelationError(ValueError):
    """A proposed element breaks one of the kernel relations (1), (2), (3)."""


class ContextError(ValueError):
    """Elements of cohomology rings of different data were combined."""


def _as_fraction_tuple(values: Iterable[Coeff], length: int, name: str) -> tuple[Fraction, ...]:
    out = tuple(Fraction(v) for v in values)
    if len(out) != length:
        raise ValueError(f"{name} must have length {length}, got {len(out)}")
    return out


def _as_poly_tuple(values: Sequence, length: int, name: str) -> tuple[Poly, ...]:
    out = tuple(as_poly(v) for v in values)
    if len(out) != length:
        raise ValueError(f"{name} must have length {length}, got {len(out)}")
    return out


class EquivariantCohomology:
    """The cohomology ring of one closed datum with f > 0 fixed circles.

    Acts as a factory and context for :class:`CohomElement`; elements of
    rings built from different data refuse to combine.
    """

    def __init__(self, inv: OrbitInvariants):
        require_valid(inv, "EquivariantCohomology")
        if not inv.closed:
            raise ValueError("element algebra is implemented for closed data only "
                             "(t = 0 and empty graph)")
        if inv.f == 0:
            raise ValueError("element algebra needs at least one fixed circle; "
                             "for f = 0 only series and Betti numbers are available")
        self.inv = inv
        self.g = inv.g
        self.f = inv.f
        self.s = inv.s
        self.orientable = inv.eps is ORIENTABLE

    def __eq__(self, other) -> bool:
        if isinstance(other, EquivariantCohomology):
            return self.inv == other.inv
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("EquivariantCohomology", self.inv))

    def __repr__(self) -> str:
        return f"EquivariantCohomology({self.inv})"

    def from_parts(self, D: Coeff = 0, A: Iterable[Coeff] = None, B: Iterable[Coeff] = None,
                   C: Iterable[Coeff] = None, C_se: Iterable[Coeff] = None,
                   p: Sequence = None, q: Sequence = None) -> "CohomElement":
        """Build and check an element; omitted blocks default to zero.

        Raises :class:`RelationError` naming the broken relation when the
        parts are inconsistent.
        """
        zeros = lambda n: (Fraction(0),) * n
        zpolys = lambda n: (Poly(),) * n
        A = zeros(self.g) if A is None else _as_fraction_tuple(A, self.g, "A")
        if B is None:
            B = zeros(self.g) if self.orientable else ()
        elif not self.orientable:
            raise ValueError("B classes do not exist over a nonorientable orbit surface")
        else:
            B = _as_fraction_tuple(B, self.g, "B")
        C = zeros(self.f) if C is None else _as_fraction_tuple(C, self.f, "C")
        C_se = zeros(self.s) if C_se is None else _as_fraction_tuple(C_se, self.s, "C_se")
        p = zpolys(self.f) if p is None else _as_poly_tuple(p, self.f, "p")
        q = zpolys(self.f) if q is None else _as_poly_tuple(q, self.f, "q")
        return CohomElement(self, Fraction(D), A, B, C, C_se, p, q)

    def zero(self) -> "CohomElement":
        return self.from_parts()

    def unit(self) -> "CohomElement":
        """The identity: constant 1 on the surface, delta_i on every fixed
        circle."""
        return self.from_parts(D=1, p=(1,) * self.f)

    def u_class(self) -> "CohomElement":
        """Image of the degree-2 polynomial generator: sum_i u delta_i."""
        u = Poly((0, 1))
        return self.from_parts(p=(u,) * self.f)


@dataclass(frozen=True)
class CohomElement:
    """One equivariant cohomology class, possibly of mixed degree."""

    ring: EquivariantCohomology
    D: Fraction
    A: tuple[Fraction, ...]
    B: tuple[Fraction, ...]
    C: tuple[Fraction, ...]
    C_se: tuple[Fraction, ...]
    p: tuple[Poly, ...]
    q: tuple[Poly, ...]

    def __post_init__(self) -> None:
        total = sum(self.A) + sum(self.B) + sum(self.C) + sum(self.C_se)
        if total != 0:
            raise RelationError(f"relation (1) fails: surface degree-1 coefficients "
                                f"sum to {total}, not 0")
        for i, poly in enumerate(self.p):
            if poly.constant_term != self.D:
                raise RelationError(f"relation (2) fails: p_{i + 1}(0) = "
                                    f"{poly.constant_term} differs from D = {self.D}")
        for i, poly in enumerate(self.q):
            if poly.constant_term != self.C[i]:
                raise RelationError(f"relation (3) fails: q_{i + 1}(0) = "
                                    f"{poly.constant_term} differs from C_{i + 1} = {self.C[i]}")

    @property
    def is_zero(self) -> bool:
        return (self.D == 0 and not any(self.A) and not any(self.B) and not any(self.C)
                and not any(self.C_se) and all(pl.is_zero for pl in self.p)
                and all(pl.is_zero for pl in self.q))

    def _check(self, other: "CohomElement") -> None:
        if self.ring != other.ring:
            raise ContextError("elements belong to cohomology rings of different data")

    def __add__(self, other: "CohomElement") -> "CohomElement":
        if not isinstance(other, CohomElement):
            return NotImplemented
        self._check(other)
        return CohomElement(
            self.ring, self.D + other.D,
            tuple(a + b for a, b in zip(self.A, other.A)),
            tuple(a + b for a, b in zip(self.B, other.B)),
            tuple(a + b for a, b in zip(self.C, other.C)),
            tuple(a + b for a, b in zip(self.C_se, other.C_se)),
            tuple(a + b for a, b in zip(self.p, other.p)),
            tuple(a + b for a, b in zip(self.q, other.q)),
        )

    def __neg__(self) -> "CohomElement":
        return self.scaled(-1)

    def __sub__(self, other: "CohomElement") -> "CohomElement":
        if not isinstance(other, CohomElement):
            return NotImplemented
        return self + (-other)

    def scaled(self, c: Coeff) -> "CohomElement":
        c = Fraction(c)
        return CohomElement(
            self.ring, c * self.D,
            tuple(c * a for a in self.A),
            tuple(c * a for a in self.B),
            tuple(c * a for a in self.C),
            tuple(c * a for a in self.C_se),
            tuple(c * pl for pl in self.p),
            tuple(c * pl for pl in self.q),
        )

    def __mul__(self, other):
        if isinstance(other, CohomElement):
            return cup(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def max_degree(self) -> int:
        """Largest degree carrying a nonzero homogeneous component; -1 for 0."""
        deg = -1
        if self.D != 0:
            deg = 0
        if any(self.A) or any(self.B) or any(self.C) or any(self.C_se):
            deg = max(deg, 1)
        for pl in self.p:
            if pl.degree >= 1:
                deg = max(deg, 2 * pl.degree)
        for pl in self.q:
            if pl.degree >= 1:
                deg = max(deg, 2 * pl.degree + 1)
        return deg

    def render(self) -> str:
        """Readable form, e.g. ``theta_1 - theta_2`` or ``u*delta_1 + u*theta_2``."""
        parts: list[str] = []

        def term(coeff: Fraction, symbol: str) -> None:
            if coeff == 0:
                return
            mag = abs(coeff)
            body = symbol if mag == 1 else f"{mag}*{symbol}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")

        term(self.D, "1")
        for k, a in enumerate(self.A):
            term(a, f"alpha_{k + 1}")
        for k, b in enumerate(self.B):
            term(b, f"beta_{k + 1}")
        for j, c in enumerate(self.C_se):
            term(c, f"theta_se_{j + 1}")
        for i in range(self.ring.f):
            for k, c in enumerate(self.p[i].coeffs):
                if k == 0:
                    continue  # constant already rendered through D
                term(c, f"u*delta_{i + 1}" if k == 1 else f"u^{k}*delta_{i + 1}")
            for k, c in enumerate(self.q[i].coeffs):
                sym = f"theta_{i + 1}" if k == 0 else (
                    f"u*theta_{i + 1}" if k == 1 else f"u^{k}*theta_{i + 1}")
                term(c, sym)
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.render()


def cohom_zero(ring: EquivariantCohomology) -> CohomElement:
    return ring.zero()


def cohom_from_parts(ring: EquivariantCohomology, **parts) -> CohomElement:
    return ring.from_parts(**parts)


def cup(a: CohomElement, b: CohomElement) -> CohomElement:
    """Cup product.

    Componentwise in the ambient ring: on the surface the product of two
    positive-degree classes vanishes, and on each fixed circle polynomials
    multiply with theta^2 = 0.  Degree-1 times degree-1 lands in the
    vanishing H^2 of the surface and in theta^2 terms, hence is always zero.
    """
    a._check(b)
    ring = a.ring
    return CohomElement(
        ring,
        a.D * b.D,
        tuple(a.D * y + b.D * x for x, y in zip(a.A, b.A)),
        tuple(a.D * y + b.D * x for x, y in zip(a.B, b.B)),
        tuple(a.D * y + b.D * x for x, y in zip(a.C, b.C)),
        tuple(a.D * y + b.D * x for x, y in zip(a.C_se, b.C_se)),
        tuple(pa * pb for pa, pb in zip(a.p, b.p)),
        tuple(pa * qb + qa * pb for pa, qa, pb, qb in zip(a.p, a.q, b.p, b.q)),
    )


def module_action(power: int, x: CohomElement) -> CohomElement:
    """Multiply by the degree-2 polynomial generator ``power`` times, i.e. cup
    with (sum_i u delta_i)^power."""
    if power < 0:
        raise ValueError("power must be nonnegative")
    result = x
    u = x.ring.u_class()
    for _ in range(power):
        result = cup(u, result)
    return result


def degree_decompose(x: CohomElement) -> dict[int, CohomElement]:
    """Split into homogeneous components; zero components are omitted, so the
    zero element maps to {}.  The values sum back to ``x``."""
    ring = x.ring
    out: dict[int, CohomElement] = {}
    if x.D != 0:
        out[0] = ring.from_parts(D=x.D, p=(x.D,) * ring.f)
    if any(x.A) or any(x.B) or any(x.C) or any(x.C_se):
        out[1] = ring.from_parts(A=x.A, B=x.B or None, C=x.C, C_se=x.C_se, q=x.C)
    top = max((pl.degree for pl in x.p + x.q), default=0)
    for k in range(1, top + 1):
        p_part = tuple(Poly.monomial(k, pl[k]) for pl in x.p)
        if any(not pl.is_zero for pl in p_part):
            out[2 * k] = ring.from_parts(p=p_part)
        q_part = tuple(Poly.monomial(k, pl[k]) for pl in x.q)
        if any(not pl.is_zero for pl in q_part):
            out[2 * k + 1] = ring.from_parts(q=q_part)
    return out
