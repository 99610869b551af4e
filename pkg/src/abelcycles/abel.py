"""Abel equations x' = A(t) x^3 + B(t) x^2 and their invariant lines.

An invariant line is a curve 1 - P(t) x = 0 with P zero-free on the real
line and deg(P) >= 1; the value x(t) = 1/P(t) is then a periodic solution.
All criteria in this module are exact polynomial identities over the
rational coefficient field; no floating tolerance enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    FieldMismatchError,
    NotInvariantError,
    PreconditionError,
)
from .factorization import common_irreducible_factor, is_zero_free
from .trig_ring import EXACT, TrigPoly


@dataclass(frozen=True)
class AbelEquation:
    """Coefficient pair (A, B) of x' = A(t) x^3 + B(t) x^2, exact field."""

    A: TrigPoly
    B: TrigPoly

    def __post_init__(self):
        if self.A.field != EXACT or self.B.field != EXACT:
            raise FieldMismatchError("AbelEquation requires exact-field coefficients")

    @property
    def is_degenerate(self) -> bool:
        """A == 0: the equation separates and the cubic term is absent."""
        return self.A.is_zero()

    def rhs(self, t: float, x: float) -> float:
        return (self.A.eval(t) * x + self.B.eval(t)) * x * x


class InvariantLine:
    """Curve 1 - P(t) x = 0 with zero-free P of degree >= 1."""

    __slots__ = ("_p",)

    def __init__(self, p: TrigPoly):
        if p.field != EXACT:
            raise FieldMismatchError("InvariantLine requires an exact-field P")
        if p.is_zero() or not is_zero_free(p):
            raise PreconditionError("P must be zero-free on the real line")
        if p.degree() == 0:
            raise PreconditionError(
                "constant P is the separated-variable case, not an invariant line"
            )
        self._p = p

    @property
    def P(self) -> TrigPoly:
        return self._p

    @property
    def degree(self) -> int:
        return self._p.degree()

    def solution_value(self, t: float) -> float:
        """The solution x(t) = 1/P(t) carried by this line."""
        return 1.0 / self._p.eval(t)

    def __eq__(self, other):
        if not isinstance(other, InvariantLine):
            return NotImplemented
        return self._p == other._p

    def __hash__(self):
        return hash(("InvariantLine", self._p))

    def __repr__(self):
        return f"InvariantLine({self._p!r})"


@dataclass(frozen=True)
class Cofactor:
    """K(t, x) = x2*x^2 + x1*x + x0 with trigonometric-polynomial entries."""

    x2: TrigPoly
    x1: TrigPoly
    x0: TrigPoly


def invariance_residual(eq: AbelEquation, p: TrigPoly) -> TrigPoly:
    """P*P' + P*B + A; identically zero iff 1 - P x = 0 is invariant."""
    return p * p.derivative() + p * eq.B + eq.A


def is_invariant_line(
    eq: AbelEquation, p: TrigPoly, allow_constant: bool = False
) -> bool:
    """Exact test of the invariance identity P*P' + P*B + A = 0.

    Constant P (the separated-variable case) is rejected unless
    ``allow_constant`` is set; P with real zeros is always rejected.
    """
    if p.field != EXACT:
        raise FieldMismatchError("invariance is decided exactly; P must be exact")
    if p.is_zero():
        raise PreconditionError("P must be nonzero")
    if not is_zero_free(p):
        raise PreconditionError("P must be zero-free on the real line")
    if p.degree() == 0 and not allow_constant:
        raise PreconditionError(
            "constant P is the separated-variable case; pass allow_constant=True "
            "to evaluate the identity anyway"
        )
    return invariance_residual(eq, p).is_zero()


def verify_rational_solution(eq: AbelEquation, q: TrigPoly, p: TrigPoly) -> bool:
    """Exact test that x(t) = Q(t)/P(t) solves the equation.

    Checks the cleared-denominator identity
    P*(Q'*P - Q*P') - A*Q^3 - B*P*Q^2 = 0.  Q and P must be coprime;
    reducible inputs are rejected with instructions to cancel first.
    """
    if p.field != EXACT or q.field != EXACT:
        raise FieldMismatchError("exact-field numerator and denominator required")
    if p.is_zero():
        raise PreconditionError("P must be nonzero")
    if not is_zero_free(p):
        raise PreconditionError("P must be zero-free on the real line")
    if q.is_zero():
        if p.degree() != 0:
            raise PreconditionError(
                "Q = 0 with non-constant P is reducible; divide out P and retry"
            )
    elif q.degree() > 0 and p.degree() > 0 and common_irreducible_factor(p, q):
        raise PreconditionError(
            "Q and P share an irreducible factor; reduce the fraction and retry"
        )
    residual = (
        p * (q.derivative() * p - q * p.derivative())
        - eq.A * q**3
        - eq.B * p * q**2
    )
    return residual.is_zero()


def cofactor_of_line(eq: AbelEquation, line: InvariantLine) -> Cofactor:
    """Cofactor (A, -P', 0) of an invariant line 1 - P x = 0."""
    p = line.P
    if not is_invariant_line(eq, p):
        raise NotInvariantError("the given line is not invariant for this equation")
    return Cofactor(x2=eq.A, x1=-p.derivative(), x0=TrigPoly.zero())


def trivial_cofactor(eq: AbelEquation) -> Cofactor:
    """Cofactor (A, B, 0) of the trivial invariant curve x = 0."""
    return Cofactor(x2=eq.A, x1=eq.B, x0=TrigPoly.zero())


def _xpoly_mul(f: list[TrigPoly], g: list[TrigPoly]) -> list[TrigPoly]:
    out = [TrigPoly.zero() for _ in range(len(f) + len(g) - 1)]
    for i, fi in enumerate(f):
        for j, gj in enumerate(g):
            out[i + j] = out[i + j] + fi * gj
    return out


def satisfies_cofactor_identity(
    eq: AbelEquation, p: TrigPoly, cof: Cofactor
) -> bool:
    """Exact expansion of Xf - K*f for f = 1 - P x, as a polynomial in x."""
    zero = TrigPoly.zero()
    one = TrigPoly.one()
    # Xf = -P' x - P*A x^3 - P*B x^2
    xf = [zero, -p.derivative(), -(p * eq.B), -(p * eq.A)]
    kf = _xpoly_mul([one, -p], [cof.x0, cof.x1, cof.x2])
    n = max(len(xf), len(kf))
    xf += [zero] * (n - len(xf))
    kf += [zero] * (n - len(kf))
    return all((a - b).is_zero() for a, b in zip(xf, kf))


def from_invariant(p: TrigPoly, r: TrigPoly) -> AbelEquation:
    """Equation with prescribed invariant line 1 - P x = 0 and ratio R = A/P.

    Returns (A, B) = (P*R, -P' - R).  R = 0 yields the degenerate A = 0
    equation, flagged through :attr:`AbelEquation.is_degenerate`.
    """
    if p.field != EXACT or r.field != EXACT:
        raise FieldMismatchError("exact-field inputs required")
    if p.is_zero() or not is_zero_free(p):
        raise PreconditionError("P must be zero-free on the real line")
    if p.degree() == 0:
        raise PreconditionError("P must have degree >= 1")
    return AbelEquation(A=p * r, B=-p.derivative() - r)


def degree_identity(eq: AbelEquation, p1: TrigPoly, p2: TrigPoly) -> bool:
    """deg(P1) + deg(P2) == deg(A) for two distinct invariant lines."""
    if p1 == p2:
        raise PreconditionError("the two invariant lines must be distinct")
    for p in (p1, p2):
        if not is_invariant_line(eq, p):
            raise NotInvariantError("both inputs must be invariant lines")
    return p1.degree() + p2.degree() == eq.A.degree()


def rational_cycle_bound(eq: AbelEquation) -> int:
    """Upper bound for the number of nontrivial rational limit cycles.

    2 when deg(A) is odd or deg(A) < 2*deg(B); deg(A) + 1 otherwise.
    """
    if eq.is_degenerate:
        raise PreconditionError(
            "A = 0 is the separated-variable case; the bound does not apply"
        )
    deg_a = eq.A.degree()
    deg_b = eq.B.degree()
    if deg_a % 2 == 1:
        return 2
    if deg_b is not None and deg_a < 2 * deg_b:
        return 2
    return deg_a + 1


def center_obstruction(eq: AbelEquation) -> bool:
    """True iff the mean of B is nonzero (exact).

    A nonzero mean rules out a center at x = 0, so invariant-line solutions
    are isolated periodic solutions, i.e. genuine limit cycles.
    """
    return bool(eq.B.constant_term())
