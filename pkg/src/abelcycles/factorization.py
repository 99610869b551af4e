"""Factorization machinery for real trigonometric polynomials.

Irreducible elements of the ring are a*cos(t) + b*sin(t) + c with
(a, b) != (0, 0); an element is zero-free on the real line exactly when
every irreducible factor satisfies c^2 > a^2 + b^2, and the number of
irreducible factors always equals the degree.

Two strictly separated regimes live here:

* numeric factorization (:func:`factor`, :func:`complex_factors`,
  float-field :func:`is_zero_free`) works through the roots of the
  degree-2n complex polynomial q(z) = z^n * L(z), where L is the Laurent
  embedding, and certifies itself only by re-expansion residuals;
* exact decisions (:func:`divides_exact`, :func:`gcd_zero_free`,
  :func:`common_irreducible_factor`, exact-field :func:`is_zero_free`)
  never consult a numeric root.  Divisibility is an exact linear solve,
  gcds run Euclid over Gaussian rationals in the Laurent picture, and
  zero-freeness of exact polynomials is decided by a Sturm chain after the
  tan(t/2) substitution.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    BoundaryUndecidableError,
    FactorizationFailedError,
    FieldMismatchError,
    InconsistencyError,
    PreconditionError,
    RepresentabilityError,
)
from .exact_linalg import solve_exact
from .trig_ring import (
    EXACT,
    FLOAT,
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    TrigPoly,
    max_coeff_difference,
)

DEFAULT_ROOT_TOL = 1e-12
DEFAULT_CIRCLE_BAND = 1e-9
_CLUSTER_RADIUS = 1e-6


# ---------------------------------------------------------------------------
# linear factors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearFactor:
    """Irreducible element a*cos(t) + b*sin(t) + c in normalized form.

    Exact factors are scaled so the first nonzero of (a, b) equals 1;
    float factors are scaled to a^2 + b^2 = 1 with the first significant
    entry of (a, b) positive.
    """

    a: object
    b: object
    c: object

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        exact = not any(isinstance(v, float) for v in (a, b, c))
        if exact:
            a, b, c = Fraction(a), Fraction(b), Fraction(c)
            if not a and not b:
                raise PreconditionError("(a, b) != (0, 0) is required")
            pivot = a if a else b
            a, b, c = a / pivot, b / pivot, c / pivot
        else:
            a, b, c = float(a), float(b), float(c)
            h = math.hypot(a, b)
            if h == 0.0:
                raise PreconditionError("(a, b) != (0, 0) is required")
            a, b, c = a / h, b / h, c / h
            pivot = a if abs(a) > 1e-9 else b
            if pivot < 0:
                a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def field(self) -> str:
        return FLOAT if isinstance(self.a, float) else EXACT

    @property
    def zero_free(self) -> bool:
        """c^2 > a^2 + b^2, decided exactly for exact coefficients."""
        return self.c * self.c > self.a * self.a + self.b * self.b

    def as_trig_poly(self) -> TrigPoly:
        return TrigPoly.linear(self.a, self.b, self.c)

    def eval(self, t: float) -> float:
        return float(self.a) * math.cos(t) + float(self.b) * math.sin(t) + float(self.c)

    def canonical_triple(self) -> tuple[float, float, float]:
        """Field-independent (a, b, c) with a^2 + b^2 = 1 for comparisons."""
        a, b, c = float(self.a), float(self.b), float(self.c)
        h = math.hypot(a, b)
        a, b, c = a / h, b / h, c / h
        pivot = a if abs(a) > 1e-9 else b
        if pivot < 0:
            a, b, c = -a, -b, -c
        return (a, b, c)


@dataclass(frozen=True)
class ComplexLinearFactor:
    """Degree-one element alpha*cos(t) + beta*sin(t) + gamma over C."""

    a: complex
    b: complex
    c: complex

    def laurent_triple(self) -> tuple[complex, complex, complex]:
        """(c_{-1}, c_0, c_{+1}) of the Laurent embedding."""
        return ((self.a + 1j * self.b) / 2, self.c, (self.a - 1j * self.b) / 2)

    def eval(self, t: float) -> complex:
        return self.a * math.cos(t) + self.b * math.sin(t) + self.c


@dataclass(frozen=True)
class Factorization:
    """Result of :func:`factor`: unit * product(factors) == input."""

    unit: float
    factors: tuple[LinearFactor, ...]
    residual: float


# ---------------------------------------------------------------------------
# dense univariate helpers (generic over Fraction and GaussianRational)
# ---------------------------------------------------------------------------


def _poly_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else None
        b = q[i] if i < len(q) else None
        if a is None:
            out.append(b)
        elif b is None:
            out.append(a)
        else:
            out.append(a + b)
    return _poly_trim(out)


def _poly_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [None] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if not pi:
            continue
        for j, qj in enumerate(q):
            if not qj:
                continue
            v = pi * qj
            out[i + j] = v if out[i + j] is None else out[i + j] + v
    return _poly_trim([v if v is not None else 0 * p[0] for v in out])


def _poly_scale(p: list, s) -> list:
    return _poly_trim([v * s for v in p])


def _poly_divmod(p: list, d: list) -> tuple[list, list]:
    d = _poly_trim(list(d))
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    q = [0 * d[-1]] * max(len(r) - len(d) + 1, 0)
    lead = d[-1]
    while len(r) >= len(d) and _poly_trim(r):
        r = _poly_trim(r)
        if len(r) < len(d):
            break
        shift = len(r) - len(d)
        coef = r[-1] / lead
        q[shift] = coef
        for i, dv in enumerate(d):
            r[shift + i] = r[shift + i] - coef * dv
        r.pop()
    return _poly_trim(q), _poly_trim(r)


def _poly_monic(p: list) -> list:
    p = _poly_trim(list(p))
    if not p:
        return p
    lead = p[-1]
    return [v / lead for v in p]


def _poly_gcd(p: list, q: list) -> list:
    """Monic gcd by the Euclidean algorithm; [one] when coprime."""
    a = _poly_trim(list(p))
    b = _poly_trim(list(q))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, _poly_trim(r)
    return _poly_monic(a)


def _poly_eval(p: list, x):
    acc = 0 * x if p else 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# exact zero-freeness via tan(t/2) substitution and a Sturm chain
# ---------------------------------------------------------------------------


def _weierstrass_numerator(p: TrigPoly) -> list[Fraction]:
    """N(u) with P(t) = N(u) / (1 + u^2)^n under u = tan(t/2).

    Built from the recurrences for cos(kt), sin(kt) in terms of
    cos(t) = (1 - u^2)/(1 + u^2) and sin(t) = 2u/(1 + u^2).
    """
    n = p.degree()
    if n is None:
        raise PreconditionError("zero polynomial has no numerator")
    one_plus = [Fraction(1), Fraction(0), Fraction(1)]  # 1 + u^2
    cos_k = [[Fraction(1)], [Fraction(1), Fraction(0), Fraction(-1)]]  # C_0, C_1
    sin_k = [[], [Fraction(0), Fraction(2)]]  # S_0, S_1
    for k in range(2, n + 1):
        two_c1 = [Fraction(2), Fraction(0), Fraction(-2)]  # 2(1 - u^2)
        bump = _poly_mul(one_plus, one_plus)
        cos_k.append(
            _poly_add(_poly_mul(two_c1, cos_k[k - 1]), _poly_scale(_poly_mul(bump, cos_k[k - 2]), Fraction(-1)))
        )
        sin_k.append(
            _poly_add(_poly_mul(two_c1, sin_k[k - 1]), _poly_scale(_poly_mul(bump, sin_k[k - 2]), Fraction(-1)))
        )
    # (1 + u^2)^(n-k) prefactors
    powers = [[Fraction(1)]]
    for _ in range(n):
        powers.append(_poly_mul(powers[-1], one_plus))
    total: list[Fraction] = []
    a0 = p.constant_term()
    if a0:
        total = _poly_add(total, _poly_scale(powers[n], a0))
    for k in range(1, n + 1):
        a, b = p.coeff_pair(k)
        if a:
            total = _poly_add(total, _poly_scale(_poly_mul(cos_k[k], powers[n - k]), a))
        if b:
            total = _poly_add(total, _poly_scale(_poly_mul(sin_k[k], powers[n - k]), b))
    return total


def _sign_at_infinity(p: list[Fraction], positive: bool) -> int:
    lead = p[-1]
    s = 1 if lead > 0 else -1
    if not positive and (len(p) - 1) % 2 == 1:
        s = -s
    return s


def _sign_variations(signs: list[int]) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a * b < 0)


def _count_distinct_real_roots(p: list[Fraction]) -> int:
    """Number of distinct real roots via the Sturm chain of p."""
    p = _poly_trim([Fraction(v) for v in p])
    if not p:
        raise PreconditionError("cannot count roots of the zero polynomial")
    if len(p) == 1:
        return 0
    deriv = [i * c for i, c in enumerate(p)][1:]
    chain = [p, _poly_trim(deriv)]
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-v for v in r])
    neg = [_sign_at_infinity(q, positive=False) for q in chain if q]
    pos = [_sign_at_infinity(q, positive=True) for q in chain if q]
    return _sign_variations(neg) - _sign_variations(pos)


def _value_at_pi(p: TrigPoly) -> Fraction:
    """P(pi) exactly: sin(k pi) = 0 and cos(k pi) = (-1)^k."""
    n = p.degree()
    total = Fraction(p.constant_term())
    for k in range(1, (n or 0) + 1):
        a, _ = p.coeff_pair(k)
        total += a if k % 2 == 0 else -a
    return total


# ---------------------------------------------------------------------------
# numeric roots of q(z) = z^n L(z)
# ---------------------------------------------------------------------------


def _horner_with_derivative(coeffs: Sequence[complex], z: complex) -> tuple[complex, complex]:
    p = coeffs[-1]
    dp = 0j
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(coeffs: Sequence[complex], max_iter: int = 120) -> list[complex] | None:
    n = len(coeffs) - 1
    lead = coeffs[-1]
    radius = abs(coeffs[0] / lead) ** (1.0 / n) if coeffs[0] else 1.0
    zs = [
        radius * cmath.exp(2j * math.pi * (k + 0.35) / n + 0.4j)
        for k in range(n)
    ]
    for _ in range(max_iter):
        worst = 0.0
        new = list(zs)
        for i, z in enumerate(zs):
            p, dp = _horner_with_derivative(coeffs, z)
            if p == 0:
                continue
            if dp == 0:
                new[i] = z * (1 + 1e-6) + 1e-6
                worst = math.inf
                continue
            newton = p / dp
            s = 0j
            for j, w in enumerate(zs):
                if j != i:
                    dz = z - w
                    if dz == 0:
                        dz = 1e-20
                    s += 1.0 / dz
            denom = 1.0 - newton * s
            if denom == 0:
                corr = newton
            else:
                corr = newton / denom
            new[i] = z - corr
            worst = max(worst, abs(corr) / (1.0 + abs(new[i])))
        zs = new
        if worst < 1e-14:
            return zs
    return None


def _cluster_and_polish(coeffs: list[complex], roots: list[complex]) -> list[complex]:
    """Average numerically split multiple roots and re-polish the means.

    The mean of a cluster stemming from an m-fold root cancels the leading
    error term, and multiplicity-aware Newton steps then restore full
    accuracy; genuinely distinct roots at desk scale are separated by far
    more than the cluster radius.
    """
    scale = 1.0 + max(abs(z) for z in roots)
    radius = _CLUSTER_RADIUS * scale
    remaining = list(roots)
    out: list[complex] = []
    while remaining:
        seed = remaining.pop()
        cluster = [seed]
        changed = True
        while changed:
            changed = False
            for z in list(remaining):
                if any(abs(z - w) <= radius for w in cluster):
                    cluster.append(z)
                    remaining.remove(z)
                    changed = True
        m = len(cluster)
        center = sum(cluster) / m
        for _ in range(3):
            p, dp = _horner_with_derivative(coeffs, center)
            if dp == 0 or p == 0:
                break
            center -= m * p / dp
        out.extend([center] * m)
    return out


def _laurent_roots(p: TrigPoly) -> list[complex]:
    """All 2n roots of q(z) = z^n L(z) for the float image of p."""
    pf = p.to_float()
    coeffs = [complex(c) for c in pf.to_laurent().z_polynomial()]
    while coeffs and abs(coeffs[-1]) == 0.0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    zero_roots = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zero_roots += 1
    roots = _aberth(coeffs)
    if roots is None:
        roots = list(np.roots(list(reversed(coeffs))))
        roots = [complex(z) for z in roots]
    roots = _cluster_and_polish(coeffs, roots)
    return roots + [0j] * zero_roots


# ---------------------------------------------------------------------------
# zero-freeness
# ---------------------------------------------------------------------------


def is_zero_free(p: TrigPoly, tol: float = DEFAULT_CIRCLE_BAND) -> bool:
    """True iff p has no real zeros.

    Exact-field polynomials are decided exactly (Sturm chain on the
    tan(t/2) numerator plus the value at t = pi); float-field polynomials
    are decided from the Laurent roots, and a root within ``tol`` of the
    unit circle raises :class:`BoundaryUndecidableError`.
    """
    if p.is_zero():
        raise PreconditionError("zero polynomial: zero-freeness is undefined")
    if p.degree() == 0:
        return True
    if p.field == EXACT:
        if p.degree() == 1:
            a, b = p.coeff_pair(1)
            c = p.constant_term()
            return c * c > a * a + b * b
        if _value_at_pi(p) == 0:
            return False
        numerator = _weierstrass_numerator(p)
        return _count_distinct_real_roots(numerator) == 0
    worst = min(abs(abs(z) - 1.0) for z in _laurent_roots(p))
    if worst <= tol:
        raise BoundaryUndecidableError(
            f"a Laurent root lies within {tol} of the unit circle; "
            "zero-freeness is numerically undecidable"
        )
    return True


# ---------------------------------------------------------------------------
# numeric factorization
# ---------------------------------------------------------------------------


def _split_circle_roots(
    roots: list[complex], band: float
) -> tuple[list[tuple[complex, complex]], list[tuple[complex, complex]]]:
    """Pair roots as (inside, outside) reciprocal-conjugate partners plus
    unimodular pairs in increasing-argument order."""
    inside = [z for z in roots if abs(z) < 1.0 - band]
    outside = [z for z in roots if abs(z) > 1.0 + band]
    on_circle = [z for z in roots if 1.0 - band <= abs(z) <= 1.0 + band]
    if len(inside) != len(outside):
        raise BoundaryUndecidableError(
            "inside/outside Laurent root counts differ; roots sit too close "
            "to the unit circle to pair"
        )
    pairs: list[tuple[complex, complex]] = []
    avail = list(outside)
    for z in inside:
        target = 1.0 / z.conjugate()
        best = min(avail, key=lambda w: abs(w - target))
        if abs(best - target) > 1e-4 * (1.0 + abs(target)):
            raise FactorizationFailedError(
                "could not match a root with its reciprocal-conjugate partner"
            )
        avail.remove(best)
        pairs.append((z, best))
    if len(on_circle) % 2:
        raise BoundaryUndecidableError(
            "odd number of unimodular roots; pairing is undecidable"
        )
    on_circle.sort(key=lambda z: cmath.phase(z) % (2.0 * math.pi))
    circle_pairs = [
        (on_circle[2 * i], on_circle[2 * i + 1]) for i in range(len(on_circle) // 2)
    ]
    return pairs, circle_pairs


def _offcircle_pair_factor(z_in: complex) -> LinearFactor:
    r = abs(z_in)
    a = z_in.real / r
    b = z_in.imag / r
    c = -(r * r + 1.0) / (2.0 * r)
    return LinearFactor(a, b, c)


def _circle_pair_factor(z1: complex, z2: complex) -> LinearFactor:
    t1 = cmath.phase(z1) % (2.0 * math.pi)
    t2 = cmath.phase(z2) % (2.0 * math.pi)
    mid = (t1 + t2) / 2.0
    half = (t1 - t2) / 2.0
    return LinearFactor(math.cos(mid), math.sin(mid), -math.cos(half))


def factor(p: TrigPoly, tol: float = 1e-9) -> Factorization:
    """Factor p into normalized irreducible linear factors (float output).

    The factor count equals the degree.  The re-expanded product is
    compared coefficient-wise against p and the factorization is rejected
    when the residual exceeds ``tol``.  Unimodular root pairs (real zeros
    of p) are paired in increasing-argument order, which picks one
    representative of the non-unique factorization.
    """
    n = p.degree()
    if n is None or n == 0:
        raise PreconditionError("factor requires a nonzero, non-unit polynomial")
    pf = p.to_float()
    roots = _laurent_roots(pf)
    pairs, circle_pairs = _split_circle_roots(roots, DEFAULT_CIRCLE_BAND)
    factors = [_offcircle_pair_factor(z_in) for z_in, _ in pairs]
    factors += [_circle_pair_factor(z1, z2) for z1, z2 in circle_pairs]
    factors.sort(key=lambda f: (round(f.c, 9), round(f.a, 9), round(f.b, 9)))
    prod = TrigPoly.one(FLOAT)
    for f in factors:
        prod = prod * f.as_trig_poly()
    # unit chosen so the largest coefficient of p is matched exactly
    best_idx, best_val, best_prod = 0, 0.0, 1.0
    for k in range(n + 1):
        (pa, pb) = pf.coeff_pair(k)
        (qa, qb) = prod.coeff_pair(k)
        for v, w in ((pa, qa), (pb, qb)):
            if abs(v) > best_val and w != 0.0:
                best_idx, best_val, best_prod = k, abs(v), w
                unit = v / w
    if best_val == 0.0:
        raise FactorizationFailedError("input has no nonzero coefficient to match")
    residual = max_coeff_difference(pf, prod * unit)
    if residual > tol:
        raise FactorizationFailedError(
            f"re-expansion residual {residual:.3e} exceeds tolerance {tol:.3e}"
        )
    return Factorization(unit=unit, factors=tuple(factors), residual=residual)


def complex_factors(p: TrigPoly, tol: float = 1e-9) -> list[ComplexLinearFactor]:
    """Split p into 2*deg(p) degree-one complex factors whose product is p.

    Every reciprocal-conjugate (or unimodular) root pair contributes two
    factors: a monic upper factor cos(t) + i sin(t) - zeta for the inside
    (or smaller-argument) root, and a lower factor carrying z^{-1} for its
    partner.  The scalar unit is folded into the first lower factor so the
    plain product of the returned factors reproduces p.
    """
    n = p.degree()
    if n is None or n == 0:
        raise PreconditionError("complex_factors requires a nonzero, non-unit polynomial")
    pf = p.to_float()
    roots = _laurent_roots(pf)
    pairs, circle_pairs = _split_circle_roots(roots, DEFAULT_CIRCLE_BAND)
    ordered: list[tuple[complex, complex]] = []
    for z_in, z_out in pairs:
        ordered.append((z_out, z_in))  # (lower root, upper root)
    for z1, z2 in circle_pairs:
        ordered.append((z2, z1))  # larger argument goes to the lower factor
    an, bn = pf.coeff_pair(n)
    lead = complex(an, -bn) / 2.0  # top Laurent coefficient of p
    out: list[ComplexLinearFactor] = []
    for i, (low, up) in enumerate(ordered):
        w = lead if i == 0 else 1.0 + 0j
        out.append(ComplexLinearFactor(a=-w * low, b=1j * w * low, c=w))
        out.append(ComplexLinearFactor(a=1.0 + 0j, b=1j, c=-up))
    # residual check through Laurent convolution; the convolved list spans
    # z^{-2n}..z^{2n} with the true support z^{-n}..z^{n} in the middle
    prod = [1.0 + 0j]
    for f in out:
        lo, mid, hi = f.laurent_triple()
        prod = np.convolve(prod, [lo, mid, hi]).tolist()
    target = [0j] * n + [complex(c) for c in pf.to_laurent().z_polynomial()] + [0j] * n
    if len(prod) != len(target):
        raise InconsistencyError("complex factor product has the wrong support")
    residual = max(abs(a - b) for a, b in zip(prod, target))
    if residual > tol:
        raise FactorizationFailedError(
            f"complex factor product residual {residual:.3e} exceeds {tol:.3e}"
        )
    return out


# ---------------------------------------------------------------------------
# exact divisibility and gcd
# ---------------------------------------------------------------------------


def _require_exact(*polys: TrigPoly) -> None:
    for p in polys:
        if p.field != EXACT:
            raise FieldMismatchError("exact-field polynomials are required here")


def divides_exact(d: TrigPoly, p: TrigPoly) -> TrigPoly | None:
    """Quotient q with p = d*q, or None when d does not divide p.

    Division is realized as an exact linear solve for q's coefficients.
    """
    _require_exact(d, p)
    if d.is_zero():
        raise PreconditionError("division by the zero polynomial")
    if p.is_zero():
        return TrigPoly.zero(EXACT)
    dd = d.degree()
    dp = p.degree()
    if dd > dp:
        return None
    dq = dp - dd
    basis: list[TrigPoly] = [TrigPoly.one()]
    for k in range(1, dq + 1):
        basis.append(TrigPoly.cosine(k))
        basis.append(TrigPoly.sine(k))
    columns = [(d * e).coefficient_vector(dp) for e in basis]
    rows = [[columns[j][i] for j in range(len(basis))] for i in range(2 * dp + 1)]
    sol = solve_exact(rows, p.coefficient_vector(dp))
    if sol is None:
        return None
    cos = [sol[0]] + [sol[2 * k - 1] for k in range(1, dq + 1)]
    sin = [sol[2 * k] for k in range(1, dq + 1)]
    q = TrigPoly(cos, sin)
    if d * q != p:
        raise InconsistencyError("exact division verification failed")
    return q


def _trig_zpoly(p: TrigPoly) -> list[GaussianRational]:
    """z^deg(p) * L(z) as an ascending Gaussian-rational coefficient list."""
    _require_exact(p)
    return [c for c in p.to_laurent().z_polynomial()] or [GR_ZERO]


def _zpoly_to_trig(g: list[GaussianRational]) -> TrigPoly:
    """Map a monic, conjugate-reciprocal-closed z-polynomial of even degree
    back to a real trigonometric polynomial with constant coefficient 1."""
    g = _poly_trim(list(g))
    deg = len(g) - 1
    if deg == 0:
        return TrigPoly.one()
    if deg % 2:
        raise InconsistencyError("z-polynomial degree must be even to map back")
    m = deg // 2
    mu = g[0].conjugate()  # leading coefficient is 1
    for j in range(deg + 1):
        if g[deg - j].conjugate() != mu * g[j]:
            raise InconsistencyError(
                "z-polynomial is not closed under reciprocal conjugation"
            )
    lam = GR_ONE + mu
    if not lam:
        lam = GR_I * (GR_ONE - mu)
    d = [lam * gj for gj in g]
    cos = [d[m].re]
    sin = []
    if d[m].im:
        raise RepresentabilityError("center coefficient is not real after scaling")
    for k in range(1, m + 1):
        dk = d[m + k]
        if d[m - k] != dk.conjugate():
            raise RepresentabilityError("scaled z-polynomial lost conjugate symmetry")
        cos.append(2 * dk.re)
        sin.append(-2 * dk.im)
    result = TrigPoly(cos, sin)
    a0 = result.constant_term()
    if not a0:
        raise InconsistencyError(
            "zero constant coefficient: the mapped polynomial cannot be zero-free"
        )
    return result / a0


def gcd_zero_free(p1: TrigPoly, p2: TrigPoly) -> TrigPoly:
    """Greatest common divisor of two zero-free polynomials, with a0 = 1.

    Zero-free elements factor uniquely, so the gcd is well-defined up to a
    unit; it is computed by the Euclidean algorithm over Gaussian rationals
    in the Laurent picture and mapped back.
    """
    _require_exact(p1, p2)
    for p in (p1, p2):
        if p.is_zero() or not is_zero_free(p):
            raise PreconditionError(
                "gcd requires zero-free inputs; factorizations of elements with "
                "real zeros need not be unique"
            )
    g = _poly_gcd(_trig_zpoly(p1), _trig_zpoly(p2))
    return _zpoly_to_trig(g)


def common_irreducible_factor(p: TrigPoly, q: TrigPoly) -> bool:
    """True iff p and q share an irreducible factor over the reals.

    Requires p to be zero-free; without that hypothesis real coprimality
    and complex coprimality can disagree, so the question is rejected.
    """
    try:
        zf = is_zero_free(p)
    except BoundaryUndecidableError as exc:
        raise PreconditionError(
            "first argument must be zero-free; this could not be certified"
        ) from exc
    if not zf:
        raise PreconditionError("first argument must be zero-free on the real line")
    if q.is_zero():
        raise PreconditionError("second argument must be nonzero")
    if q.degree() == 0 or p.degree() == 0:
        return False
    _require_exact(p, q)
    g = _poly_gcd(_trig_zpoly(p), _trig_zpoly(q))
    return len(g) - 1 > 0
