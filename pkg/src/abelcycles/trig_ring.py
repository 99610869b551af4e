"""Exact arithmetic in the ring of real trigonometric polynomials.

A trigonometric polynomial is a finite sum

    a0 + sum_{k=1..n} a_k*cos(k t) + b_k*sin(k t)

with all coefficients drawn from one of two fields: exact rationals
(``fractions.Fraction``) or binary64 floats.  The fields never mix
implicitly; binary operations on mismatched fields raise
:class:`~abelcycles.errors.FieldMismatchError` and conversions happen only
through :meth:`TrigPoly.to_float`.

The canonical form keeps no trailing ``(a_n, b_n) == (0, 0)`` pair, so
``degree`` is the largest harmonic index with a nonzero coefficient pair
and the zero polynomial has empty coefficient sequences.

The complex picture z = e^{it} (so cos kt = (z^k + z^-k)/2 and
sin kt = (z^k - z^-k)/(2i)) is exposed through :class:`LaurentPoly`;
exact complex coefficients are Gaussian rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import FieldMismatchError, RepresentabilityError

EXACT = "exact"
FLOAT = "float"

TWO_PI = 2.0 * math.pi

ExactScalar = Union[int, Fraction]
Scalar = Union[int, float, Fraction]


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re: Scalar, im: Scalar = 0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        other = Fraction(other)
        return GaussianRational(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            n = other.norm2()
            if not n:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return GaussianRational(
                (self.re * other.re + self.im * other.im) / n,
                (self.im * other.re - self.re * other.im) / n,
            )
        other = Fraction(other)
        return GaussianRational(self.re / other, self.im / other)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


GR_ZERO = GaussianRational(Fraction(0))
GR_ONE = GaussianRational(Fraction(1))
GR_I = GaussianRational(Fraction(0), Fraction(1))


class MeanIntegral(NamedTuple):
    """Integral of a trigonometric polynomial over one period, kept as the
    exact constant coefficient times the symbolic factor 2*pi."""

    coefficient: Scalar
    period_factor: str = "2*pi"

    def as_float(self) -> float:
        return float(self.coefficient) * TWO_PI


def _infer_field(entries: Iterable[Scalar]) -> str | None:
    has_float = False
    has_exact = False
    for e in entries:
        if isinstance(e, bool):
            raise TypeError("bool is not a valid coefficient")
        if isinstance(e, float):
            has_float = True
        elif isinstance(e, (int, Fraction)):
            has_exact = True
        else:
            raise TypeError(f"unsupported coefficient type {type(e).__name__}")
    if has_float and has_exact:
        raise FieldMismatchError(
            "mixed exact and float coefficients in one polynomial"
        )
    if has_float:
        return FLOAT
    if has_exact:
        return EXACT
    return None


class TrigPoly:
    """Real trigonometric polynomial in canonical form.

    ``cos_coeffs`` holds a_0..a_n and ``sin_coeffs`` holds b_1..b_n; the
    trailing pair is nonzero unless the polynomial is zero, in which case
    both sequences are empty.
    """

    __slots__ = ("_cos", "_sin", "_field")

    def __init__(
        self,
        cos_coeffs: Sequence[Scalar] = (),
        sin_coeffs: Sequence[Scalar] = (),
        field: str | None = None,
    ):
        cos = list(cos_coeffs)
        sin = list(sin_coeffs)
        inferred = _infer_field(cos + sin)
        if field is None:
            field = inferred or EXACT
        if field not in (EXACT, FLOAT):
            raise ValueError(f"unknown coefficient field {field!r}")
        if field == EXACT:
            if inferred == FLOAT:
                raise FieldMismatchError(
                    "float coefficients supplied for an exact-field polynomial"
                )
            cos = [Fraction(c) for c in cos]
            sin = [Fraction(c) for c in sin]
            zero: Scalar = Fraction(0)
        else:
            cos = [float(c) for c in cos]
            sin = [float(c) for c in sin]
            zero = 0.0
        n = max(len(cos) - 1, len(sin), 0)
        cos += [zero] * (n + 1 - len(cos))
        sin += [zero] * (n - len(sin))
        while n >= 1 and not cos[n] and not sin[n - 1]:
            cos.pop()
            sin.pop()
            n -= 1
        if n == 0 and (not cos or not cos[0]):
            cos = []
        self._cos = tuple(cos)
        self._sin = tuple(sin)
        self._field = field

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, field: str = EXACT) -> "TrigPoly":
        return cls((), (), field=field)

    @classmethod
    def one(cls, field: str = EXACT) -> "TrigPoly":
        return cls.constant(1 if field == EXACT else 1.0)

    @classmethod
    def constant(cls, c: Scalar, field: str | None = None) -> "TrigPoly":
        return cls((c,), (), field=field)

    @classmethod
    def cosine(cls, k: int, c: Scalar = 1) -> "TrigPoly":
        """c*cos(k t) (k = 0 gives the constant c)."""
        if k < 0:
            raise ValueError("harmonic index must be >= 0")
        return cls([0] * k + [c], ())

    @classmethod
    def sine(cls, k: int, c: Scalar = 1) -> "TrigPoly":
        """c*sin(k t)."""
        if k < 1:
            raise ValueError("harmonic index must be >= 1")
        return cls((), [0] * (k - 1) + [c])

    @classmethod
    def linear(cls, a: Scalar, b: Scalar, c: Scalar) -> "TrigPoly":
        """a*cos(t) + b*sin(t) + c."""
        return cls((c, a), (b,))

    # -- basic structure -----------------------------------------------------

    @property
    def cos(self) -> tuple:
        return self._cos

    @property
    def sin(self) -> tuple:
        return self._sin

    @property
    def field(self) -> str:
        return self._field

    def is_zero(self) -> bool:
        return not self._cos

    def is_constant(self) -> bool:
        return len(self._cos) <= 1

    def is_one(self) -> bool:
        return len(self._cos) == 1 and self._cos[0] == 1

    def degree(self) -> int | None:
        """Largest k with (a_k, b_k) != (0, 0); None for the zero polynomial."""
        return len(self._cos) - 1 if self._cos else None

    def constant_term(self) -> Scalar:
        if not self._cos:
            return Fraction(0) if self._field == EXACT else 0.0
        return self._cos[0]

    def mean_integral(self) -> MeanIntegral:
        """Integral over [0, 2*pi] as (a_0, "2*pi"); a_0 stays exact."""
        return MeanIntegral(self.constant_term())

    def coeff_pair(self, k: int) -> tuple:
        """(a_k, b_k), zero-padded beyond the degree.  b_0 is 0 by convention."""
        zero: Scalar = Fraction(0) if self._field == EXACT else 0.0
        a = self._cos[k] if k < len(self._cos) else zero
        b = self._sin[k - 1] if 1 <= k <= len(self._sin) else zero
        return (a, b)

    def coefficient_vector(self, degree: int) -> list:
        """Flat layout (a0, a1, b1, a2, b2, ...) padded to the given degree."""
        own = self.degree()
        if own is not None and own > degree:
            raise ValueError("polynomial degree exceeds requested vector size")
        vec = [self.constant_term()]
        for k in range(1, degree + 1):
            a, b = self.coeff_pair(k)
            vec.append(a)
            vec.append(b)
        return vec

    # -- field handling ------------------------------------------------------

    def _require_same_field(self, other: "TrigPoly") -> None:
        if self._field != other._field:
            raise FieldMismatchError(
                f"cannot combine {self._field}-field and {other._field}-field "
                "polynomials; convert explicitly"
            )

    def _coerce_scalar(self, s: Scalar) -> Scalar:
        if isinstance(s, bool):
            raise TypeError("bool is not a valid coefficient")
        if self._field == EXACT:
            if isinstance(s, float):
                raise FieldMismatchError(
                    "float scalar applied to an exact-field polynomial"
                )
            return Fraction(s)
        if isinstance(s, Fraction):
            raise FieldMismatchError(
                "exact rational scalar applied to a float-field polynomial"
            )
        return float(s)

    def to_float(self) -> "TrigPoly":
        """Explicit conversion to the binary64 coefficient field."""
        if self._field == FLOAT:
            return self
        return TrigPoly(
            [float(c) for c in self._cos],
            [float(c) for c in self._sin],
            field=FLOAT,
        )

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TrigPoly):
            self._require_same_field(other)
            n = max(len(self._cos), len(other._cos))
            cos = [
                (self._cos[k] if k < len(self._cos) else 0)
                + (other._cos[k] if k < len(other._cos) else 0)
                for k in range(n)
            ]
            m = max(len(self._sin), len(other._sin))
            sin = [
                (self._sin[k] if k < len(self._sin) else 0)
                + (other._sin[k] if k < len(other._sin) else 0)
                for k in range(m)
            ]
            return TrigPoly(cos, sin, field=self._field)
        if isinstance(other, (int, float, Fraction)):
            return self + TrigPoly.constant(self._coerce_scalar(other), self._field)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly(
            [-c for c in self._cos], [-c for c in self._sin], field=self._field
        )

    def __sub__(self, other):
        if isinstance(other, (TrigPoly, int, float, Fraction)):
            return self + (-other if isinstance(other, TrigPoly) else -self._coerce_scalar(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            s = self._coerce_scalar(other)
            return TrigPoly(
                [c * s for c in self._cos],
                [c * s for c in self._sin],
                field=self._field,
            )
        if not isinstance(other, TrigPoly):
            return NotImplemented
        self._require_same_field(other)
        if self.is_zero() or other.is_zero():
            return TrigPoly.zero(self._field)
        n = len(self._cos) - 1
        m = len(other._cos) - 1
        big = n + m
        if self._field == EXACT:
            half: Scalar = Fraction(1, 2)
            zero: Scalar = Fraction(0)
        else:
            half = 0.5
            zero = 0.0
        cos = [zero] * (big + 1)
        sin = [zero] * (big + 1)  # index k; slot 0 unused

        for j in range(n + 1):
            aj = self._cos[j]
            bj = self._sin[j - 1] if j >= 1 else zero
            for k in range(m + 1):
                ak = other._cos[k]
                bk = other._sin[k - 1] if k >= 1 else zero
                s = j + k
                d = j - k
                ad = d if d >= 0 else -d
                if aj and ak:
                    # cos*cos = (cos(j-k) + cos(j+k))/2
                    v = aj * ak * half
                    cos[ad] += v
                    cos[s] += v
                if bj and bk:
                    # sin*sin = (cos(j-k) - cos(j+k))/2
                    v = bj * bk * half
                    cos[ad] += v
                    cos[s] -= v
                if bj and ak:
                    # sin(j)*cos(k) = (sin(j+k) + sin(j-k))/2
                    v = bj * ak * half
                    sin[s] += v
                    if d > 0:
                        sin[d] += v
                    elif d < 0:
                        sin[-d] -= v
                if aj and bk:
                    # cos(j)*sin(k) = (sin(j+k) - sin(j-k))/2
                    v = aj * bk * half
                    sin[s] += v
                    if d > 0:
                        sin[d] -= v
                    elif d < 0:
                        sin[-d] += v
        return TrigPoly(cos, sin[1:], field=self._field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, Fraction)):
            s = self._coerce_scalar(other)
            if not s:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            inv = Fraction(1) / s if self._field == EXACT else 1.0 / s
            return self * inv
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = TrigPoly.one(self._field)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self) -> "TrigPoly":
        """Term-wise derivative; constants map to the zero polynomial."""
        if self.is_constant():
            return TrigPoly.zero(self._field)
        n = len(self._cos) - 1
        cos = [0 if self._field == EXACT else 0.0]
        sin = []
        for k in range(1, n + 1):
            a = self._cos[k]
            b = self._sin[k - 1]
            cos.append(k * b)
            sin.append(-k * a)
        return TrigPoly(cos, sin, field=self._field)

    # -- evaluation ----------------------------------------------------------

    def eval(self, t: float) -> float:
        """Numeric value at t; exact coefficients are converted per term."""
        if not self._cos:
            return 0.0
        total = float(self._cos[0])
        for k in range(1, len(self._cos)):
            total += float(self._cos[k]) * math.cos(k * t)
            total += float(self._sin[k - 1]) * math.sin(k * t)
        return total

    __call__ = eval

    # -- Laurent embedding ---------------------------------------------------

    def to_laurent(self) -> "LaurentPoly":
        """Coefficients of sum c_k z^k with c_k = (a_k - i b_k)/2 and
        c_{-k} = (a_k + i b_k)/2."""
        if self.is_zero():
            return LaurentPoly((), 0, self._field)
        n = len(self._cos) - 1
        if self._field == EXACT:
            half = Fraction(1, 2)
            coeffs = [GR_ZERO] * (2 * n + 1)
            coeffs[n] = GaussianRational(self._cos[0])
            for k in range(1, n + 1):
                a = self._cos[k] * half
                b = self._sin[k - 1] * half
                coeffs[n + k] = GaussianRational(a, -b)
                coeffs[n - k] = GaussianRational(a, b)
        else:
            coeffs = [0j] * (2 * n + 1)
            coeffs[n] = complex(self._cos[0], 0.0)
            for k in range(1, n + 1):
                a = self._cos[k] * 0.5
                b = self._sin[k - 1] * 0.5
                coeffs[n + k] = complex(a, -b)
                coeffs[n - k] = complex(a, b)
        return LaurentPoly(coeffs, n, self._field)

    @classmethod
    def from_laurent(cls, laurent: "LaurentPoly") -> "TrigPoly":
        return laurent.to_trig()

    # -- dunder plumbing -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return (
            self._field == other._field
            and self._cos == other._cos
            and self._sin == other._sin
        )

    def __hash__(self):
        return hash((self._field, self._cos, self._sin))

    def __repr__(self) -> str:
        return f"TrigPoly({list(self._cos)!r}, {list(self._sin)!r}, field={self._field!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self._cos[0]:
            parts.append(f"{self._cos[0]}")
        for k in range(1, len(self._cos)):
            a = self._cos[k]
            b = self._sin[k - 1]
            if a:
                parts.append(f"{a}*cos({k}t)" if k > 1 else f"{a}*cos(t)")
            if b:
                parts.append(f"{b}*sin({k}t)" if k > 1 else f"{b}*sin(t)")
        return " + ".join(parts).replace("+ -", "- ")


class LaurentPoly:
    """Laurent polynomial sum_{k=-n..n} c_k z^k on the unit circle z = e^{it}.

    Exact-field coefficients are :class:`GaussianRational`; float-field
    coefficients are Python complex numbers.
    """

    __slots__ = ("_coeffs", "_order", "_field")

    def __init__(self, coeffs: Sequence, order: int, field: str):
        coeffs = tuple(coeffs)
        if coeffs and len(coeffs) != 2 * order + 1:
            raise ValueError("coefficient count must be 2*order + 1")
        self._coeffs = coeffs
        self._order = order if coeffs else 0
        self._field = field

    @property
    def order(self) -> int:
        return self._order

    @property
    def field(self) -> str:
        return self._field

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, k: int):
        """c_k, zero outside [-order, order]."""
        if not self._coeffs or abs(k) > self._order:
            return GR_ZERO if self._field == EXACT else 0j
        return self._coeffs[self._order + k]

    def is_zero(self) -> bool:
        return not self._coeffs or all(not c for c in self._coeffs)

    def z_polynomial(self) -> list:
        """Coefficients of z^order * L(z), ascending in z (degree 2*order)."""
        return list(self._coeffs)

    def to_trig(self) -> TrigPoly:
        """Inverse of :meth:`TrigPoly.to_laurent`; requires conjugate symmetry."""
        if self.is_zero():
            return TrigPoly.zero(self._field)
        n = self._order
        if self._field == EXACT:
            for k in range(n + 1):
                ck = self.coeff(k)
                cmk = self.coeff(-k)
                if cmk != ck.conjugate():
                    raise RepresentabilityError(
                        f"coefficient pair at harmonic {k} is not conjugate-symmetric"
                    )
            cos = [self.coeff(0).re]
            sin = []
            for k in range(1, n + 1):
                ck = self.coeff(k)
                cos.append(2 * ck.re)
                sin.append(-2 * ck.im)
            return TrigPoly(cos, sin, field=EXACT)
        scale = max(abs(c) for c in self._coeffs) or 1.0
        for k in range(n + 1):
            ck = self.coeff(k)
            cmk = self.coeff(-k)
            if abs(cmk - ck.conjugate()) > 1e-9 * scale:
                raise RepresentabilityError(
                    f"coefficient pair at harmonic {k} is not conjugate-symmetric"
                )
        cos = [self.coeff(0).real]
        sin = []
        for k in range(1, n + 1):
            ck = self.coeff(k)
            cos.append(2 * ck.real)
            sin.append(-2 * ck.imag)
        return TrigPoly(cos, sin, field=FLOAT)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self._field == other._field
            and self._order == other._order
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        return f"LaurentPoly({list(self._coeffs)!r}, order={self._order}, field={self._field!r})"


def max_coeff_difference(p: TrigPoly, q: TrigPoly) -> float:
    """Largest absolute difference between aligned coefficients of p and q."""
    n = max(len(p.cos), len(q.cos), 1) - 1
    worst = 0.0
    for k in range(n + 1):
        pa, pb = p.coeff_pair(k)
        qa, qb = q.coeff_pair(k)
        worst = max(worst, abs(float(pa) - float(qa)), abs(float(pb) - float(qb)))
    return worst
