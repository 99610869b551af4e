"""Exact rational linear algebra: solving and nullspaces, no floats anywhere.

The nullspace routine performs fraction-free (Bareiss) elimination on an
integer-scaled copy of the matrix, choosing pivots of largest magnitude, so
no rank decision ever depends on floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def solve_exact(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """One exact solution of A x = b, or None if the system is inconsistent.

    Free variables, if any, are set to zero.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if len(rhs) != m:
        raise ValueError("right-hand side length does not match row count")
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        best_row = None
        best_mag = None
        for i in range(r, m):
            v = aug[i][c]
            if v:
                mag = abs(v.numerator)
                if best_mag is None or mag > best_mag:
                    best_mag, best_row = mag, i
        if best_row is None:
            continue
        aug[r], aug[best_row] = aug[best_row], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivot_cols):
        x[c] = aug[i][n]
    return x


def _primitive(vec: list[Fraction]) -> list[Fraction]:
    """Clear denominators, divide by content, make the first nonzero positive."""
    den = 1
    for v in vec:
        den = _lcm(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return [Fraction(v) for v in ints]


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right nullspace {x : A x = 0}.

    Fraction-free Bareiss elimination on the integer-scaled matrix; basis
    vectors are returned as primitive integer vectors (as Fractions) with
    positive leading entry.  An empty list means A has full column rank.
    """
    m = len(rows)
    n = ncols if ncols is not None else (len(rows[0]) if m else 0)
    if n == 0:
        return []
    if m == 0:
        return [[Fraction(1 if i == j else 0) for i in range(n)] for j in range(n)]
    mat: list[list[int]] = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        if len(fr) != n:
            raise ValueError("ragged matrix")
        den = 1
        for v in fr:
            den = _lcm(den, v.denominator)
        mat.append([int(v * den) for v in fr])

    prev = 1
    r = 0
    pivot_cols: list[int] = []
    for c in range(n):
        best_row = None
        best_mag = 0
        for i in range(r, m):
            mag = abs(mat[i][c])
            if mag > best_mag:
                best_mag, best_row = mag, i
        if best_row is None:
            continue
        mat[r], mat[best_row] = mat[best_row], mat[r]
        p = mat[r][c]
        for i in range(r + 1, m):
            f = mat[i][c]
            row_i = mat[i]
            row_r = mat[r]
            for j in range(c, n):
                num = p * row_i[j] - f * row_r[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
        prev = p
        pivot_cols.append(c)
        r += 1
        if r == m:
            break

    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis: list[list[Fraction]] = []
    for fc in free_cols:
        x = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for i in reversed(range(len(pivot_cols))):
            c = pivot_cols[i]
            s = Fraction(0)
            for j in range(c + 1, n):
                if mat[i][j] and x[j]:
                    s += mat[i][j] * x[j]
            x[c] = -s / mat[i][c]
        basis.append(_primitive(x))
    return basis


def rank(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> int:
    """Exact rank (column count minus nullspace dimension)."""
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return n - len(nullspace(rows, n))
