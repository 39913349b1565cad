"""Exact rational linear algebra on lists of lists of ``Fraction``."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Optional, Sequence, Union

Matrix = list[list[Fraction]]
RationalLike = Union[int, str, Fraction]


class SingularMatrixError(ArithmeticError):
    pass


def to_fraction(value: RationalLike) -> Fraction:
    """Parse ints, Fractions and strings such as ``"3/2"`` or ``"-4"``.

    Floats are refused: every quantity in this package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_fraction(x: Fraction) -> str:
    """``p/q`` string, with integers rendered without a denominator."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def copy_matrix(a: Sequence[Sequence[RationalLike]]) -> Matrix:
    return [[Fraction(v) for v in row] for row in a]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def determinant(a: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Bareiss fraction-free elimination.

    Denominators are cleared first so every intermediate stays an integer and
    each Bareiss division is exact.
    """
    n = len(a)
    if n == 0:
        return Fraction(1)
    m = copy_matrix(a)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    scale = Fraction(1)
    rows: list[list[int]] = []
    for row in m:
        den = lcm(*(v.denominator for v in row))
        scale /= den
        rows.append([int(v * den) for v in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * Fraction(rows[n - 1][n - 1]) * scale


def row_reduce(a: Sequence[Sequence[RationalLike]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = copy_matrix(a)
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(a: Sequence[Sequence[RationalLike]]) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    if not a:
        return []
    cols = len(a[0])
    rref, pivots = row_reduce(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence[RationalLike]], b: Sequence[RationalLike]) -> list[Fraction]:
    """Unique solution of a square system; raises SingularMatrixError otherwise."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve needs a square system")
    aug = [list(row) + [bv] for row, bv in zip(copy_matrix(a), b)]
    rref, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise SingularMatrixError("system matrix is singular")
    return [rref[i][n] for i in range(n)]


def mat_vec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def is_symmetric(a: Sequence[Sequence[Fraction]]) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def first_asymmetry(a: Sequence[Sequence[Fraction]]) -> Optional[tuple[int, int]]:
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                return i, j
    return None
