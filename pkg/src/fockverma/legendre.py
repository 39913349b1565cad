"""Exact univariate polynomials, Legendre polynomials and the generating function."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Union

from .linalg import RationalLike, format_fraction, to_fraction


@dataclass(frozen=True)
class UniPoly:
    """Dense polynomial; ``coefficients[k]`` multiplies ``var**k``.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients.
    The variable name is cosmetic and ignored by equality.
    """

    coefficients: tuple[Fraction, ...] = ()
    var: str = field(default="x", compare=False)

    def __post_init__(self) -> None:
        coeffs = [to_fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, c: RationalLike, var: str = "x") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1, var: str = "x") -> "UniPoly":
        return cls((0,) * degree + (coeff,), var)

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coefficients) - 1 if self.coefficients else float("-inf")

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coefficients, var)

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coefficients), len(other.coefficients))
        return UniPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)),
                       self.var)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coefficients), self.var)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", RationalLike]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            s = to_fraction(other)
            return UniPoly(tuple(c * s for c in self.coefficients), self.var)
        if self.is_zero() or other.is_zero():
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return UniPoly(tuple(out), self.var)

    def __rmul__(self, other: RationalLike) -> "UniPoly":
        return self * other

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(k * c for k, c in enumerate(self.coefficients) if k), self.var)

    def shift_up(self, k: int = 1) -> "UniPoly":
        """Multiply by var**k."""
        if self.is_zero():
            return self
        return UniPoly((Fraction(0),) * k + self.coefficients, self.var)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = format_fraction(mag)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                body = mono if mag == 1 else f"{format_fraction(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


X = UniPoly((0, 1), "x")


@lru_cache(maxsize=None)
def legendre(n: int) -> UniPoly:
    """P_n from (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return UniPoly((1,))
    if n == 1:
        return UniPoly((0, 1))
    k = n - 1
    p_k, p_km1 = legendre(k), legendre(k - 1)
    return (p_k.shift_up() * (2 * k + 1) - p_km1 * k) * Fraction(1, k + 1)


def legendre_norm(n: int) -> Fraction:
    """h_n = 2/(2n+1)."""
    return Fraction(2, 2 * n + 1)


def legendre_operator(p: UniPoly) -> UniPoly:
    """(1 - x^2) p'' - 2x p'."""
    d1 = p.derivative()
    d2 = d1.derivative()
    return d2 - d2.shift_up(2) - d1.shift_up() * 2


def legendre_operator_power(p: UniPoly, r: int) -> UniPoly:
    for _ in range(r):
        p = legendre_operator(p)
    return p


def poly_inner(p: UniPoly, q: UniPoly) -> Fraction:
    """Integral of p*q over [-1, 1]."""
    prod = p * q
    return sum((c * Fraction(2, k + 1) for k, c in enumerate(prod.coefficients) if k % 2 == 0),
               Fraction(0))


@dataclass(frozen=True)
class TruncatedSeries:
    """Sum_{n<=order} coefficients[n](x) z^n."""

    order: int
    coefficients: tuple[UniPoly, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.order + 1:
            raise ValueError("need exactly order+1 coefficient polynomials")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, tuple(UniPoly() for _ in range(order + 1)))

    def map_coefficients(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(fn(n, p) for n, p in enumerate(self.coefficients)))

    def __getitem__(self, n: int) -> UniPoly:
        return self.coefficients[n]


def genfun_truncated(N: int) -> TruncatedSeries:
    """Order-N truncation of (1 - 2xz + z^2)^(-1/2) = sum P_n(x) z^n."""
    if N < 0:
        raise ValueError("order must be non-negative")
    return TruncatedSeries(N, tuple(legendre(n) for n in range(N + 1)))


def _binom_neg_half(k: int) -> Fraction:
    # binom(-1/2, k) = (-1)^k (2k)! / (4^k (k!)^2)
    return Fraction((-1) ** k * comb(2 * k, k), 4 ** k)


def genfun_series_expansion(N: int) -> TruncatedSeries:
    """Expand (1 - 2xz + z^2)^(-1/2) directly by the binomial series.

    With u = z^2 - 2xz the z^n coefficient collects
    binom(-1/2, k) * C(k, n-k) * (-2x)^(2k-n) for ceil(n/2) <= k <= n.
    Independent of the three-term recurrence used by :func:`legendre`.
    """
    coeffs = []
    for n in range(N + 1):
        p = UniPoly()
        for k in range((n + 1) // 2, n + 1):
            deg = 2 * k - n
            c = _binom_neg_half(k) * comb(k, n - k) * (-2) ** deg
            p = p + UniPoly.monomial(deg, c)
        coeffs.append(p)
    return TruncatedSeries(N, tuple(coeffs))


def euler_operator(s: TruncatedSeries, r: int = 1) -> TruncatedSeries:
    """Apply (z^2 d_z^2 + 2z d_z)^r, which scales z^n by (n(n+1))^r."""
    if r < 1:
        raise ValueError("r must be positive")
    return s.map_coefficients(lambda n, p: p * (n * (n + 1)) ** r)


def genfun_identity_check(N: int, r: int) -> bool:
    """L^r G == (-1)^r E^r G coefficient by coefficient up to z^N."""
    g = genfun_truncated(N)
    lhs = g.map_coefficients(lambda _, p: legendre_operator_power(p, r))
    rhs = euler_operator(g, r).map_coefficients(lambda _, p: p * (-1) ** r)
    return lhs == rhs


def from_coefficients(values: Iterable[RationalLike], var: str = "x") -> UniPoly:
    return UniPoly(tuple(values), var)

