"""Maps from the Fock module to polynomials, and Fock orthogonal representatives.

The orthogonal representative at level n is stored square-root free as a
rational vector Q_n with coefficient sum 1 together with a rational scale s_n
such that P~_n = sqrt(s_n) Q_n and S(P~_n, P~_n) = h_n = 2/(2n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cocycle import CocycleTable, WeightFunctional
from .fock import ModuleVector, gram_matrix, shapovalov
from .legendre import UniPoly, legendre, legendre_norm, legendre_operator_power
from .linalg import SingularMatrixError, solve, transpose
from .sugawara import apply_Omega_power


class DegenerateLevelError(ArithmeticError):
    def __init__(self, level: int, reason: str):
        self.level = level
        super().__init__(f"level {level}: {reason}")


def _require_single_sector(v: ModuleVector) -> None:
    for lam, _ in v.items():
        if lam.sectored:
            raise ValueError("the polynomial quotient is defined on the single-sector module")


def quotient_psi(v: ModuleVector) -> UniPoly:
    """Send every level-n PBW monomial to a**n and extend linearly."""
    _require_single_sector(v)
    coeffs: dict[int, Fraction] = {}
    for lam, c in v.items():
        coeffs[lam.level] = coeffs.get(lam.level, 0) + c
    top = max(coeffs, default=-1)
    return UniPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)), "a")


def legendre_identify(p: UniPoly) -> UniPoly:
    """Linear map a**n -> P_n(x)."""
    out = UniPoly((), "x")
    for n, c in enumerate(p.coefficients):
        if c:
            out = out + legendre(n) * c
    return out


def phi_map(v: ModuleVector) -> UniPoly:
    """The composite Fock module -> C[x]."""
    return legendre_identify(quotient_psi(v))


def intertwining_check(v: ModuleVector, r: int, table: CocycleTable,
                       phi: WeightFunctional) -> bool:
    lhs = phi_map(apply_Omega_power(v, r, table, phi))
    rhs = legendre_operator_power(phi_map(v), r)
    return lhs == rhs


@dataclass(frozen=True)
class OrthogonalRepresentative:
    level: int
    q_vector: ModuleVector
    norm_sq_scale: Fraction
    self_pairing: Fraction

    @property
    def h(self) -> Fraction:
        return legendre_norm(self.level)

    def coefficients(self) -> list[tuple]:
        return list(self.q_vector.items())


def orthogonal_representative(n: int, table: CocycleTable,
                              phi: WeightFunctional) -> OrthogonalRepresentative:
    """Level-n vector S-orthogonal to ker(psi), coefficient sum 1.

    Orthogonality to every coefficient-sum-zero vector forces G^T q to be a
    multiple of the all-ones vector, so q is G^{-T} 1 rescaled.
    """
    g = gram_matrix(n, table, phi)
    if any(lam.sectored for lam in g.basis):
        raise ValueError("orthogonal representatives need a single-sector table")
    ones = [Fraction(1)] * g.dimension
    try:
        y = solve(transpose(g.entries), ones)
    except SingularMatrixError:
        raise DegenerateLevelError(n, "Gram matrix is singular") from None
    total = sum(y, Fraction(0))
    if total == 0:
        raise DegenerateLevelError(n, "orthogonal complement of ker(psi) lies in ker(psi)")
    q = ModuleVector({lam: yi / total for lam, yi in zip(g.basis, y)})
    s = shapovalov(q, q, table, phi)
    if s == 0:
        raise DegenerateLevelError(n, "representative is isotropic")
    return OrthogonalRepresentative(n, q, legendre_norm(n) / s, s)


@dataclass(frozen=True)
class PTildeGram:
    levels: tuple[int, ...]
    entries: tuple[tuple[Fraction, ...], ...]
    representatives: tuple[OrthogonalRepresentative, ...]

    def diagonal(self) -> list[Fraction]:
        return [self.entries[i][i] for i in range(len(self.levels))]

    def off_diagonal_zero(self) -> bool:
        n = len(self.levels)
        return all(self.entries[i][j] == 0 for i in range(n) for j in range(n) if i != j)


def ptilde_gram(N: int, table: CocycleTable, phi: WeightFunctional,
                reps: Optional[list[OrthogonalRepresentative]] = None) -> PTildeGram:
    """S(P~_m, P~_n) for m, n <= N.

    Off-diagonal entries are reported as S(Q_m, Q_n), which must vanish, so
    sqrt(s_m s_n) never has to be formed. Diagonal entries are s_n S(Q_n, Q_n).
    """
    if reps is None:
        reps = [orthogonal_representative(n, table, phi) for n in range(N + 1)]
    rows = []
    for a in reps:
        row = []
        for b in reps:
            s = shapovalov(a.q_vector, b.q_vector, table, phi)
            row.append(a.norm_sq_scale * s if a.level == b.level else s)
        rows.append(tuple(row))
    return PTildeGram(tuple(r.level for r in reps), tuple(rows), tuple(reps))


def _proportional(v: ModuleVector, w: ModuleVector) -> bool:
    if set(v.terms) != set(w.terms):
        return False
    items = list(v.terms)
    if not items:
        return True
    ref = items[0]
    return all(v.coefficient(lam) * w.coefficient(ref) == w.coefficient(lam) * v.coefficient(ref)
               for lam in items)


def charge_normalised(v: ModuleVector, c_value: Fraction) -> ModuleVector:
    """Multiply each monomial by phi(c)**length, undoing the central-charge weighting.

    Every contraction in the form carries one factor of phi(c), so rescaling
    phi(c) by t rescales the Gram entry of a length-l monomial by t**l.
    """
    return ModuleVector({lam: c * c_value ** lam.length for lam, c in v.items()})


def canonicality_compare(phi1: WeightFunctional, phi2: WeightFunctional, N: int,
                         table: CocycleTable) -> bool:
    """Representatives from two weights agree up to the weight rescaling and carry the same norms.

    Coefficients are compared after :func:`charge_normalised`; for equal
    central charges this is plain proportionality.
    """
    g1 = ptilde_gram(N, table, phi1)
    g2 = ptilde_gram(N, table, phi2)
    for r1, r2 in zip(g1.representatives, g2.representatives):
        if not _proportional(charge_normalised(r1.q_vector, phi1.c_value),
                             charge_normalised(r2.q_vector, phi2.c_value)):
            return False
    expected = [legendre_norm(n) for n in range(N + 1)]
    return (g1.off_diagonal_zero() and g2.off_diagonal_zero()
            and g1.diagonal() == expected and g2.diagonal() == expected)
