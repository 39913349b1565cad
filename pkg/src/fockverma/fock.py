"""The phi-Verma module in its Fock realisation and its Shapovalov form.

Vectors are finite rational combinations of PBW monomials
b_{-n_1}^(j_1) ... b_{-n_k}^(j_k) v_phi, keyed by :class:`Partition`.
Negative modes commute, so creation just adds a part. Positive modes act by
contracting against one part at a time through the cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .cocycle import CocycleTable, WeightFunctional
from .linalg import (
    Matrix,
    RationalLike,
    determinant,
    format_fraction,
    nullspace,
    to_fraction,
)
from .partitions import Partition, format_partition, partitions_of


class ModuleVector:
    """Immutable finitely supported map Partition -> Fraction without zero entries."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Partition, RationalLike]] = None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            for lam, c in terms.items():
                c = to_fraction(c)
                if c:
                    clean[lam] = c
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: dict[Partition, Fraction]) -> "ModuleVector":
        v = cls.__new__(cls)
        v._terms = terms
        return v

    @classmethod
    def basis(cls, lam: Partition) -> "ModuleVector":
        return cls._from_clean({lam: Fraction(1)})

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Partition, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    def coefficient(self, lam: Partition) -> Fraction:
        return self._terms.get(lam, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def levels(self) -> set[int]:
        return {lam.level for lam in self._terms}

    def max_level(self) -> int:
        return max((lam.level for lam in self._terms), default=0)

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ModuleVector):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self._terms)
        for lam, c in other._terms.items():
            s = out.get(lam, 0) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return ModuleVector._from_clean(out)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector._from_clean({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def __mul__(self, scalar: RationalLike) -> "ModuleVector":
        s = to_fraction(scalar)
        if not s:
            return ModuleVector()
        return ModuleVector._from_clean({lam: c * s for lam, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "ModuleVector(0)"
        body = ", ".join(f"[{format_partition(lam)}]: {format_fraction(c)}"
                         for lam, c in self.items())
        return f"ModuleVector({{{body}}})"


def vacuum(sector_count: int = 1) -> ModuleVector:
    empty = Partition((), () if sector_count > 1 else None)
    return ModuleVector.basis(empty)


def basis_vector(lam: Partition) -> ModuleVector:
    return ModuleVector.basis(lam)


def linear_combination(coeffs: Iterable[tuple[Partition, RationalLike]]) -> ModuleVector:
    out = ModuleVector()
    for lam, c in coeffs:
        out = out + ModuleVector.basis(lam) * c
    return out


def create(v: ModuleVector, k: int, j: int = 1) -> ModuleVector:
    """Left multiplication by b_{-k}^(j)."""
    if k < 1:
        raise ValueError(f"creation mode must be positive, got {k}")
    out: dict[Partition, Fraction] = {}
    for lam, c in v._terms.items():
        mu = lam.add_part(k, j)
        out[mu] = out.get(mu, 0) + c
    return ModuleVector._from_clean(out)


def _contract(lam: Partition, k: int, i: int, table: CocycleTable,
              c_value: Fraction) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for idx, (part, sector) in enumerate(lam.pairs()):
        w = table.entry(i, sector, k, -part)
        if w:
            mu = lam.remove_index(idx)
            out[mu] = out.get(mu, 0) + w * c_value
    return out


def annihilate(v: ModuleVector, k: int, i: int, table: CocycleTable,
               phi: WeightFunctional) -> ModuleVector:
    """Apply b_k^(i), k >= 1, by Leibniz contraction with each part."""
    if k < 1:
        raise ValueError(f"annihilation mode must be positive, got {k}")
    out: dict[Partition, Fraction] = {}
    for lam, c in v._terms.items():
        for mu, w in _contract(lam, k, i, table, phi.c_value).items():
            s = out.get(mu, 0) + c * w
            if s:
                out[mu] = s
            else:
                out.pop(mu, None)
    return ModuleVector._from_clean(out)


def apply_word(v: ModuleVector, word: Sequence[tuple[int, int]], table: CocycleTable,
               phi: WeightFunctional) -> ModuleVector:
    """Apply b_{m_1}^(j_1) ... b_{m_r}^(j_r) to ``v``, rightmost letter first.

    Zero modes act as the scalar phi(b_0^(j)).
    """
    for mode, sector in reversed(list(word)):
        if mode < 0:
            v = create(v, -mode, sector)
        elif mode > 0:
            v = annihilate(v, mode, sector, table, phi)
        else:
            v = v * phi.b0(sector)
    return v


class _FormCache:
    """Memoised basis pairings S(lam, mu) for one (table, phi)."""

    def __init__(self, table: CocycleTable, phi: WeightFunctional):
        self.table = table
        self.phi = phi
        self.graded = table.band_width == 0
        self._memo: dict[tuple[Partition, Partition], Fraction] = {}

    def pair(self, lam: Partition, mu: Partition) -> Fraction:
        if self.graded and lam.level != mu.level:
            return Fraction(0)
        key = (lam, mu)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not lam.parts:
            value = Fraction(1) if not mu.parts else Fraction(0)
        else:
            # S(b_{-l} x vac, w) = S(x vac, b_l w)
            part, sector = lam.pairs()[0]
            rest = lam.remove_index(0)
            value = Fraction(0)
            for nu, w in _contract(mu, part, sector, self.table, self.phi.c_value).items():
                value += w * self.pair(rest, nu)
        self._memo[key] = value
        return value


@lru_cache(maxsize=64)
def _form(table: CocycleTable, phi: WeightFunctional) -> _FormCache:
    return _FormCache(table, phi)


def shapovalov(v: ModuleVector, w: ModuleVector, table: CocycleTable,
               phi: WeightFunctional) -> Fraction:
    """Contravariant form S(v, w), normalised by S(v_phi, v_phi) = 1."""
    form = _form(table, phi)
    total = Fraction(0)
    for lam, a in v._terms.items():
        for mu, b in w._terms.items():
            s = form.pair(lam, mu)
            if s:
                total += a * b * s
    return total


@dataclass(frozen=True)
class GramMatrix:
    level: int
    basis: tuple[Partition, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def is_diagonal(self) -> bool:
        n = len(self.basis)
        return all(self.entries[i][j] == 0 for i in range(n) for j in range(n) if i != j)

    def diagonal(self) -> list[Fraction]:
        return [self.entries[i][i] for i in range(len(self.basis))]

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "basis": [format_partition(lam) for lam in self.basis],
            "entries": [[format_fraction(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "GramMatrix":
        from .partitions import parse_partition

        basis = tuple(parse_partition(s) for s in doc["basis"])
        entries = tuple(tuple(to_fraction(x) for x in row) for row in doc["entries"])
        return cls(int(doc["level"]), basis, entries)


def level_basis(n: int, table: CocycleTable) -> tuple[Partition, ...]:
    return partitions_of(n, table.sector_count)


def gram_matrix(n: int, table: CocycleTable, phi: WeightFunctional) -> GramMatrix:
    if n < 0:
        raise ValueError("level must be non-negative")
    basis = level_basis(n, table)
    form = _form(table, phi)
    entries = tuple(tuple(form.pair(lam, mu) for mu in basis) for lam in basis)
    return GramMatrix(n, basis, entries)


def gram_det(n: int, table: CocycleTable, phi: WeightFunctional) -> Fraction:
    return determinant(gram_matrix(n, table, phi).entries)


@dataclass(frozen=True)
class AdmissibilityResult:
    admissible: bool
    checked_up_to: int
    degenerate_level: Optional[int] = None
    kernel_vector: Optional[ModuleVector] = None
    determinants: tuple[Fraction, ...] = ()

    def __bool__(self) -> bool:
        return self.admissible


def is_p_admissible_up_to(N: int, table: CocycleTable,
                          phi: WeightFunctional) -> AdmissibilityResult:
    """Check det G_n != 0 for 1 <= n <= N; on failure return a kernel witness."""
    dets = []
    for n in range(1, N + 1):
        g = gram_matrix(n, table, phi)
        d = determinant(g.entries)
        dets.append(d)
        if d == 0:
            kernel = nullspace(g.entries)[0]
            witness = ModuleVector(dict(zip(g.basis, kernel)))
            return AdmissibilityResult(False, N, n, witness, tuple(dets))
    return AdmissibilityResult(True, N, None, None, tuple(dets))


def level_decompose(v: ModuleVector) -> dict[int, ModuleVector]:
    out: dict[int, dict[Partition, Fraction]] = {}
    for lam, c in v._terms.items():
        out.setdefault(lam.level, {})[lam] = c
    return {n: ModuleVector._from_clean(t) for n, t in sorted(out.items())}


def homogeneous_component(v: ModuleVector, n: int) -> ModuleVector:
    return ModuleVector._from_clean({lam: c for lam, c in v._terms.items() if lam.level == n})
