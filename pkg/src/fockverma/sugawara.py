"""Sugawara zero mode L_0, the Casimir-type element Omega = -L_0(L_0 + 1), and its powers."""

from __future__ import annotations

from fractions import Fraction

from .cocycle import CocycleTable, TruncationError, WeightFunctional, hyperelliptic_omega1
from .fock import ModuleVector, annihilate, create


def _prefactor(table: CocycleTable, phi: WeightFunctional) -> Fraction:
    w = hyperelliptic_omega1(table)
    return 1 / (w * phi.c_value)


def apply_L0(v: ModuleVector, table: CocycleTable, phi: WeightFunctional) -> ModuleVector:
    """(1/(omega1 phi(c))) sum_k b_{-k} b_k applied to ``v``.

    The sum stops at the top level present in ``v``; every b_k with larger k
    kills every monomial.
    """
    scale = _prefactor(table, phi)
    top = v.max_level()
    if top > table.max_mode:
        raise TruncationError(f"vector reaches level {top} but table stops at mode "
                              f"{table.max_mode}")
    out = ModuleVector()
    for k in range(1, top + 1):
        out = out + create(annihilate(v, k, 1, table, phi), k, 1)
    return out * scale


def apply_Omega(v: ModuleVector, table: CocycleTable, phi: WeightFunctional) -> ModuleVector:
    l0v = apply_L0(v, table, phi)
    return -apply_L0(l0v + v, table, phi)


def apply_Omega_power(v: ModuleVector, r: int, table: CocycleTable,
                      phi: WeightFunctional) -> ModuleVector:
    if r < 1:
        raise ValueError("r must be positive")
    for _ in range(r):
        v = apply_Omega(v, table, phi)
    return v


def omega_eigenvalue(n: int, r: int = 1) -> Fraction:
    """(-n(n+1))**r, the scalar by which Omega**r acts on level n."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    return Fraction(-n * (n + 1)) ** r
