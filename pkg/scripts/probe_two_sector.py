"""Probe where a two-sector band-0 cocycle stops being admissible.

The table has diagonal brackets psi^(ii)_{k,-k} = k and a single cross-sector
coupling psi^(12)_{2,-2} = psi^(21)_{2,-2} = a. Sweeping a over a rational grid
and reporting the first degenerate level (with a kernel witness) shows the
level-2 determinant 4 - a^2 times the untouched blocks vanishing at a = +-2.

    python3 scripts/probe_two_sector.py --a-min -3 --a-max 3 --steps 12
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from fockverma import (
    WeightFunctional,
    format_partition,
    is_p_admissible_up_to,
    table_from_records,
)
from fockverma.linalg import format_fraction


@dataclass
class ProbeConfig:
    a_min: Fraction = Fraction(-3)
    a_max: Fraction = Fraction(3)
    steps: int = 12
    level_max: int = 4
    phi_c: Fraction = Fraction(1)


def two_sector_table(a: Fraction, max_mode: int):
    records = [(i, i, k, -k, k) for i in (1, 2) for k in range(1, max_mode + 1)]
    if a:
        records += [(1, 2, 2, -2, a), (2, 1, 2, -2, a)]
    return table_from_records(2, records, band_width=0, max_mode=max_mode)


def probe(cfg: ProbeConfig) -> list[tuple[Fraction, str]]:
    phi = WeightFunctional.simple(c=cfg.phi_c, sectors=2)
    rows = []
    step = (cfg.a_max - cfg.a_min) / cfg.steps
    for s in range(cfg.steps + 1):
        a = cfg.a_min + s * step
        res = is_p_admissible_up_to(cfg.level_max, two_sector_table(a, cfg.level_max), phi)
        if res.admissible:
            verdict = f"non-degenerate up to {cfg.level_max}"
        else:
            kernel = " ".join(f"{format_partition(lam)}:{format_fraction(c)}"
                              for lam, c in res.kernel_vector.items())
            verdict = f"degenerate at level {res.degenerate_level}  kernel {kernel}"
        dets = ", ".join(format_fraction(d) for d in res.determinants)
        rows.append((a, verdict))
        print(f"a = {format_fraction(a):>6}  dets [{dets}]  {verdict}")
    return rows


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--a-min", type=Fraction, default=ProbeConfig.a_min)
    p.add_argument("--a-max", type=Fraction, default=ProbeConfig.a_max)
    p.add_argument("--steps", type=int, default=ProbeConfig.steps)
    p.add_argument("--level-max", type=int, default=ProbeConfig.level_max)
    p.add_argument("--phi-c", type=Fraction, default=ProbeConfig.phi_c)
    probe(ProbeConfig(**vars(p.parse_args())))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
