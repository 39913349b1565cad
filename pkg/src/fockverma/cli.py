"""Command line entry point: ``fockverma <subcommand> [flags]``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import prod
from pathlib import Path
from typing import Optional, Sequence

from .cocycle import (
    CocycleFormatError,
    CocycleTable,
    NotHyperellipticError,
    TruncationError,
    WeightFunctional,
    hyperelliptic_cocycle,
    hyperelliptic_omega1,
    load_cocycle,
)
from .fock import (
    basis_vector,
    gram_matrix,
    is_p_admissible_up_to,
    level_basis,
    shapovalov,
)
from .intertwiner import (
    DegenerateLevelError,
    canonicality_compare,
    intertwining_check,
    orthogonal_representative,
    ptilde_gram,
)
from .legendre import (
    genfun_identity_check,
    genfun_series_expansion,
    genfun_truncated,
    legendre,
    legendre_norm,
    legendre_operator,
    poly_inner,
)
from .linalg import determinant, first_asymmetry, format_fraction as ff, to_fraction
from .partitions import format_partition, z_factor
from .report import RunReport
from .sugawara import apply_L0, apply_Omega, apply_Omega_power, omega_eigenvalue

SUITES = ("L0", "omega", "intertwine", "tower", "genfun", "legendre", "canonical")


def _weight(phi_c: Fraction, phi_b0: Sequence[Fraction], sectors: int) -> WeightFunctional:
    b0 = list(phi_b0) or [Fraction(1)]
    if len(b0) == 1:
        b0 = b0 * sectors
    if len(b0) != sectors:
        raise ValueError(f"expected {sectors} phi(b0) values, got {len(b0)}")
    return WeightFunctional(tuple(b0), phi_c)


def _closed_form_diag(lam, t: Fraction) -> Fraction:
    return z_factor(lam) * t ** lam.length


def cmd_gram_table(level_max: int, omega1=1, phi_c=1, phi_b0=1,
                   table: Optional[CocycleTable] = None) -> RunReport:
    omega1, phi_c = to_fraction(omega1), to_fraction(phi_c)
    b0 = [to_fraction(phi_b0)] if not isinstance(phi_b0, (list, tuple)) else \
        [to_fraction(b) for b in phi_b0]
    if level_max < 0:
        raise ValueError("level_max must be non-negative")
    if table is None:
        table = hyperelliptic_cocycle(omega1, max(level_max, 1))
    phi = _weight(phi_c, b0, table.sector_count)
    report = RunReport("gram-table", {
        "level_max": level_max, "omega1": ff(omega1), "phi_c": ff(phi_c),
        "phi_b0": [ff(b) for b in phi.b0_values]})

    pbw = []
    for n in range(level_max + 1):
        g = gram_matrix(n, table, phi)
        pbw.append(g.to_json())
        bad = first_asymmetry(g.entries)
        report.check(f"pbw-symmetric-level-{n}", bad is None,
                     None if bad is None else f"level={n} entry={bad}")
    report.outputs["pbw"] = pbw

    if table.sector_count == 1:
        pg = ptilde_gram(level_max, table, phi)
        report.outputs["ptilde"] = {
            "levels": list(pg.levels),
            "entries": [[ff(x) for x in row] for row in pg.entries],
        }
        report.check("ptilde-offdiagonal-zero", pg.off_diagonal_zero())
        for n, d in zip(pg.levels, pg.diagonal()):
            report.check(f"ptilde-norm-level-{n}", d == legendre_norm(n),
                         None if d == legendre_norm(n) else f"level={n} got={ff(d)}")
    return report


def cmd_det_gram(level_max: int, omega1=1, phi_c=1, phi_b0=1,
                 table: Optional[CocycleTable] = None) -> RunReport:
    omega1, phi_c = to_fraction(omega1), to_fraction(phi_c)
    if table is None:
        table = hyperelliptic_cocycle(omega1, max(level_max, 1))
    phi = _weight(phi_c, [to_fraction(phi_b0)], table.sector_count)
    report = RunReport("det-gram", {"level_max": level_max, "omega1": ff(omega1),
                                    "phi_c": ff(phi_c)})
    try:
        t = hyperelliptic_omega1(table) * phi.c_value
    except NotHyperellipticError:
        t = None
    rows = []
    for n in range(level_max + 1):
        d = determinant(gram_matrix(n, table, phi).entries)
        row = {"level": n, "det": ff(d)}
        if t is not None:
            expected = prod((_closed_form_diag(lam, t) for lam in level_basis(n, table)),
                            start=Fraction(1))
            row["closed_form"] = ff(expected)
            report.check(f"det-closed-form-level-{n}", d == expected,
                         None if d == expected else f"level={n}")
        rows.append(row)
    report.outputs["determinants"] = rows
    return report


def _verify_L0(report, table, phi, level_max, r_max):
    for n in range(level_max + 1):
        for lam in level_basis(n, table):
            v = basis_vector(lam)
            ok = apply_L0(v, table, phi) == v * n
            report.check(f"L0 level={n} [{format_partition(lam)}]", ok,
                         None if ok else f"partition={format_partition(lam)} level={n}")


def _verify_omega(report, table, phi, level_max, r_max):
    for n in range(level_max + 1):
        ev = omega_eigenvalue(n, 1)
        for lam in level_basis(n, table):
            v = basis_vector(lam)
            ok = apply_Omega(v, table, phi) == v * ev
            report.check(f"omega level={n} [{format_partition(lam)}] eigenvalue={ff(ev)}", ok,
                         None if ok else f"partition={format_partition(lam)} level={n}")


def _verify_intertwine(report, table, phi, level_max, r_max):
    for r in range(1, r_max + 1):
        for n in range(level_max + 1):
            for lam in level_basis(n, table):
                ok = intertwining_check(basis_vector(lam), r, table, phi)
                report.check(f"intertwine r={r} [{format_partition(lam)}]", ok,
                             None if ok else f"partition={format_partition(lam)} level={n} r={r}")


def _verify_tower(report, table, phi, level_max, r_max):
    for r in range(1, r_max + 1):
        for n in range(level_max + 1):
            ev = omega_eigenvalue(n, r)
            for lam in level_basis(n, table):
                v = basis_vector(lam)
                ok = apply_Omega_power(v, r, table, phi) == v * ev
                ok = ok and intertwining_check(v, r, table, phi)
                report.check(f"tower r={r} [{format_partition(lam)}] eigenvalue={ff(ev)}", ok,
                             None if ok else f"partition={format_partition(lam)} level={n} r={r}")


def _verify_genfun(report, table, phi, level_max, r_max):
    ok = genfun_series_expansion(level_max).coefficients == genfun_truncated(level_max).coefficients
    report.check(f"genfun binomial expansion order={level_max}", ok)
    for r in range(1, r_max + 1):
        ok = genfun_identity_check(level_max, r)
        report.check(f"genfun L^r G = (-E)^r G order={level_max} r={r}", ok,
                     None if ok else f"r={r}")


def _verify_legendre(report, table, phi, level_max, r_max):
    for n in range(level_max + 1):
        p = legendre(n)
        ok = legendre_operator(p) == p * (-n * (n + 1))
        report.check(f"legendre eigen n={n}", ok, None if ok else f"n={n}")
        report.check(f"legendre P_{n}(1) = 1", p(1) == 1, None if p(1) == 1 else f"n={n}")
        for m in range(level_max + 1):
            got = poly_inner(legendre(m), p)
            want = legendre_norm(n) if m == n else 0
            report.check(f"legendre inner m={m} n={n}", got == want,
                         None if got == want else f"m={m} n={n} got={ff(got)}")


def _verify_canonical(report, table, phi, level_max, r_max):
    base_c = phi.c_value
    weights = [WeightFunctional((b0,), c) for b0 in (Fraction(1, 2), Fraction(3, 2))
               for c in (base_c, 2 * base_c)]
    ref = weights[0]
    for other in weights[1:]:
        ok = canonicality_compare(ref, other, level_max, table)
        report.check(
            f"canonical phi(b0)={ff(ref.b0(1))},phi(c)={ff(ref.c_value)} vs "
            f"phi(b0)={ff(other.b0(1))},phi(c)={ff(other.c_value)}", ok,
            None if ok else f"N={level_max}")


_SUITE_FUNCS = {
    "L0": _verify_L0, "omega": _verify_omega, "intertwine": _verify_intertwine,
    "tower": _verify_tower, "genfun": _verify_genfun, "legendre": _verify_legendre,
    "canonical": _verify_canonical,
}


def cmd_verify(suite: str, level_max: int = 8, r_max: int = 3, omega1=1, phi_c=1,
               phi_b0=1) -> RunReport:
    if suite not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    omega1, phi_c = to_fraction(omega1), to_fraction(phi_c)
    table = hyperelliptic_cocycle(omega1, max(level_max, 1))
    phi = WeightFunctional((to_fraction(phi_b0),), phi_c)
    report = RunReport("verify", {"suite": suite, "level_max": level_max, "r_max": r_max,
                                  "omega1": ff(omega1), "phi_c": ff(phi_c)})
    _SUITE_FUNCS[suite](report, table, phi, level_max, r_max)
    report.outputs["checked"] = str(len(report.checks))
    return report


def cmd_fock_expand(n: int, omega1=1, phi_c=1, phi_b0=1) -> RunReport:
    omega1, phi_c = to_fraction(omega1), to_fraction(phi_c)
    table = hyperelliptic_cocycle(omega1, max(n, 1))
    phi = WeightFunctional((to_fraction(phi_b0),), phi_c)
    report = RunReport("fock-expand", {"level": n, "omega1": ff(omega1), "phi_c": ff(phi_c)})
    rep = orthogonal_representative(n, table, phi)
    basis = level_basis(n, table)
    q = [rep.q_vector.coefficient(lam) for lam in basis]
    norm = rep.norm_sq_scale * shapovalov(rep.q_vector, rep.q_vector, table, phi)
    report.outputs.update({
        "level": n,
        "basis": [format_partition(lam) for lam in basis],
        "q_coefficients": [ff(x) for x in q],
        "h_n": ff(legendre_norm(n)),
        "norm_sq_scale": ff(rep.norm_sq_scale),
        "norm_check": ff(norm),
    })
    report.check("coefficient-sum-1", sum(q) == 1)
    report.check("norm-equals-h_n", norm == legendre_norm(n), f"got={ff(norm)}")
    t = omega1 * phi_c
    inverse_z = [1 / _closed_form_diag(lam, t) for lam in basis]
    total = sum(inverse_z)
    report.outputs["matches_inverse_z"] = "yes" if [x / total for x in inverse_z] == q else "no"
    for idx in range(1, len(basis)):
        w = basis_vector(basis[idx]) - basis_vector(basis[0])
        s = shapovalov(rep.q_vector, w, table, phi)
        report.check(f"kernel-orthogonal [{format_partition(basis[idx])}]-[{format_partition(basis[0])}]",
                     s == 0, None if s == 0 else f"S={ff(s)}")
    return report


def cmd_legendre_table(level_max: int) -> RunReport:
    report = RunReport("legendre-table", {"level_max": level_max})
    rows = []
    for n in range(level_max + 1):
        p = legendre(n)
        h = poly_inner(p, p)
        rows.append({"n": n, "coefficients": [ff(c) for c in p.coefficients], "h_n": ff(h)})
        report.check(f"h_{n} = 2/(2n+1)", h == legendre_norm(n))
    report.outputs["legendre"] = rows
    return report


def cmd_admissible(table: CocycleTable, phi_c=1, phi_b0: Sequence = (), N: int = 8) -> RunReport:
    phi_c = to_fraction(phi_c)
    phi = _weight(phi_c, [to_fraction(b) for b in phi_b0], table.sector_count)
    report = RunReport("admissible-check", {
        "level_max": N, "phi_c": ff(phi_c), "phi_b0": [ff(b) for b in phi.b0_values],
        "sector_count": table.sector_count, "band_width": table.band_width})
    result = is_p_admissible_up_to(N, table, phi)
    report.outputs["determinants"] = [{"level": n, "det": ff(d)}
                                      for n, d in enumerate(result.determinants, start=1)]
    if result.admissible:
        report.outputs["verdict"] = f"non-degenerate up to {N}"
        report.check(f"non-degenerate up to level {N}", True)
    else:
        kernel = {format_partition(lam): ff(c) for lam, c in result.kernel_vector.items()}
        report.outputs["verdict"] = f"degenerate at level {result.degenerate_level}"
        report.outputs["kernel_witness"] = kernel
        report.check(f"non-degenerate up to level {N}", False,
                     f"degenerate at level {result.degenerate_level}; kernel "
                     + " ".join(f"{k}:{v}" for k, v in kernel.items()))
    return report


def _rational(text: str) -> Fraction:
    try:
        return to_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(t) for t in text.split(",") if t.strip()]


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fockverma", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--level-max", type=_nonneg, default=8)
    common.add_argument("--r-max", type=_nonneg, default=3)
    common.add_argument("--omega1", type=_rational, default=Fraction(1))
    common.add_argument("--phi-c", type=_rational, default=Fraction(1))
    common.add_argument("--phi-b0", type=_rational_list, action="append", default=None,
                        help="p/q, repeatable or comma separated (one per sector)")
    common.add_argument("--cocycle", type=Path, default=None)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", type=Path, default=None)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gram-table", parents=[common], help="PBW and P~ Gram matrices")
    sub.add_parser("det-gram", parents=[common], help="Gram determinants per level")
    v = sub.add_parser("verify", parents=[common], help="run an identity suite")
    v.add_argument("suite", choices=SUITES)
    f = sub.add_parser("fock-expand", parents=[common], help="orthogonal representative")
    f.add_argument("level", type=_nonneg)
    sub.add_parser("legendre-table", parents=[common], help="Legendre coefficients and norms")
    sub.add_parser("admissible-check", parents=[common],
                   help="finite-level non-degeneracy of the Shapovalov form")
    return parser


def _run(args: argparse.Namespace) -> RunReport:
    b0 = [b for chunk in (args.phi_b0 or []) for b in chunk]
    table = load_cocycle(args.cocycle) if args.cocycle is not None else None
    if args.command == "gram-table":
        return cmd_gram_table(args.level_max, args.omega1, args.phi_c, b0 or [Fraction(1)],
                              table=table)
    if args.command == "det-gram":
        return cmd_det_gram(args.level_max, args.omega1, args.phi_c,
                            b0[0] if b0 else Fraction(1), table=table)
    if args.command == "verify":
        return cmd_verify(args.suite, args.level_max, args.r_max, args.omega1, args.phi_c,
                          b0[0] if b0 else Fraction(1))
    if args.command == "fock-expand":
        return cmd_fock_expand(args.level, args.omega1, args.phi_c,
                               b0[0] if b0 else Fraction(1))
    if args.command == "legendre-table":
        return cmd_legendre_table(args.level_max)
    if args.command == "admissible-check":
        if table is None:
            table = hyperelliptic_cocycle(args.omega1, max(args.level_max, 1))
        return cmd_admissible(table, args.phi_c, b0, args.level_max)
    raise AssertionError(args.command)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        report = _run(args)
    except (CocycleFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TruncationError, NotHyperellipticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateLevelError as exc:
        report = RunReport(args.command, {"level": exc.level})
        report.check("non-degenerate level", False, str(exc))
    text = report.render(args.format)
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
