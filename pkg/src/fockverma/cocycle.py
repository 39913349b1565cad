"""Heisenberg algebra data: cocycle tables, weight functionals, brackets.

A cocycle table stores the central-bracket scalars

    [b_m^(i), b_n^(j)] = psi^(ij)_{mn} c

at a fixed evaluation point of the curve parameter. Tables are finite: keys
with a mode above ``max_mode`` that still fall inside the band are "not
tabulated" and raise :class:`TruncationError` instead of reading as zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence, Union

from .linalg import RationalLike, format_fraction, to_fraction

Key = tuple[int, int, int, int]


class TruncationError(LookupError):
    """A bracket was requested outside the tabulated mode range."""


class NotHyperellipticError(ValueError):
    pass


class CocycleFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True, eq=False)
class CocycleTable:
    sector_count: int
    entries: Mapping[Key, Fraction]
    band_width: int = 0
    max_mode: int = 0
    evaluation_point: Optional[Fraction] = None
    omega1: Optional[Fraction] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.sector_count < 1:
            raise ValueError("sector_count must be positive")
        if self.band_width < 0:
            raise ValueError("band_width must be non-negative")
        clean = {}
        for key, value in self.entries.items():
            value = to_fraction(value)
            if value:
                clean[tuple(int(k) for k in key)] = value
        object.__setattr__(self, "entries", clean)
        if self.max_mode == 0 and clean:
            object.__setattr__(self, "max_mode",
                               max(max(abs(m), abs(n)) for _, _, m, n in clean))

    @property
    def sectored(self) -> bool:
        return self.sector_count > 1

    def entry(self, i: int, j: int, m: int, n: int) -> Fraction:
        if not (1 <= i <= self.sector_count and 1 <= j <= self.sector_count):
            raise IndexError(f"sector index out of range 1..{self.sector_count}: ({i}, {j})")
        if abs(m + n) > self.band_width:
            return Fraction(0)
        if max(abs(m), abs(n)) > self.max_mode:
            raise TruncationError(
                f"bracket ({i},{j},{m},{n}) lies in band but beyond max_mode={self.max_mode}")
        return self.entries.get((i, j, m, n), Fraction(0))


@dataclass(frozen=True)
class WeightFunctional:
    """Highest weight: phi(b_0^(j)) per sector and the central charge phi(c)."""

    b0_values: tuple[Fraction, ...]
    c_value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "b0_values", tuple(to_fraction(b) for b in self.b0_values))
        object.__setattr__(self, "c_value", to_fraction(self.c_value))
        if self.c_value == 0:
            raise ValueError("the central charge phi(c) must be non-zero")
        if not self.b0_values:
            raise ValueError("need at least one phi(b_0) value")

    @classmethod
    def simple(cls, c: RationalLike = 1, b0: Union[RationalLike, Sequence[RationalLike]] = 0,
               sectors: int = 1) -> "WeightFunctional":
        if isinstance(b0, (list, tuple)):
            values = tuple(b0)
        else:
            values = (b0,) * sectors
        return cls(values, c)

    def b0(self, sector: int) -> Fraction:
        return self.b0_values[sector - 1]


@dataclass(frozen=True)
class Violation:
    kind: str  # "skew", "band", "sign", "contravariance"
    key: Key
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.key}: {self.detail}"


def hyperelliptic_cocycle(omega1: RationalLike, max_mode: int) -> CocycleTable:
    """Single-sector table with psi_{k,-k} = k*omega1 and psi_{-k,k} = -k*omega1."""
    w = to_fraction(omega1)
    if w <= 0:
        raise ValueError(f"omega1 must be positive, got {w}")
    if max_mode < 1:
        raise ValueError("max_mode must be at least 1")
    entries = {}
    for k in range(1, max_mode + 1):
        entries[(1, 1, k, -k)] = k * w
        entries[(1, 1, -k, k)] = -k * w
    return CocycleTable(1, entries, band_width=0, max_mode=max_mode, omega1=w)


def hyperelliptic_omega1(table: CocycleTable) -> Fraction:
    """Return omega1 if ``table`` is the mode-weighted hyperelliptic cocycle."""
    if table.omega1 is not None:
        return table.omega1
    if table.sector_count != 1:
        raise NotHyperellipticError("multi-sector tables have no Sugawara zero mode here")
    w = table.entries.get((1, 1, 1, -1))
    if w is None or table.max_mode < 1:
        raise NotHyperellipticError("psi_{1,-1} is zero or untabulated")
    expected = {}
    for k in range(1, table.max_mode + 1):
        expected[(1, 1, k, -k)] = k * w
        expected[(1, 1, -k, k)] = -k * w
    if dict(table.entries) != expected:
        raise NotHyperellipticError("table is not of the form psi_{k,-k} = k*omega1")
    return w


def bracket(table: CocycleTable, i: int, m: int, j: int, n: int) -> Fraction:
    """Coefficient of c in [b_m^(i), b_n^(j)]."""
    return table.entry(i, j, m, n)


def validate_cocycle(table: CocycleTable) -> list[Violation]:
    """List every structural defect; an empty list means the table is usable.

    Besides skew-symmetry and band support this flags entries that no
    highest-weight module can carry: nonzero brackets between two modes of
    the same sign or involving a zero mode, and entries breaking
    psi^(ij)_{m,n} = psi^(ji)_{-n,-m}, which the contravariant form needs to
    be symmetric.
    """
    out: list[Violation] = []
    seen_skew: set[Key] = set()
    entries = table.entries
    for key in sorted(entries):
        i, j, m, n = key
        value = entries[key]
        if not (1 <= i <= table.sector_count and 1 <= j <= table.sector_count):
            out.append(Violation("sector", key, f"sector outside 1..{table.sector_count}"))
            continue
        partner = (j, i, n, m)
        rep = max(key, partner)
        if entries.get(partner, Fraction(0)) != -value and rep not in seen_skew:
            seen_skew.add(rep)
            out.append(Violation("skew", rep,
                                 f"psi{key}={format_fraction(value)} but "
                                 f"psi{partner}={format_fraction(entries.get(partner, 0))}"))
        if abs(m + n) > table.band_width:
            out.append(Violation("band", key, f"|m+n|={abs(m + n)} exceeds band width "
                                              f"{table.band_width}"))
        if m * n >= 0:
            out.append(Violation("sign", key, "nonzero bracket between modes that must commute"))
        mirror = (j, i, -n, -m)
        if entries.get(mirror, Fraction(0)) != value and key < mirror:
            out.append(Violation("contravariance", key,
                                 f"psi{key} != psi{mirror}"))
    return out


# --- file format -----------------------------------------------------------

def _record_lines(text: str) -> list[int]:
    """Line number of each element of the top-level ``records`` array."""
    start = text.find('"records"')
    if start < 0:
        return []
    pos = text.find("[", start)
    if pos < 0:
        return []
    decoder = json.JSONDecoder()
    lines = []
    pos += 1
    while True:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            break
        lines.append(text.count("\n", 0, pos) + 1)
        try:
            _, pos = decoder.raw_decode(text, pos)
        except json.JSONDecodeError:
            break
    return lines


def parse_cocycle(text: str) -> CocycleTable:
    """Parse a JSON cocycle document, complete one-sided skew pairs, validate.

    Expected fields: ``sector_count``, ``band_width``, ``evaluation_point``
    ("p/q"), optional ``max_mode``, and ``records`` as a list of
    ``{i, j, m, n, value}`` with ``value`` an exact rational string.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CocycleFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise CocycleFormatError("top level must be an object", 1)
    lines = _record_lines(text)
    try:
        sector_count = int(doc["sector_count"])
        band_width = int(doc.get("band_width", 0))
        point = doc.get("evaluation_point")
        evaluation_point = to_fraction(point) if point is not None else None
        records = doc["records"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CocycleFormatError(f"bad header field: {exc}") from None

    given: dict[Key, Fraction] = {}
    origin: dict[Key, Optional[int]] = {}
    for idx, rec in enumerate(records):
        line = lines[idx] if idx < len(lines) else None
        try:
            key = (int(rec["i"]), int(rec["j"]), int(rec["m"]), int(rec["n"]))
            value = to_fraction(rec["value"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CocycleFormatError(f"bad record: {exc}", line) from None
        if key in given and given[key] != value:
            raise CocycleFormatError(f"conflicting duplicate record {key}", line)
        given[key] = value
        origin[key] = line

    entries = dict(given)
    for (i, j, m, n), value in given.items():
        partner = (j, i, n, m)
        if partner not in given:
            entries[partner] = -value
            origin[partner] = origin[(i, j, m, n)]

    max_mode = int(doc.get("max_mode", 0))
    table = CocycleTable(sector_count, entries, band_width=band_width, max_mode=max_mode,
                         evaluation_point=evaluation_point)
    problems = validate_cocycle(table)
    if problems:
        first = problems[0]
        raise CocycleFormatError(
            "; ".join(str(p) for p in problems), origin.get(first.key))
    return table


def load_cocycle(path: Union[str, Path]) -> CocycleTable:
    return parse_cocycle(Path(path).read_text())


def dump_cocycle(table: CocycleTable, one_sided: bool = True) -> str:
    """Serialise a table; with ``one_sided`` only keys with m > n (or m == n, i <= j) are written."""
    records = []
    for (i, j, m, n), value in sorted(table.entries.items()):
        if one_sided and (m, i) < (n, j):
            continue
        records.append({"i": i, "j": j, "m": m, "n": n, "value": format_fraction(value)})
    doc = {
        "sector_count": table.sector_count,
        "band_width": table.band_width,
        "max_mode": table.max_mode,
        "evaluation_point": format_fraction(table.evaluation_point or Fraction(0)),
        "records": records,
    }
    lines = ["{"]
    for k in ("sector_count", "band_width", "max_mode", "evaluation_point"):
        lines.append(f"  {json.dumps(k)}: {json.dumps(doc[k])},")
    lines.append('  "records": [')
    body = [f"    {json.dumps(r)}" for r in records]
    lines.append(",\n".join(body))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def table_from_records(sector_count: int, records: Iterable[tuple[int, int, int, int, RationalLike]],
                       band_width: int = 0, max_mode: int = 0) -> CocycleTable:
    """Build a table from one-sided records, filling in skew partners."""
    entries: dict[Key, Fraction] = {}
    for i, j, m, n, value in records:
        v = to_fraction(value)
        entries[(i, j, m, n)] = v
        entries.setdefault((j, i, n, m), -v)
    return CocycleTable(sector_count, entries, band_width=band_width, max_mode=max_mode)
