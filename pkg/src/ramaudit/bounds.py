"""Root discriminants, Fontaine-type bounds, conductor-discriminant products and
Odlyzko degree caps.

All bounds produced here are strict upper bounds ("<").  Degree caps come
from a plain-text table of lower bounds B(n) on root discriminants: a field
whose root discriminant is below delta cannot have degree n once
B(n) >= delta.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from sympy import isprime

from .exact import (
    ArithmeticDomainError,
    FactoredRadical,
    Ordering,
    UnnormalizedLabelError,
    as_rational,
    radical_cmp,
    radical_mul,
    radical_root,
)

MODES = ("grh", "unconditional")


class Bound(NamedTuple):
    value: FactoredRadical
    strict: bool = True


def root_discriminant(disc: FactoredRadical, degree: int) -> FactoredRadical:
    return radical_root(disc, degree)


def extend_root_disc(
    delta_K: FactoredRadical, rel_disc_norm: FactoredRadical, degree_L: int
) -> FactoredRadical:
    """delta_L = delta_K * N_{K/Q}(disc_{L/K})^(1/[L:Q])."""
    if rel_disc_norm.has_ideal_labels():
        raise UnnormalizedLabelError("relative discriminant norm still carries ideal labels")
    return radical_mul(delta_K, radical_root(rel_disc_norm, degree_L))


def _require_prime(*ps: int) -> None:
    for p in ps:
        if not isprime(p):
            raise ArithmeticDomainError(f"{p} is not prime")


def fontaine_bound(delta_K: FactoredRadical, p: int, i, ell: int) -> Bound:
    """delta_L < delta_K * p^(1+i) * ell^(1 + 1/(ell-1)) for the maximal ell-torsion field."""
    _require_prime(p, ell)
    if p == ell:
        raise ArithmeticDomainError("the ramified prime must differ from ell")
    i = as_rational(i)
    if i < -1:
        raise ArithmeticDomainError("levels start at -1")
    extra = FactoredRadical({p: 1 + i, ell: 1 + Fraction(1, ell - 1)})
    return Bound(radical_mul(delta_K, extra))


def fontaine_local_cap(ell: int, n: int, e: int) -> Fraction:
    """Level of ramification above ell of a group scheme killed by ell^n: e(n + 1/(ell-1)) - 1."""
    _require_prime(ell)
    if n < 1 or e < 1:
        raise ArithmeticDomainError("n and e must be positive")
    return e * (n + Fraction(1, ell - 1)) - 1


def tame_root_disc_increment(f: int, g: int, deg_K: int, e_prime: int | None = None) -> Fraction:
    """Exponent gained at one prime by a tame step, (f g / [K:Q]) (1 - 1/e').

    ``e_prime=None`` takes the supremum over all tame indices, f g / [K:Q].
    """
    if f * g > deg_K:
        raise ArithmeticDomainError("f*g cannot exceed [K:Q]")
    share = Fraction(f * g, deg_K)
    if e_prime is None:
        return share
    if e_prime < 1:
        raise ArithmeticDomainError("ramification index must be positive")
    return share * (1 - Fraction(1, e_prime))


def root_disc_increment(f: int, g: int, deg_K: int, local_disc_valuation, local_degree: int) -> Fraction:
    """Exponent gained at p when every prime of K above p (there are g, each
    of residue degree f) picks up local discriminant valuation
    ``local_disc_valuation`` over a local extension of degree ``local_degree``."""
    if f * g > deg_K:
        raise ArithmeticDomainError("f*g cannot exceed [K:Q]")
    return Fraction(f * g, deg_K) * as_rational(local_disc_valuation) / local_degree


@dataclass(frozen=True)
class CharacterConductorMultiset:
    entries: tuple[tuple[FactoredRadical, int], ...]
    degree: int | None = None

    def __post_init__(self):
        entries = tuple((c, int(m)) for c, m in self.entries)
        if any(m < 1 for _, m in entries):
            raise ValueError("multiplicities must be positive")
        if self.degree is not None and sum(m for _, m in entries) != self.degree:
            raise ValueError(
                f"{sum(m for _, m in entries)} characters listed for an extension of degree {self.degree}"
            )
        object.__setattr__(self, "entries", entries)

    @property
    def count(self) -> int:
        return sum(m for _, m in self.entries)


def conductor_discriminant(chars: CharacterConductorMultiset) -> FactoredRadical:
    """Discriminant of an abelian extension: product of all character conductors."""
    out = FactoredRadical()
    for conductor, mult in chars.entries:
        out = radical_mul(out, conductor ** mult)
    return out


def prime_degree_discriminant(conductor: FactoredRadical, p: int) -> FactoredRadical:
    """Discriminant of a degree-p subextension of exact conductor c: c^(p-1)."""
    _require_prime(p)
    return conductor ** (p - 1)


class OdlyzkoTableError(ValueError):
    pass


@dataclass(frozen=True)
class OdlyzkoTable:
    """Per-mode sorted rows (degree, B(degree))."""

    rows: dict[str, tuple[tuple[int, Fraction], ...]]
    source: str = "<memory>"

    def __post_init__(self):
        for mode in MODES:
            if not self.rows.get(mode):
                raise OdlyzkoTableError(f"table lacks {mode} rows")
        for mode, rows in self.rows.items():
            if mode not in MODES:
                raise OdlyzkoTableError(f"unknown mode {mode!r}")
            for (n0, b0), (n1, b1) in zip(rows, rows[1:]):
                if n1 <= n0:
                    raise OdlyzkoTableError(f"{mode}: degrees not strictly increasing at {n1}")
                if b1 < b0:
                    raise OdlyzkoTableError(f"{mode}: bound decreases at degree {n1}")

    @classmethod
    def parse(cls, text: str, source: str = "<string>") -> OdlyzkoTable:
        rows: dict[str, list[tuple[int, Fraction]]] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4:
                raise OdlyzkoTableError(f"{source}:{lineno}: expected 'mode degree num den'")
            mode, deg, num, den = parts
            try:
                row = (int(deg), Fraction(int(num), int(den)))
            except (ValueError, ZeroDivisionError) as exc:
                raise OdlyzkoTableError(f"{source}:{lineno}: {exc}") from None
            rows.setdefault(mode.lower(), []).append(row)
        return cls({m: tuple(r) for m, r in rows.items()}, source)

    @classmethod
    def load(cls, path: str | Path | None = None) -> OdlyzkoTable:
        if path is None:
            text = resources.files("ramaudit.data").joinpath("odlyzko.txt").read_text()
            return cls.parse(text, "odlyzko.txt")
        path = Path(path)
        return cls.parse(path.read_text(), str(path))

    def bound(self, mode: str, degree: int) -> Fraction | None:
        for n, b in self.rows[mode]:
            if n == degree:
                return b
        return None

    def max_degree(self, delta: FactoredRadical, mode: str) -> int | None:
        """Smallest tabulated n with B(n) >= delta; None if the table never gets there.

        Fields with root discriminant < delta then have degree < n.
        """
        if mode not in MODES:
            raise OdlyzkoTableError(f"unknown mode {mode!r}")
        rows = self.rows[mode]
        lo, hi = 0, len(rows)
        while lo < hi:
            mid = (lo + hi) // 2
            if radical_cmp(delta, rows[mid][1]) is Ordering.GREATER:
                lo = mid + 1
            else:
                hi = mid
        return rows[lo][0] if lo < len(rows) else None


_DEFAULT: OdlyzkoTable | None = None


def default_table() -> OdlyzkoTable:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = OdlyzkoTable.load()
    return _DEFAULT


def odlyzko_max_degree(delta: FactoredRadical, mode: str, table: OdlyzkoTable | None = None) -> int | None:
    return (table or default_table()).max_degree(delta, mode)


def monotone_scan(deltas: Sequence[FactoredRadical], mode: str, table: OdlyzkoTable | None = None):
    """Caps for a sequence of deltas, in order (used by property tests and reports)."""
    return [odlyzko_max_degree(d, mode, table) for d in deltas]


def product(radicals: Iterable[FactoredRadical]) -> FactoredRadical:
    out = FactoredRadical()
    for r in radicals:
        out = radical_mul(out, r)
    return out
