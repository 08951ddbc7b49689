"""Ramification level of weight-2 newforms of prime-power level.

The local representation at p is irreducible, decomposable (sum of two
characters) or special (reducible, indecomposable).  Its level u follows
from the level exponent n and, in the reducible cases, the conductor
exponents of the characters involved.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import FactoredRadical, Ordering, as_rational, radical_cmp

# Degree threshold for finiteness under GRH; the unconditional analogue is 22.
GRH_THRESHOLD = 42


class LocalCase(Enum):
    IRREDUCIBLE = "irr"
    DECOMPOSABLE = "dec"
    SPECIAL = "sp"


class NewformDataError(ValueError):
    pass


class TableRegressionError(AssertionError):
    pass


class ThresholdExceeded(ValueError):
    """No admissible level exponent n >= 2 exists for this prime."""


@dataclass(frozen=True)
class NewformRecord:
    label: str
    p: int
    n: int
    case: LocalCase
    dim: int = 1
    nebentypus_conductor_exponent: int = 0
    a_chi: int = 0
    a_eps_chi: int = 0
    derived_a: bool = False

    def __post_init__(self):
        if isinstance(self.case, str):
            object.__setattr__(self, "case", LocalCase(self.case))
        if self.n < 2:
            raise NewformDataError("level exponent must be at least 2")
        if self.a_chi < 0 or self.a_eps_chi < 0:
            raise NewformDataError("conductor exponents are non-negative")
        if self.case is LocalCase.DECOMPOSABLE and self.a_chi + self.a_eps_chi != self.n:
            raise NewformDataError(
                f"{self.label}: a(chi) + a(eps chi) = {self.a_chi + self.a_eps_chi} != n = {self.n}"
            )

    @property
    def level(self) -> int:
        return self.p**self.n


def newform_level_of_ram(r: NewformRecord) -> Fraction:
    if r.case is LocalCase.IRREDUCIBLE:
        return Fraction(r.n, 2) - 1
    if r.case is LocalCase.DECOMPOSABLE:
        if r.a_chi + r.a_eps_chi != r.n:
            raise NewformDataError(f"{r.label}: conductor exponents do not sum to n")
        return Fraction(r.n - min(r.a_chi, r.a_eps_chi) - 1)
    return Fraction(max(r.a_chi - 1, 0))


def level_exponent_bound(i, ramified: bool = True) -> int:
    """Largest n allowed by n <= 2(i+1); 2 when unramified."""
    if not ramified:
        return 2
    i = as_rational(i)
    if i < 0:
        raise NewformDataError("a ramified level is at least 0")
    return math.floor(2 * (i + 1))


def ell_for(p: int) -> int:
    return 2 if p != 2 else 3


def _torsion_factor(ell: int) -> FactoredRadical:
    return FactoredRadical({ell: 1 + Fraction(1, ell - 1)})


def threshold_radical(p: int, i) -> FactoredRadical:
    """ell^(1 + 1/(ell-1)) * p^(i+1)."""
    ell = ell_for(p)
    return _torsion_factor(ell) * FactoredRadical({p: as_rational(i) + 1})


def below_threshold(p: int, i, threshold=GRH_THRESHOLD) -> bool:
    return radical_cmp(threshold_radical(p, i), as_rational(threshold)) is Ordering.LESS


@dataclass(frozen=True)
class LevelCutoff:
    p: int
    ell: int
    n_max: int
    i_low: Fraction
    i_high: Fraction

    def describe(self) -> str:
        return f"p={self.p} ell={self.ell} i<{float(self.i_high):.3f} n_max={self.n_max}"


def _cutoff_interval(p: int, threshold, denominator: int = 1000) -> tuple[Fraction, Fraction]:
    """[a, b] of width 1/denominator containing the exact i where the bound meets the threshold."""
    lo, hi = Fraction(-1), Fraction(-1)
    while below_threshold(p, hi, threshold):
        hi += 1
    lo = hi - 1
    step = Fraction(1, denominator)
    k_lo, k_hi = 0, denominator  # below at lo + k_lo*step, not below at lo + k_hi*step
    while k_hi - k_lo > 1:
        mid = (k_lo + k_hi) // 2
        if below_threshold(p, lo + mid * step, threshold):
            k_lo = mid
        else:
            k_hi = mid
    return lo + k_lo * step, lo + k_hi * step


def max_level_exponent(p: int, threshold=GRH_THRESHOLD) -> LevelCutoff:
    """Largest n with ell^(1+1/(ell-1)) p^(n/2) below the threshold, i.e. i = n/2 - 1."""
    ell = ell_for(p)
    if not below_threshold(p, Fraction(0), threshold):
        raise ThresholdExceeded(f"p = {p}: the bound at level 0 is already at least {threshold}")
    n = 2
    while below_threshold(p, Fraction(n + 1, 2) - 1, threshold):
        n += 1
    i_low, i_high = _cutoff_interval(p, threshold)
    return LevelCutoff(p, ell, n, i_low, i_high)


def _row(label, p, n, dim, neb, case, u, min_a=0):
    case = LocalCase(case)
    if case is LocalCase.DECOMPOSABLE:
        rec = NewformRecord(label, p, n, case, dim, neb, n - min_a, min_a, derived_a=True)
    else:
        rec = NewformRecord(label, p, n, case, dim, neb)
    return rec, Fraction(u)


# label, p, n, dim, nebentypus conductor exponent, case, printed u, min(a(chi), a(eps chi)).
# The min column is not printed in the source table; it is reconstructed from
# n and u through u = n - min - 1, so every decomposable entry is derived data.
TABLE_ONE: tuple[tuple[NewformRecord, Fraction], ...] = (
    _row("16A", 2, 4, 2, 4, "dec", 3),
    _row("32A", 2, 5, 1, 0, "irr", Fraction(3, 2)),
    _row("32B", 2, 5, 4, 5, "dec", 4),
    _row("32C", 2, 5, 8, 5, "dec", 4),
    _row("64A", 2, 6, 1, 0, "irr", 2),
    _row("27A", 3, 3, 1, 0, "irr", Fraction(1, 2)),
    _row("27B", 3, 3, 12, 3, "dec", 2),
    _row("81A", 3, 4, 2, 0, "irr", 1),
    _row("81B", 3, 4, 2, 2, "irr", 1),
    _row("81C", 3, 4, 4, 2, "irr", 1),
    _row("81D", 3, 4, 12, 3, "dec", 2, min_a=1),
    _row("81E", 3, 4, 144, 4, "dec", 3),
    _row("25A", 5, 2, 4, 2, "dec", 1),
    _row("25B", 5, 2, 8, 2, "dec", 1),
    _row("49A", 7, 2, 1, 0, "irr", 0),
    _row("49B", 7, 2, 2, 1, "irr", 0),
    _row("49C", 7, 2, 6, 2, "dec", 1),
    _row("49D", 7, 2, 12, 2, "dec", 1),
    _row("49E", 7, 2, 48, 2, "dec", 1),
)


def table_record(label: str) -> NewformRecord:
    for rec, _ in TABLE_ONE:
        if rec.label == label:
            return rec
    raise KeyError(label)


def classify_table() -> list[tuple[str, Fraction]]:
    out = []
    for rec, printed in TABLE_ONE:
        u = newform_level_of_ram(rec)
        if u != printed:
            raise TableRegressionError(f"{rec.label}: computed u = {u}, table says {printed}")
        if rec.case is LocalCase.DECOMPOSABLE and max(rec.a_chi, rec.a_eps_chi) != rec.nebentypus_conductor_exponent:
            raise TableRegressionError(f"{rec.label}: nebentypus conductor does not match max a")
        out.append((rec.label, u))
    return out


def surviving_newforms(threshold=GRH_THRESHOLD) -> list[str]:
    """Rows whose level u gives ell^(1+1/(ell-1)) p^(u+1) below the threshold."""
    return [label for (label, u), (rec, _) in zip(classify_table(), TABLE_ONE) if below_threshold(rec.p, u, threshold)]
