"""Conductor exponents of abelian varieties: c = 2u + t + delta, with delta the
wild part measured on the ell-torsion."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import as_rational
from .filtration import FixedDimProfile, RamFiltration, u_max, wild_sum


class ConductorError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ReductionData:
    """u unipotent and t toric dimensions of the special fibre, delta wild measure."""

    u: int
    t: int
    delta: Fraction
    g: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "delta", as_rational(self.delta))
        if self.u < 0 or self.t < 0 or self.delta < 0:
            raise ConductorError("u, t and delta are non-negative")
        if self.g is not None and self.u + self.t > self.g:
            raise ConductorError(f"u + t = {self.u + self.t} exceeds g = {self.g}")

    def as_triple(self) -> tuple[int, int, Fraction]:
        return (self.u, self.t, self.delta)


def serre_delta(F: RamFiltration, P: FixedDimProfile) -> Fraction:
    """sum_{i>=1} (g_i/g_0) dim(V/V^{G_i})."""
    return wild_sum(F, P)


def conductor_exponent(r: ReductionData) -> Fraction:
    return 2 * r.u + r.t + r.delta


@dataclass(frozen=True)
class CaseList:
    cases: tuple[ReductionData, ...]
    # rational (non-integral) delta could also fill the gap in these (u, t) slots
    rational_delta_slots: tuple[tuple[int, int], ...]


def enumerate_cases(
    c: int,
    g: int | None = None,
    require_u_positive: bool = False,
    delta_zero: bool = False,
) -> CaseList:
    """All (u, t, delta) with integral delta and 2u + t + delta = c, lexicographic.

    Every (u, t) with 2u + t < c also admits non-integral delta summing to c;
    those slots are listed separately.
    """
    if c < 0:
        raise ConductorError("conductor exponent is non-negative")
    cases = []
    slots = []
    for u in range(c // 2 + 1):
        if require_u_positive and u == 0:
            continue
        for t in range(c - 2 * u + 1):
            if g is not None and u + t > g:
                continue
            delta = c - 2 * u - t
            if delta_zero and delta:
                continue
            cases.append(ReductionData(u, t, Fraction(delta), g))
            if delta >= 1 and not delta_zero:
                slots.append((u, t))
    return CaseList(tuple(cases), tuple(slots))


def wild_mass_level_bound(min_codim: int, delta, F: RamFiltration | None = None) -> Fraction:
    """Bound on sum_{i>=1} g_i/g_0 (hence on the level u) from delta = sum (g_i/g_0) codim_i.

    When a filtration is supplied the bound is checked against its level.
    """
    if min_codim < 1:
        raise ConductorError("min_codim must be at least 1")
    bound = as_rational(delta) / min_codim
    if F is not None:
        if u_max(F) > bound:
            raise ConductorError(f"filtration has level {u_max(F)} above the bound {bound}")
    return bound


def mestre_check(N: int, g: int) -> bool:
    """N > 10^g, the lower bound on conductors of g-dimensional abelian varieties."""
    if N < 1 or g < 1:
        raise ConductorError("N and g are positive")
    return N > 10**g
