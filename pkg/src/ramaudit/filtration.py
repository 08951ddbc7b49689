"""Lower/upper ramification numbering for a finite Galois extension of local fields.

A filtration is given by the orders ``g_i = #G_i`` of the lower-numbered
ramification groups, with ``G_u = G_ceil(u)`` for real ``u > 0``.  Jumps in
the lower numbering sit at integers; upper-numbering jumps are the rationals
``phi(i)`` at those integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import as_rational


class FiltrationError(ValueError):
    pass


class InvariantViolation(AssertionError):
    """Two routes to the same quantity disagreed."""


@dataclass(frozen=True)
class RamFiltration:
    orders: tuple[int, ...]
    total_group_order: int = 0
    allow_trivial: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        orders = tuple(int(g) for g in self.orders)
        if not orders:
            raise FiltrationError("need at least g_0")
        if any(g < 1 for g in orders):
            raise FiltrationError("orders must be positive")
        for hi, lo in zip(orders, orders[1:]):
            if hi % lo:
                raise FiltrationError(f"g_(i+1) = {lo} does not divide g_i = {hi}")
        total = self.total_group_order or orders[0]
        if total % orders[0]:
            raise FiltrationError("g_0 must divide the total group order")
        if total == 1 and not self.allow_trivial:
            raise FiltrationError("the trivial extension has no ramification data")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "total_group_order", total)

    @classmethod
    def trivial(cls) -> RamFiltration:
        return cls((1,), 1, allow_trivial=True)

    @classmethod
    def tame(cls, e: int, total_group_order: int = 0) -> RamFiltration:
        return cls((e,), total_group_order)

    @property
    def e(self) -> int:
        return self.orders[0]

    def g(self, i: int) -> int:
        """#G_i for integer i >= 0 (1 past the recorded support)."""
        if i < 0:
            return self.total_group_order
        return self.orders[i] if i < len(self.orders) else 1

    def group_at(self, u) -> int:
        """#G_u for real u >= -1 under the G_u = G_ceil(u) convention."""
        u = as_rational(u)
        if u <= -1:
            return self.total_group_order
        if u <= 0:
            return self.orders[0]
        return self.g(math.ceil(u))

    def wild_steps(self) -> int:
        return sum(1 for g in self.orders[1:] if g > 1)


def _check_lower(u: Fraction) -> None:
    if u < -1:
        raise FiltrationError(f"numbering starts at -1, got {u}")


def herbrand_phi(F: RamFiltration, u) -> Fraction:
    u = as_rational(u)
    _check_lower(u)
    if u <= 0:
        return u
    top = math.ceil(u)
    g0 = F.e
    acc = Fraction(sum(F.g(k) for k in range(1, top)), g0)
    return acc + (u - (top - 1)) * Fraction(F.g(top), g0)


def herbrand_psi(F: RamFiltration, v) -> Fraction:
    v = as_rational(v)
    _check_lower(v)
    if v <= 0:
        return v
    g0 = F.e
    reached = Fraction(0)
    k = 1
    while k < len(F.orders):
        step = Fraction(F.g(k), g0)
        if v <= reached + step:
            return (k - 1) + (v - reached) / step
        reached += step
        k += 1
    # beyond the support the slope of phi is 1/g0
    return (k - 1) + (v - reached) * g0


def i_max(F: RamFiltration) -> Fraction:
    if F.e == 1:
        return Fraction(-1)
    last = max(i for i, g in enumerate(F.orders) if g > 1)
    return Fraction(last)


def u_max(F: RamFiltration) -> Fraction:
    return herbrand_phi(F, i_max(F))


def is_level(F: RamFiltration, i) -> bool:
    i = as_rational(i)
    if i < -1:
        raise FiltrationError("levels start at -1")
    return u_max(F) <= i


def different_valuation(F: RamFiltration) -> Fraction:
    """v_K of the different, by Hilbert's sum and by the level formula.

    Unramified input gives 0.
    """
    if F.e == 1:
        return Fraction(0)
    e = F.e
    hilbert = Fraction(sum(g - 1 for g in F.orders), e)
    via_level = u_max(F) + 1 - (i_max(F) + 1) / e
    if hilbert != via_level:
        raise InvariantViolation(f"different: sum gives {hilbert}, level formula gives {via_level}")
    return hilbert


def discriminant_valuation(F: RamFiltration, f: int = 1) -> Fraction:
    """v_K of the relative discriminant for residue degree ``f``."""
    if f < 1:
        raise FiltrationError("residue degree must be positive")
    return f * Fraction(sum(g - 1 for g in F.orders))


def level_bound_check(F: RamFiltration, f: int, i) -> bool:
    """Whenever F is ramified of level i >= 0, v_K(disc) < [L:K](i+1)."""
    i = as_rational(i)
    if i < 0 or not is_level(F, i):
        return True
    return discriminant_valuation(F, f) < F.e * f * (i + 1)


@dataclass(frozen=True)
class FixedDimProfile:
    """``fixed_dims[i] = dim V^{G_i}`` aligned with the filtration's orders."""

    dim_V: int
    fixed_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.fixed_dims)
        if self.dim_V < 1:
            raise FiltrationError("dim V must be positive")
        if any(not 0 <= d <= self.dim_V for d in dims):
            raise FiltrationError("fixed dimensions must lie in [0, dim V]")
        if any(a > b for a, b in zip(dims, dims[1:])):
            raise FiltrationError("fixed dimensions must be non-decreasing")
        object.__setattr__(self, "fixed_dims", dims)

    def codim(self, i: int) -> int:
        return self.dim_V - self.fixed_dims[i]


def _aligned(F: RamFiltration, P: FixedDimProfile) -> None:
    if len(P.fixed_dims) != len(F.orders):
        raise FiltrationError(
            f"profile has {len(P.fixed_dims)} entries, filtration has {len(F.orders)}"
        )
    for i, g in enumerate(F.orders):
        if g == 1 and P.fixed_dims[i] != P.dim_V:
            raise FiltrationError(f"G_{i} is trivial but fixes only {P.fixed_dims[i]} dimensions")


def wild_sum(F: RamFiltration, P: FixedDimProfile) -> Fraction:
    """sum_{i>=1} (g_i/g_0) * dim(V / V^{G_i})."""
    _aligned(F, P)
    return sum((Fraction(F.orders[i], F.e) * P.codim(i) for i in range(1, len(F.orders))), Fraction(0))


def artin_exponent(F: RamFiltration, P: FixedDimProfile) -> Fraction:
    _aligned(F, P)
    return P.codim(0) + wild_sum(F, P)


def herbrand_transitivity_check(
    F_LK: RamFiltration, F_LF: RamFiltration, F_FK: RamFiltration, samples: Iterable
) -> bool:
    """phi_{L/K} == phi_{F/K} o phi_{L/F} at every sample point."""
    for u in samples:
        u = as_rational(u)
        if herbrand_phi(F_LK, u) != herbrand_phi(F_FK, herbrand_phi(F_LF, u)):
            return False
    return True


def tame_compose_level(i) -> Fraction:
    """Level of L/K when L/F is tame over a level-i extension F/K."""
    return as_rational(i)


def tame_compose_hypothesis(i) -> Fraction:
    """The level the top step L/F must have for :func:`tame_compose_level` to apply."""
    return min(as_rational(i), Fraction(0))


def upper_jumps(F: RamFiltration) -> list[Fraction]:
    """Upper-numbering breaks: phi(i) at each lower jump i."""
    jumps = [i for i in range(len(F.orders)) if F.g(i) != F.g(i + 1)]
    return [herbrand_phi(F, i) for i in jumps]


def compose_orders(base_tame_e: int, top: Sequence[int]) -> RamFiltration:
    """Lower filtration of a tame base of index ``e`` under a totally ramified top step.

    G_0 has order e * top[0]; for i >= 1 the subgroup's lower numbering is
    inherited, so G_i = H_i.
    """
    orders = (base_tame_e * top[0],) + tuple(top[1:])
    return RamFiltration(orders)
