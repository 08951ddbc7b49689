from __future__ import annotations

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import filtrations
from ramaudit.filtration import (
    FiltrationError,
    FixedDimProfile,
    RamFiltration,
    artin_exponent,
    compose_orders,
    different_valuation,
    discriminant_valuation,
    herbrand_phi,
    herbrand_psi,
    herbrand_transitivity_check,
    i_max,
    is_level,
    level_bound_check,
    tame_compose_hypothesis,
    tame_compose_level,
    u_max,
    upper_jumps,
    wild_sum,
)

def _points(rnd: Random, lo, hi, n: int) -> list[Fraction]:
    den = rnd.choice([1, 2, 3, 4, 6, 12, 24, 97])
    return [Fraction(rnd.randint(int(lo * den), int(hi * den)), den) for _ in range(n)]


E4 = RamFiltration((24, 12, 4, 4, 4))
C3 = RamFiltration((3, 3, 3, 3, 3))


def test_phi_examples():
    assert herbrand_phi(E4, 4) == 1
    assert herbrand_phi(RamFiltration.tame(5), 0) == 0
    assert herbrand_phi(C3, 4) == 4
    assert herbrand_phi(E4, 1) == Fraction(1, 2)


def test_psi_examples():
    assert herbrand_psi(E4, 1) == 4
    assert herbrand_psi(E4, 0) == 0
    assert herbrand_psi(E4, Fraction(1, 2)) == 1


def test_levels():
    assert (i_max(E4), u_max(E4)) == (4, 1)
    assert (i_max(RamFiltration.tame(6)), u_max(RamFiltration.tame(6))) == (0, 0)
    unram = RamFiltration((1,), total_group_order=2)
    assert (i_max(unram), u_max(unram)) == (-1, -1)
    assert is_level(E4, 1) and not is_level(E4, Fraction(1, 2))
    assert is_level(RamFiltration.tame(4), 0)
    assert not is_level(C3, Fraction(1, 2))


def test_different_and_discriminant():
    assert different_valuation(E4) == Fraction(43, 24)
    assert different_valuation(RamFiltration.tame(7)) == Fraction(6, 7)
    assert different_valuation(C3) == Fraction(10, 3)
    assert discriminant_valuation(RamFiltration.tame(8), 2) == 14
    assert discriminant_valuation(RamFiltration((1,), total_group_order=3)) == 0
    assert discriminant_valuation(E4, 2) == 86


def test_artin_exponent_examples():
    assert artin_exponent(C3, FixedDimProfile(1, (0,) * 5)) == 5 == u_max(C3) + 1
    unram = RamFiltration((1,), total_group_order=2)
    assert artin_exponent(unram, FixedDimProfile(2, (2,))) == 0
    assert artin_exponent(RamFiltration.tame(3), FixedDimProfile(2, (0,))) == 2


def test_transitivity_examples():
    samples = [0, Fraction(1, 2), 1]
    assert herbrand_transitivity_check(RamFiltration.tame(6), RamFiltration.tame(3), RamFiltration.tame(2), samples)
    assert not herbrand_transitivity_check(E4, E4, E4, [2, 3])
    assert herbrand_transitivity_check(C3, C3, RamFiltration.trivial(), [0, 1, 2, 5])


def test_tame_composition():
    assert tame_compose_level(Fraction(3, 2)) == Fraction(3, 2)
    assert tame_compose_level(0) == 0
    assert tame_compose_hypothesis(Fraction(1, 2)) == 0


def test_construction_errors():
    with pytest.raises(FiltrationError):
        RamFiltration((4, 3))
    with pytest.raises(FiltrationError):
        RamFiltration((1,))
    with pytest.raises(FiltrationError):
        RamFiltration(())
    with pytest.raises(FiltrationError):
        herbrand_phi(E4, -2)
    with pytest.raises(FiltrationError):
        FixedDimProfile(2, (1, 0))


def test_upper_jumps():
    assert upper_jumps(E4) == [0, Fraction(1, 2), 1]


def test_compose_orders():
    assert compose_orders(3, (8, 8, 2)).orders == (24, 8, 2)


@settings(max_examples=1000)
@given(filtrations())
def test_phi_shape(F):
    assert herbrand_phi(F, 0) == 0
    assert herbrand_phi(F, Fraction(-1, 2)) == Fraction(-1, 2)
    prev_u, prev_v = Fraction(0), Fraction(0)
    for k in range(1, 4 * len(F.orders) + 1):
        u = Fraction(k, 4)
        v = herbrand_phi(F, u)
        slope = (v - prev_v) / (u - prev_u)
        assert 0 < slope <= 1
        prev_u, prev_v = u, v


@settings(max_examples=1000)
@given(filtrations(allow_unramified=True), st.randoms(use_true_random=False))
def test_phi_psi_inverse(F, rnd):
    top = i_max(F) + 3
    for x in _points(rnd, -1, top, 50):
        assert herbrand_psi(F, herbrand_phi(F, x)) == x
        assert herbrand_phi(F, herbrand_psi(F, x)) == x


@settings(max_examples=1000)
@given(filtrations())
def test_different_formulas_agree(F):
    # raises if the Hilbert sum and the level formula disagree
    d = different_valuation(F)
    assert d == u_max(F) + 1 - (i_max(F) + 1) / F.e


@settings(max_examples=1000)
@given(filtrations(), st.integers(1, 3), st.fractions(0, 10, max_denominator=12))
def test_discriminant_below_level_bound(F, f, i):
    assert level_bound_check(F, f, i)
    if is_level(F, i):
        assert discriminant_valuation(F, f) < F.e * f * (i + 1)


@settings(max_examples=1000)
@given(filtrations(max_len=5, max_order=32), st.integers(1, 4), st.randoms(use_true_random=False))
def test_transitivity_tame_top(F_FK, e, rnd):
    samples = _points(rnd, 0, 12, 8)
    # L/F tame of index e over F/K: G_i(L/K) = G'_{ceil(i/e)} for i >= 1
    wild = [F_FK.g(-(-i // e)) for i in range(1, e * len(F_FK.orders) + 1)]
    F_LK = RamFiltration((e * F_FK.e,) + tuple(wild))
    F_LF = RamFiltration.tame(e, e) if e > 1 else RamFiltration.trivial()
    assert herbrand_transitivity_check(F_LK, F_LF, F_FK, samples)


@settings(max_examples=1000)
@given(filtrations(), st.randoms(use_true_random=False))
def test_transitivity_trivial_quotient(F, rnd):
    samples = _points(rnd, 0, 12, 8)
    assert herbrand_transitivity_check(F, F, RamFiltration.trivial(), samples)


@settings(max_examples=300)
@given(filtrations())
def test_artin_of_ramified_character_is_level_plus_one(F):
    # a faithful character on the cyclic jump structure: V^{G_i} = 0 while G_i != 1
    fixed = tuple(0 if g > 1 else 1 for g in F.orders)
    assert artin_exponent(F, FixedDimProfile(1, fixed)) == u_max(F) + 1


@settings(max_examples=300)
@given(filtrations(), st.integers(1, 4))
def test_wild_sum_ignores_trivial_tail(F, extra):
    P = FixedDimProfile(2, tuple(0 if g > 1 else 2 for g in F.orders))
    G = RamFiltration(F.orders + (1,) * extra, F.total_group_order)
    Q = FixedDimProfile(2, P.fixed_dims + (2,) * extra)
    assert wild_sum(F, P) == wild_sum(G, Q)
