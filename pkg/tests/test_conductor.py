from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import filtrations
from ramaudit.conductor import (
    ConductorError,
    ReductionData,
    conductor_exponent,
    enumerate_cases,
    mestre_check,
    serre_delta,
    wild_mass_level_bound,
)
from ramaudit.filtration import FixedDimProfile, RamFiltration, artin_exponent, u_max
from ramaudit.modrep import fixed_space_dim


def test_serre_delta_examples():
    assert serre_delta(RamFiltration((4, 2)), FixedDimProfile(2, (0, 0))) == 1
    assert serre_delta(RamFiltration((3, 1)), FixedDimProfile(2, (0, 2))) == 0
    assert serre_delta(RamFiltration((3, 3)), FixedDimProfile(2, (0, 0))) == 2


def test_conductor_exponent_examples():
    assert conductor_exponent(ReductionData(1, 0, 1)) == 3
    assert conductor_exponent(ReductionData(1, 0, 0)) == 2
    assert conductor_exponent(ReductionData(0, 0, 0)) == 0
    assert conductor_exponent(ReductionData(0, 0, Fraction(1, 2))) == Fraction(1, 2)


def test_reduction_data_validation():
    with pytest.raises(ConductorError):
        ReductionData(-1, 0, 0)
    with pytest.raises(ConductorError):
        ReductionData(1, 1, 0, g=1)


def test_enumerate_cases_examples():
    assert [r.as_triple() for r in enumerate_cases(2, require_u_positive=True).cases] == [(1, 0, 0)]
    assert [r.as_triple() for r in enumerate_cases(3).cases] == [
        (0, 0, 3), (0, 1, 2), (0, 2, 1), (0, 3, 0), (1, 0, 1), (1, 1, 0)
    ]
    assert [r.as_triple() for r in enumerate_cases(0).cases] == [(0, 0, 0)]
    assert [r.as_triple() for r in enumerate_cases(3, g=1).cases] == [(0, 0, 3), (0, 1, 2), (1, 0, 1)]
    assert [r.as_triple() for r in enumerate_cases(4, delta_zero=True).cases] == [(0, 4, 0), (1, 2, 0), (2, 0, 0)]
    with pytest.raises(ConductorError):
        enumerate_cases(-1)


@settings(max_examples=100)
@given(st.integers(0, 12), st.integers(1, 4))
def test_enumerate_cases_complete(c, g):
    got = {r.as_triple() for r in enumerate_cases(c, g).cases}
    want = {(u, t, c - 2 * u - t) for u in range(c + 1) for t in range(c + 1) if 2 * u + t <= c and u + t <= g}
    assert got == want


def test_wild_mass_bound_examples():
    assert wild_mass_level_bound(2, 1) == Fraction(1, 2)
    assert wild_mass_level_bound(2, 0) == 0
    assert wild_mass_level_bound(2, 3) == Fraction(3, 2)
    with pytest.raises(ConductorError):
        wild_mass_level_bound(0, 1)
    with pytest.raises(ConductorError):
        wild_mass_level_bound(2, 1, RamFiltration((3, 3, 3)))
    assert wild_mass_level_bound(2, 1, RamFiltration((6, 3))) == Fraction(1, 2)


def test_mestre_examples():
    assert mestre_check(27, 1)
    assert not mestre_check(27, 2)
    assert not mestre_check(10, 1)


def test_level_half_from_even_fixed_dimension():
    # a nontrivial 3-group on F_2^2 fixes an even-dimensional subspace, so codim >= 2
    fs = fixed_space_dim([[[0, 1], [1, 1]]], 2)
    codim = 2 - fs.dim
    assert fs.dim % 2 == 0 and codim >= 2
    assert wild_mass_level_bound(codim, 1) == Fraction(1, 2)


@settings(max_examples=300)
@given(filtrations(), st.integers(1, 3))
def test_serre_delta_ignores_trivial_tail(F, extra):
    P = FixedDimProfile(2, tuple(0 if g > 1 else 2 for g in F.orders))
    G = RamFiltration(F.orders + (1,) * extra, F.total_group_order)
    assert serre_delta(F, P) == serre_delta(G, FixedDimProfile(2, P.fixed_dims + (2,) * extra))


@settings(max_examples=300)
@given(filtrations())
def test_serre_delta_plus_tame_term_is_artin(F):
    P = FixedDimProfile(1, tuple(0 if g > 1 else 1 for g in F.orders))
    assert serre_delta(F, P) + P.codim(0) == artin_exponent(F, P) == u_max(F) + 1
