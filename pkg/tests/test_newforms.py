from __future__ import annotations

import time
from fractions import Fraction

import pytest

from ramaudit.newforms import (
    TABLE_ONE,
    LocalCase,
    NewformDataError,
    NewformRecord,
    ThresholdExceeded,
    below_threshold,
    classify_table,
    level_exponent_bound,
    max_level_exponent,
    newform_level_of_ram,
    surviving_newforms,
    table_record,
)


def test_level_examples():
    assert newform_level_of_ram(table_record("32A")) == Fraction(3, 2)
    assert newform_level_of_ram(table_record("27A")) == Fraction(1, 2)
    assert newform_level_of_ram(table_record("81E")) == 3
    assert newform_level_of_ram(NewformRecord("x", 2, 5, LocalCase.IRREDUCIBLE)) == Fraction(3, 2)


@pytest.mark.parametrize("a, u", [(0, 0), (1, 0), (2, 1)])
def test_special_case(a, u):
    assert newform_level_of_ram(NewformRecord("sp", 3, 2, LocalCase.SPECIAL, a_chi=a)) == u


def test_decomposable_requires_exponent_sum():
    with pytest.raises(NewformDataError):
        NewformRecord("bad", 2, 4, LocalCase.DECOMPOSABLE, a_chi=1, a_eps_chi=1)
    with pytest.raises(NewformDataError):
        NewformRecord("bad", 2, 1, LocalCase.IRREDUCIBLE)


def test_level_exponent_bound_examples():
    assert level_exponent_bound(Fraction(3, 2)) == 5
    assert level_exponent_bound(0) == 2
    assert level_exponent_bound(7, ramified=False) == 2


def test_classify_table_selected_rows():
    table = dict(classify_table())
    assert len(table) == 19
    assert table["49A"] == 0 and table["64A"] == 2 and table["16A"] == 3
    assert table["32A"] == Fraction(3, 2) and table["81E"] == 3


@pytest.mark.parametrize("rec, printed", TABLE_ONE, ids=[r.label for r, _ in TABLE_ONE])
def test_every_row(rec, printed):
    u = newform_level_of_ram(rec)
    assert u == printed
    assert level_exponent_bound(u, ramified=u >= 0) >= rec.n


def test_cutoffs():
    got = {p: max_level_exponent(p) for p in (2, 3, 5, 7)}
    assert [got[p].n_max for p in (2, 3, 5, 7)] == [6, 4, 2, 2]
    assert [got[p].ell for p in (2, 3, 5, 7)] == [3, 2, 2, 2]
    c3 = got[3]
    # exact cutoff log_3(42/4) - 1 = 1.1402... lies in [1.140, 1.141]
    assert (c3.i_low, c3.i_high) == (Fraction(1140, 1000), Fraction(1141, 1000))
    assert c3.i_high - c3.i_low == Fraction(1, 1000)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_cutoff_matches_exhaustive_scan(p):
    allowed = [n for n in range(2, 13) if below_threshold(p, Fraction(n, 2) - 1)]
    assert max(allowed) == max_level_exponent(p).n_max
    assert allowed == list(range(2, max(allowed) + 1))


def test_threshold_exceeded():
    with pytest.raises(ThresholdExceeded):
        max_level_exponent(11, threshold=10)


def test_survivors_contain_the_four_named_forms():
    survivors = surviving_newforms()
    assert {"32A", "27A", "49A", "49B"} <= set(survivors)
    # 64A: 3^(3/2) 2^3 < 42 and 81A: 2^2 3^2 = 36 < 42 also pass the exact test
    assert below_threshold(2, 2) and below_threshold(3, 1)


def test_table_is_fast():
    start = time.perf_counter()
    classify_table()
    assert time.perf_counter() - start < 1
