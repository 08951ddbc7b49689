from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ramaudit.exact import FactoredRadical
from ramaudit.filtration import RamFiltration

settings.register_profile("ci", deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example])
settings.load_profile("ci")

DATA = Path(__file__).parent / "data"
SMALL_PRIMES = [p for p in range(2, 100) if all(p % q for q in range(2, p))]


@pytest.fixture(scope="session")
def oracles() -> dict:
    return json.loads((DATA / "oracles.json").read_text())


@st.composite
def filtrations(draw, max_len: int = 8, max_order: int = 64, allow_unramified: bool = False):
    """Lower filtrations g_0 = t p^k, then non-increasing p-powers, all orders <= max_order."""
    p = draw(st.sampled_from([2, 3, 5]))
    tame_choices = [t for t in range(1, max_order + 1) if t % p]
    k0 = draw(st.integers(0, 6))
    while p**k0 > max_order:
        k0 -= 1
    t = draw(st.sampled_from([t for t in tame_choices if t * p**k0 <= max_order]))
    length = draw(st.integers(1, max_len))
    ks = sorted(draw(st.lists(st.integers(0, k0), min_size=length - 1, max_size=length - 1)), reverse=True)
    orders = [t * p**k0] + [p**k for k in ks]
    if orders[0] == 1:
        if not allow_unramified:
            orders[0] = p
        return RamFiltration(tuple(orders), total_group_order=2 if orders[0] == 1 else 0)
    return RamFiltration(tuple(orders))


# divisors of 96 and 90 keep every lcm of denominators at most 1440
DENOMINATORS = sorted({d for n in (96, 90) for d in range(1, n + 1) if n % d == 0})


def exponents(max_den: int = 96, bound: int = 5):
    dens = [d for d in DENOMINATORS if d <= max_den]
    return st.sampled_from(dens).flatmap(
        lambda d: st.integers(-bound * d, bound * d).map(lambda n: Fraction(n, d))
    )


@st.composite
def radicals(draw, max_den: int = 96, max_primes: int = 4, positive: bool = False):
    primes = draw(st.lists(st.sampled_from(SMALL_PRIMES), max_size=max_primes, unique=True))
    exps = [draw(exponents(max_den)) for _ in primes]
    if positive:
        exps = [abs(e) for e in exps]
    return FactoredRadical(zip(primes, exps))


def rationals(lo: int = -1, hi: int = 12, max_den: int = 48):
    return st.builds(Fraction, st.integers(lo * max_den, hi * max_den), st.just(max_den)).map(Fraction)


def pytest_terminal_summary(terminalreporter):
    lines = getattr(sys.modules.get("test_acceptance"), "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
