"""Exact arithmetic on factored radicals  prod p^e  with rational exponents.

Rationals are :class:`fractions.Fraction`.  A :class:`FactoredRadical` maps
prime labels (rational primes, or named prime ideals carrying their residue
characteristic and residue degree) to nonzero rational exponents.  Every
comparison is decided on arbitrary-precision integers; floating point is
used only to seed the search in :func:`radical_approx`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Union

from sympy import integer_nthroot, isprime


class ArithmeticDomainError(ValueError):
    pass


class LabelConflictError(ValueError):
    pass


class UnnormalizedLabelError(ValueError):
    pass


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"malformed rational {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot read {type(value).__name__} as an exact rational")


@dataclass(frozen=True, order=True)
class IdealLabel:
    """An opaque prime-ideal name with residue characteristic ``p`` and degree ``f``."""

    name: str
    p: int
    f: int = 1

    def __post_init__(self):
        if not self.name:
            raise ValueError("ideal label needs a name")
        if not isprime(self.p):
            raise ValueError(f"residue characteristic {self.p} is not prime")
        if self.f < 1:
            raise ValueError("residue degree must be positive")

    def __str__(self):
        return self.name


Label = Union[int, IdealLabel]


def check_label(label) -> Label:
    if isinstance(label, IdealLabel):
        return label
    if isinstance(label, bool) or not isinstance(label, int):
        raise TypeError(f"bad prime label {label!r}")
    if not isprime(label):
        raise ValueError(f"{label} is not prime")
    return label


def _label_name(label: Label) -> str:
    return label.name if isinstance(label, IdealLabel) else str(label)


def _sort_key(label: Label):
    if isinstance(label, IdealLabel):
        return (1, label.p, label.name)
    return (0, label, "")


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class FactoredRadical:
    """Immutable product of prime powers with exact rational exponents."""

    __slots__ = ("_factors", "_hash")

    def __init__(self, factors: Mapping | Iterable = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        clean: dict[Label, Fraction] = {}
        names: dict[str, Label] = {}
        for label, exp in items:
            label = check_label(label)
            exp = as_rational(exp)
            _register(names, label)
            clean[label] = clean.get(label, Fraction(0)) + exp
        self._factors = {k: v for k, v in sorted(clean.items(), key=lambda kv: _sort_key(kv[0])) if v}
        self._hash = None

    @classmethod
    def one(cls) -> FactoredRadical:
        return cls()

    @classmethod
    def parse(cls, text: str, labels: Mapping[str, IdealLabel] | None = None) -> FactoredRadical:
        """Read ``"2:5/2,3:3/2"``; non-numeric names are looked up in ``labels``."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        pairs = []
        for chunk in text.split(","):
            name, sep, exp = chunk.partition(":")
            if not sep:
                raise ValueError(f"expected label:exponent, got {chunk!r}")
            pairs.append((resolve_label(name.strip(), labels), as_rational(exp)))
        return cls(pairs)

    @classmethod
    def from_mapping(cls, data: Mapping[str, object], labels=None) -> FactoredRadical:
        return cls((resolve_label(k, labels), as_rational(v)) for k, v in data.items())

    @property
    def factors(self) -> dict[Label, Fraction]:
        return dict(self._factors)

    def exponent(self, label) -> Fraction:
        if isinstance(label, str):
            for lab in self._factors:
                if _label_name(lab) == label:
                    return self._factors[lab]
            return Fraction(0)
        return self._factors.get(label, Fraction(0))

    def labels(self) -> list[Label]:
        return list(self._factors)

    def is_one(self) -> bool:
        return not self._factors

    def has_ideal_labels(self) -> bool:
        return any(isinstance(k, IdealLabel) for k in self._factors)

    def __mul__(self, other: FactoredRadical) -> FactoredRadical:
        if not isinstance(other, FactoredRadical):
            return NotImplemented
        return radical_mul(self, other)

    def __pow__(self, k) -> FactoredRadical:
        k = as_rational(k)
        return FactoredRadical((lab, e * k) for lab, e in self._factors.items())

    def root(self, n: int) -> FactoredRadical:
        return radical_root(self, n)

    def __eq__(self, other):
        if not isinstance(other, FactoredRadical):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._factors.items()))
        return self._hash

    def __repr__(self):
        return f"FactoredRadical({self.to_text()!r})"

    def __str__(self):
        if not self._factors:
            return "1"
        parts = []
        for lab, e in self._factors.items():
            name = _label_name(lab)
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def to_text(self) -> str:
        """Inverse of :meth:`parse`."""
        return ",".join(f"{_label_name(l)}:{e}" for l, e in self._factors.items()) or "1"

    def to_mapping(self) -> dict[str, str]:
        return {_label_name(l): str(e) for l, e in self._factors.items()}


def _register(names: dict[str, Label], label: Label) -> None:
    name = _label_name(label)
    seen = names.get(name)
    if seen is not None and seen != label:
        raise LabelConflictError(f"label {name!r} used for both {seen!r} and {label!r}")
    names[name] = label


def resolve_label(name: str, labels: Mapping[str, IdealLabel] | None = None) -> Label:
    if name.isdigit():
        if labels and name in labels:
            raise LabelConflictError(f"{name!r} is both a rational prime and an ideal label")
        return check_label(int(name))
    if labels is None or name not in labels:
        raise KeyError(f"unregistered prime label {name!r}")
    return labels[name]


def radical_mul(a: FactoredRadical, b: FactoredRadical) -> FactoredRadical:
    return FactoredRadical(list(a.factors.items()) + list(b.factors.items()))


def radical_root(a: FactoredRadical, n: int) -> FactoredRadical:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ArithmeticDomainError(f"root index must be a positive integer, got {n!r}")
    return FactoredRadical((lab, e / n) for lab, e in a.factors.items())


def normalize_ideal_labels(a: FactoredRadical) -> FactoredRadical:
    """Replace each ideal label of residue data (p, f) by p at exponent f*e."""
    out = []
    for lab, e in a.factors.items():
        if isinstance(lab, IdealLabel):
            out.append((lab.p, lab.f * e))
        else:
            out.append((lab, e))
    return FactoredRadical(out)


def _power_parts(a: FactoredRadical) -> tuple[int, int, int]:
    """(L, num, den) with a^L = num/den exactly, L the lcm of exponent denominators."""
    if a.has_ideal_labels():
        raise UnnormalizedLabelError("normalize ideal labels before comparing")
    exps = a.factors
    scale = 1
    for e in exps.values():
        scale = math.lcm(scale, e.denominator)
    num = den = 1
    for p, e in exps.items():
        k = e * scale
        if k > 0:
            num *= pow(p, int(k))
        else:
            den *= pow(p, int(-k))
    return scale, num, den


def _integer_sides(a: FactoredRadical, bound: Fraction) -> tuple[int, int]:
    """Integers (lhs, rhs) with sign(lhs - rhs) = sign(a - bound), bound > 0."""
    scale, num, den = _power_parts(a)
    # a^L = num/den  vs  (bn/bd)^L
    return num * pow(bound.denominator, scale), den * pow(bound.numerator, scale)


def radical_cmp(a: FactoredRadical, bound) -> Ordering:
    """Exact ordering of ``a`` against a positive rational or another radical."""
    if isinstance(bound, FactoredRadical):
        return radical_cmp(radical_mul(a, bound ** -1), Fraction(1))
    bound = as_rational(bound)
    if bound <= 0:
        if bound == 0 and any(e < 0 for e in a.factors.values()):
            raise ArithmeticDomainError("cannot compare negative exponents against a zero bound")
        if a.has_ideal_labels():
            raise UnnormalizedLabelError("normalize ideal labels before comparing")
        return Ordering.GREATER
    lhs, rhs = _integer_sides(a, bound)
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


def exponent_excess(a: FactoredRadical, b: FactoredRadical, strict: bool = True) -> list[Label]:
    """Labels where the exponent in ``a`` breaks the bound given by ``b``.

    With ``strict`` the bound is read as  v(a) < v(b), so equality counts as a
    violation.
    """
    out = []
    for lab in sorted(set(a.labels()) | set(b.labels()), key=_sort_key):
        ea, eb = a.exponent(lab), b.exponent(lab)
        if ea > eb or (strict and ea == eb and lab in a.factors):
            out.append(lab)
    return out


@dataclass(frozen=True)
class Approximation:
    """Decimal rendering of a radical; the true value lies within ``radius`` of ``text``."""

    text: str
    radius: Fraction

    def __str__(self):
        return self.text


def _log10_estimate(a: FactoredRadical) -> float:
    return sum(float(e) * math.log10(p) for p, e in a.factors.items())


def radical_approx(a: FactoredRadical, digits: int = 4) -> Approximation:
    """Round to ``digits`` significant figures, correctly (ties decided exactly)."""
    if not 1 <= digits <= 50:
        raise ArithmeticDomainError("digits must lie in 1..50")
    if a.has_ideal_labels():
        raise UnnormalizedLabelError("normalize ideal labels before approximating")
    mag = math.floor(_log10_estimate(a))
    # exact magnitude: 10^mag <= a < 10^(mag+1)
    while radical_cmp(a, Fraction(10) ** mag) is Ordering.LESS:
        mag -= 1
    while radical_cmp(a, Fraction(10) ** (mag + 1)) is not Ordering.LESS:
        mag += 1
    shift = digits - 1 - mag  # a * 10^shift in [10^(digits-1), 10^digits)
    unit = Fraction(10) ** -shift
    # m = floor(a * 10^shift) via an exact L-th root
    scale, num, den = _power_parts(a)
    if shift >= 0:
        num *= 10 ** (shift * scale)
    else:
        den *= 10 ** (-shift * scale)
    m = integer_nthroot(num // den, scale)[0]
    # now m*unit <= a < (m+1)*unit
    half = radical_cmp(a, (m + Fraction(1, 2)) * unit)
    if half is Ordering.GREATER or (half is Ordering.EQUAL and m % 2):
        m += 1
    return Approximation(_format_scaled(m, shift), unit / 2)


def _format_scaled(m: int, shift: int) -> str:
    if shift <= 0:
        return str(m * 10 ** (-shift))
    sign = "-" if m < 0 else ""
    s = str(abs(m)).rjust(shift + 1, "0")
    return f"{sign}{s[:-shift]}.{s[-shift:]}"
