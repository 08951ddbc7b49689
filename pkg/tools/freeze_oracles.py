"""Compute oracle values with independent libraries and freeze them for the tests.

Radicals are evaluated with mpmath at high precision; group data comes from
sympy's permutation groups rather than the package's own multiplication tables.
"""
from __future__ import annotations

import json
from collections import Counter
from pathlib import Path

import mpmath
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, CyclicGroup, DihedralGroup, SymmetricGroup

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "oracles.json"

RADICALS = {
    "2:5/2,3:3/2": [(2, 5, 2), (3, 3, 2)],
    "2:2,3:3/2": [(2, 2, 1), (3, 3, 2)],
    "2:102/48,3:64/48": [(2, 102, 48), (3, 64, 48)],
    "2:245/96,3:124/96": [(2, 245, 96), (3, 124, 96)],
    "2:2,7:1": [(2, 2, 1), (7, 1, 1)],
    "2:2,7:29/30": [(2, 2, 1), (7, 29, 30)],
    "2:7/4,7:5/6": [(2, 7, 4), (7, 5, 6)],
    "2:1,7:5/6": [(2, 1, 1), (7, 5, 6)],
}


def radical_values(dps: int = 60) -> dict[str, str]:
    mpmath.mp.dps = dps + 10
    out = {}
    for text, factors in RADICALS.items():
        v = mpmath.mpf(1)
        for p, num, den in factors:
            v *= mpmath.power(p, mpmath.mpf(num) / den)
        out[text] = mpmath.nstr(v, dps, strip_zeros=False)
    return out


def semidihedral16() -> PermutationGroup:
    # affine maps of Z/8: a(x) = x + 1, b(x) = 3x
    a = Permutation([(x + 1) % 8 for x in range(8)])
    b = Permutation([(3 * x) % 8 for x in range(8)])
    return PermutationGroup([a, b])


def class_data(G: PermutationGroup) -> list[list[int]]:
    data = [(len(c), int(next(iter(c)).order())) for c in G.conjugacy_classes()]
    return [list(x) for x in sorted(data, key=lambda sc: (sc[1], sc[0]))]


def normal_orders(G: PermutationGroup) -> list[int]:
    orders = set()
    elems = list(G.elements)
    # every normal subgroup is a union of classes generated by them; scan subgroups generated by pairs
    seen = set()
    for x in elems:
        for y in elems:
            H = PermutationGroup([x, y])
            key = frozenset(H.elements)
            if key in seen:
                continue
            seen.add(key)
            if H.is_normal(G):
                orders.add(int(H.order()))
    return sorted(orders)


def group_data() -> dict[str, dict]:
    groups = {
        "C3": CyclicGroup(3),
        "S3": SymmetricGroup(3),
        "D4": DihedralGroup(4),
        "D5": DihedralGroup(5),
        "A4": AlternatingGroup(4),
        "A5": AlternatingGroup(5),
        "SH16": semidihedral16(),
    }
    out = {}
    for name, G in groups.items():
        entry = {"order": int(G.order()), "classes": class_data(G)}
        if G.order() <= 20:
            entry["normal_orders"] = normal_orders(G)
        entry["order_profile"] = {str(k): v for k, v in sorted(Counter(int(g.order()) for g in G.elements).items())}
        out[name] = entry
    return out


def main() -> None:
    data = {"radicals_60_digits": radical_values(), "groups": group_data()}
    OUT.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
