"""Finite groups given by an explicit Cayley table, plus the small presets
needed by the audits."""
from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from . import linalg


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Elements are indices 0..n-1; ``table[a][b]`` is the index of a*b."""

    name: str
    elements: tuple[Hashable, ...]
    table: tuple[tuple[int, ...], ...]
    named: dict = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.elements)
        if n == 0 or len(self.table) != n or any(len(r) != n for r in self.table):
            raise GroupError("table must be square and match the element list")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise GroupError("table is not closed")
        ident = [e for e in range(n) if all(self.table[e][a] == a == self.table[a][e] for a in range(n))]
        if not ident:
            raise GroupError("no identity element")
        object.__setattr__(self, "_identity", ident[0])
        for a in range(n):
            if ident[0] not in self.table[a]:
                raise GroupError(f"{self.elements[a]!r} has no inverse")
        t = self.table
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError("operation is not associative")
        inv = tuple(t[a].index(ident[0]) for a in range(n))
        object.__setattr__(self, "_inverse", inv)

    @classmethod
    def from_operation(cls, name: str, elements: Iterable, op: Callable, named=None) -> FiniteGroup:
        elements = tuple(elements)
        index = {x: i for i, x in enumerate(elements)}
        try:
            table = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
        except KeyError as exc:
            raise GroupError(f"product {exc} leaves the element set") from None
        named = {k: index[v] for k, v in (named or {}).items()}
        return cls(name, elements, table, named)

    @classmethod
    def generated(cls, name: str, generators: Sequence, op: Callable, named=None) -> FiniteGroup:
        """Close ``generators`` under ``op``; elements are listed in BFS order."""
        seen = list(dict.fromkeys(generators))
        seen_set = set(seen)
        queue = deque(seen)
        while queue:
            a = queue.popleft()
            for g in generators:
                b = op(a, g)
                if b not in seen_set:
                    seen_set.add(b)
                    seen.append(b)
                    queue.append(b)
        return cls.from_operation(name, seen, op, named)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return self._identity

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        out = self.identity
        if k < 0:
            a, k = self.inv(a), -k
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def index_of(self, element) -> int:
        return self.elements.index(element)

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        out = {self.identity}
        queue = deque([self.identity])
        gens = list(gens)
        while queue:
            a = queue.popleft()
            for g in gens:
                b = self.mul(a, g)
                if b not in out:
                    out.add(b)
                    queue.append(b)
        return frozenset(out)

    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by element order (deterministic)."""
        by_order = sorted(range(self.order), key=lambda a: (-self.element_order(a), a))
        gens: list[int] = []
        current = frozenset([self.identity])
        while len(current) < self.order:
            best = max(
                (a for a in by_order if a not in current),
                key=lambda a: (len(self.closure(gens + [a])), -by_order.index(a)),
            )
            gens.append(best)
            current = self.closure(gens)
        return tuple(gens)

    def conjugacy_classes(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        out = []
        for a in range(self.order):
            if a in seen:
                continue
            cls = frozenset(self.mul(self.mul(g, a), self.inv(g)) for g in range(self.order))
            seen |= cls
            out.append(cls)
        return out

    def is_subgroup(self, H: Iterable[int]) -> bool:
        H = frozenset(H)
        return self.identity in H and all(self.mul(a, self.inv(b)) in H for a in H for b in H)

    def is_normal(self, H: Iterable[int]) -> bool:
        H = frozenset(H)
        return self.is_subgroup(H) and all(
            self.mul(self.mul(g, h), self.inv(g)) in H for g in range(self.order) for h in H
        )

    def subgroups(self) -> list[frozenset[int]]:
        """Every subgroup, by joining cyclic subgroups until nothing new appears."""
        cyclic = {self.closure([a]) for a in range(self.order)}
        subs = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            fresh = set()
            for H in frontier:
                for C in cyclic:
                    if C <= H:
                        continue
                    J = self.closure(H | C)
                    if J not in subs:
                        fresh.add(J)
            subs |= fresh
            frontier = fresh
        return sorted(subs, key=lambda H: (len(H), sorted(H)))

    def subgroup(self, H: Iterable[int], name: str = "") -> FiniteGroup:
        H = sorted(frozenset(H))
        if not self.is_subgroup(H):
            raise GroupError("not a subgroup")
        pos = {a: i for i, a in enumerate(H)}
        table = tuple(tuple(pos[self.mul(a, b)] for b in H) for a in H)
        return FiniteGroup(name or f"sub({self.name})", tuple(self.elements[a] for a in H), table)

    def commutator_subgroup(self, H: Iterable[int] | None = None) -> frozenset[int]:
        H = list(range(self.order)) if H is None else list(H)
        comms = {self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b)) for a in H for b in H}
        return self.closure(comms)

    def is_solvable_subgroup(self, H: Iterable[int]) -> bool:
        H = frozenset(H)
        while len(H) > 1:
            D = self.commutator_subgroup(H)
            if D == H:
                return False
            H = D
        return True

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(a))

    def quotient(self, N: Iterable[int], name: str = "") -> FiniteGroup:
        N = frozenset(N)
        if not self.is_normal(N):
            raise GroupError("kernel is not a normal subgroup")
        coset_of = {}
        reps = []
        for a in range(self.order):
            if a in coset_of:
                continue
            coset = frozenset(self.mul(a, n) for n in N)
            for x in coset:
                coset_of[x] = len(reps)
            reps.append(a)
        table = tuple(tuple(coset_of[self.mul(a, b)] for b in reps) for a in reps)
        return FiniteGroup(name or f"{self.name}/N", tuple(range(len(reps))), table)

    def order_profile(self) -> Counter:
        return Counter(self.element_order(a) for a in range(self.order))


def extend_homomorphism(G: FiniteGroup, gens: Sequence[int], images: Sequence, mul: Callable, one) -> list | None:
    """Extend generator images along the Cayley graph; None if inconsistent."""
    phi: list = [None] * G.order
    phi[G.identity] = one
    queue = deque([G.identity])
    while queue:
        a = queue.popleft()
        for g, img in zip(gens, images):
            b = G.mul(a, g)
            val = mul(phi[a], img)
            if phi[b] is None:
                phi[b] = val
                queue.append(b)
            elif phi[b] != val:
                return None
    if any(x is None for x in phi):
        raise GroupError("generators do not generate the group")
    return phi


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    if G.order != H.order or G.order_profile() != H.order_profile():
        return False
    gens = G.generators()
    by_order: dict[int, list[int]] = {}
    for h in range(H.order):
        by_order.setdefault(H.element_order(h), []).append(h)
    pools = [by_order.get(G.element_order(g), []) for g in gens]
    for images in itertools.product(*pools):
        phi = extend_homomorphism(G, gens, images, H.mul, H.identity)
        if phi is not None and len(set(phi)) == H.order:
            return True
    return False


def quotient_isomorphic(G: FiniteGroup, kernel: Iterable[int], target: FiniteGroup) -> bool:
    """G / kernel  ~=  target (kernel must be normal)."""
    if G.order > 10**4:
        raise GroupError("group too large for brute force")
    return is_isomorphic(G.quotient(kernel), target)


def conjugacy_data(G: FiniteGroup) -> list[tuple[int, int]]:
    """(class size, element order) per class, sorted by (order, size)."""
    data = [(len(c), G.element_order(min(c))) for c in G.conjugacy_classes()]
    return sorted(data, key=lambda sc: (sc[1], sc[0]))


def p_regular_class_count(G: FiniteGroup, p: int) -> int:
    return sum(1 for c in G.conjugacy_classes() if G.element_order(min(c)) % p)


def normal_subgroup_orders(G: FiniteGroup) -> list[int]:
    return sorted({len(H) for H in G.subgroups() if G.is_normal(H)})


def normal_cyclic_subgroup_orders(G: FiniteGroup) -> list[int]:
    return sorted(
        {len(H) for H in G.subgroups() if G.is_normal(H) and any(G.element_order(a) == len(H) for a in H)}
    )


def solvable_subgroup_caps(G: FiniteGroup) -> tuple[int, int]:
    """(largest solvable subgroup order, largest normal cyclic subgroup of a solvable subgroup)."""
    if G.order > 120:
        raise GroupError("group too large for exhaustive subgroup search")
    subs = G.subgroups()
    solvable = [H for H in subs if G.is_solvable_subgroup(H)]
    best_solvable = max(len(H) for H in solvable)
    best_cyclic = 1
    for S in solvable:
        for C in subs:
            if len(C) <= best_cyclic or not C <= S:
                continue
            if any(G.element_order(a) == len(C) for a in C) and all(
                G.mul(G.mul(s, c), G.inv(s)) in C for s in S for c in C
            ):
                best_cyclic = len(C)
    return best_solvable, best_cyclic


def non_abelian_small_subgroups(G: FiniteGroup, max_order: int) -> list[FiniteGroup]:
    return [G.subgroup(H) for H in G.subgroups() if len(H) <= max_order and not G.subgroup(H).is_abelian()]


# --- presets -------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup.from_operation(f"C{n}", range(n), lambda a, b: (a + b) % n, {"g": 1 % n})


def metacyclic(name: str, m: int, r: int, k: int = 2) -> FiniteGroup:
    """<s, t : s^m = t^k = 1, t s t^-1 = s^r>, elements (a, b) = s^a t^b."""
    if pow(r, k, m) != 1 % m:
        raise GroupError("r^k must be 1 mod m")

    def op(x, y):
        a, b = x
        c, d = y
        return ((a + c * pow(r, b, m)) % m, (b + d) % k)

    elems = [(a, b) for b in range(k) for a in range(m)]
    return FiniteGroup.from_operation(name, elems, op, {"s": (1 % m, 0), "t": (0, 1 % k)})


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    return metacyclic(f"D{n}" if n != 4 else "D4", n, n - 1)


def semihedral16() -> FiniteGroup:
    """<s, t : s^8 = t^2 = 1, s t = t s^3>."""
    return metacyclic("SH16", 8, 3)


def _perm_mul(a, b):
    # apply b first, then a
    return tuple(a[b[i]] for i in range(len(b)))


def _parity(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def symmetric(n: int) -> FiniteGroup:
    return FiniteGroup.from_operation(f"S{n}", itertools.permutations(range(n)), _perm_mul)


def alternating(n: int) -> FiniteGroup:
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return FiniteGroup.from_operation(f"A{n}", perms, _perm_mul)


def s3_presented() -> FiniteGroup:
    """S3 with named generators sigma (order 3) and tau (order 2), tau sigma tau = sigma^2."""
    G = FiniteGroup.from_operation(
        "S3",
        itertools.permutations(range(3)),
        _perm_mul,
        {"sigma": (1, 2, 0), "tau": (1, 0, 2)},
    )
    return G


def general_linear_group(n: int, p: int) -> FiniteGroup:
    return FiniteGroup.from_operation(
        f"GL{n}_F{p}", linalg.general_linear(n, p), lambda a, b: linalg.mat_mul(a, b, p)
    )


def matrix_group(name: str, generators: Sequence, p: int) -> FiniteGroup:
    return FiniteGroup.generated(name, [tuple(map(tuple, g)) for g in generators], lambda a, b: linalg.mat_mul(a, b, p))


PRESETS: dict[str, Callable[[], FiniteGroup]] = {
    "C1": lambda: cyclic(1),
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "S3": s3_presented,
    "D3": lambda: dihedral(3),
    "D4": lambda: dihedral(4),
    "D5": lambda: dihedral(5),
    "SH16": semihedral16,
    "A4": lambda: alternating(4),
    "A5": lambda: alternating(5),
    "GL2_F2": lambda: general_linear_group(2, 2),
    "GL2_F3": lambda: general_linear_group(2, 3),
}


def preset(name: str) -> FiniteGroup:
    try:
        return PRESETS[name]()
    except KeyError:
        raise GroupError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None


def element_from_word(G: FiniteGroup, word: str) -> int:
    """Evaluate a word like ``"s^4"`` or ``"s t s^-1"`` in the named generators."""
    out = G.identity
    for tok in word.split():
        name, _, exp = tok.partition("^")
        if name not in G.named:
            raise GroupError(f"{G.name} has no generator named {name!r}")
        out = G.mul(out, G.power(G.named[name], int(exp) if exp else 1))
    return out
