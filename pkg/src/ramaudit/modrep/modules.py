"""Brute-force F_p[G]-module facts: irreducible modules, 2-dimensional
embeddings, semisimplicity over F_2[S_3] and fixed spaces of 3-groups."""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .groups import FiniteGroup, GroupError, extend_homomorphism, p_regular_class_count
from .linalg import Matrix


class ModuleError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class MatrixModule:
    """A representation G -> GL_dim(F_p) given on a generating set."""

    group: FiniteGroup
    p: int
    dim: int
    generators: tuple[int, ...]
    images: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.generators) != len(self.images):
            raise ModuleError("one image per generator")
        for m in self.images:
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise ModuleError("image has the wrong shape")
            if linalg.rank(m, self.p) != self.dim:
                raise ModuleError("generator image is not invertible")
        if self.action() is None:
            raise ModuleError("generator images violate the group's relations")

    @classmethod
    def on_named(cls, group: FiniteGroup, p: int, images: dict[str, Sequence]) -> MatrixModule:
        gens = tuple(group.named[k] for k in images)
        mats = tuple(tuple(tuple(int(x) % p for x in row) for row in m) for m in images.values())
        return cls(group, p, len(mats[0]), gens, mats)

    def action(self) -> list[Matrix] | None:
        p = self.p
        return extend_homomorphism(
            self.group, self.generators, self.images, lambda a, b: linalg.mat_mul(a, b, p), linalg.identity(self.dim)
        )

    def submodule_generated(self, vectors) -> frozenset:
        p = self.p
        out = set(linalg.span(vectors, p))
        queue = list(out)
        while queue:
            v = queue.pop()
            for m in self.images:
                w = linalg.mat_vec(m, v, p)
                if w not in out:
                    # close under addition as well as the action
                    new = linalg.span(list(linalg.canonical_basis(list(out), p)) + [w], p)
                    queue.extend(new - out)
                    out |= new
        return frozenset(out)

    def submodules(self) -> list[frozenset]:
        """Every invariant subspace (as a set of vectors)."""
        if self.p ** self.dim > 4096:
            raise PreconditionError("module too large for subspace enumeration")
        found = {frozenset([tuple([0] * self.dim)])}
        frontier = set(found)
        vectors = [v for v in linalg.all_vectors(self.dim, self.p) if any(v)]
        while frontier:
            fresh = set()
            for W in frontier:
                for v in vectors:
                    if v in W:
                        continue
                    U = self.submodule_generated(list(W) + [v])
                    if U not in found:
                        fresh.add(U)
            found |= fresh
            frontier = fresh
        return sorted(found, key=len)

    def is_irreducible(self) -> bool:
        full = self.p**self.dim
        return all(
            len(self.submodule_generated([v])) == full for v in linalg.all_vectors(self.dim, self.p) if any(v)
        )


def hom_dimension(a: MatrixModule, b: MatrixModule) -> int:
    """dim_Fp Hom_G(a, b): X with X a(s) = b(s) X for every generator s."""
    if a.group is not b.group or a.generators != b.generators or a.p != b.p:
        raise ModuleError("modules must share group, generators and field")
    p, da, db = a.p, a.dim, b.dim
    rows = []
    for A, B in zip(a.images, b.images):
        # unknown X is db x da, flattened row-major
        for i in range(db):
            for j in range(da):
                row = [0] * (db * da)
                for k in range(da):
                    row[i * da + k] += A[k][j]
                for k in range(db):
                    row[k * da + j] -= B[i][k]
                rows.append([x % p for x in row])
    return len(linalg.nullspace(rows, db * da, p))


def _candidate_images(G: FiniteGroup, gens, dim: int, p: int):
    pool: dict[int, list[Matrix]] = {}
    for m in linalg.general_linear(dim, p):
        pool.setdefault(linalg.matrix_order(m, p), []).append(m)
    out = []
    for g in gens:
        k = G.element_order(g)
        out.append([m for o, ms in sorted(pool.items()) if k % o == 0 for m in ms])
    return out


def representations(G: FiniteGroup, dim: int, p: int, gens=None):
    """Every homomorphism G -> GL_dim(F_p), as MatrixModules on ``gens``."""
    gens = tuple(gens or G.generators())
    one = linalg.identity(dim)
    mul = lambda a, b: linalg.mat_mul(a, b, p)  # noqa: E731
    for images in itertools.product(*_candidate_images(G, gens, dim, p)):
        if extend_homomorphism(G, gens, images, mul, one) is not None:
            yield MatrixModule(G, p, dim, gens, tuple(images))


@dataclass(frozen=True)
class IrreducibleModule:
    module: MatrixModule
    end_dim: int

    @property
    def dim(self) -> int:
        return self.module.dim


def irreducible_modules(G: FiniteGroup, p: int, max_dim: int = 4) -> list[IrreducibleModule]:
    """All irreducible F_p[G]-modules up to isomorphism.

    Completeness: each irreducible M splits over the algebraic closure into
    dim End(M) absolutely irreducible pieces, and the latter are counted by
    the p-regular conjugacy classes.
    """
    target = p_regular_class_count(G, p)
    gens = G.generators()
    found: list[IrreducibleModule] = []
    total = 0
    for dim in range(1, max_dim + 1):
        if total == target:
            break
        for M in representations(G, dim, p, gens):
            if not M.is_irreducible():
                continue
            if any(f.dim == dim and hom_dimension(f.module, M) for f in found):
                continue
            end = hom_dimension(M, M)
            found.append(IrreducibleModule(M, end))
            total += end
            if total == target:
                break
    if total != target:
        raise PreconditionError(f"irreducibles of dimension <= {max_dim} do not account for all {target} classes")
    return found


def degree_partition_check(G: FiniteGroup, p: int, max_dim: int = 4) -> list[int]:
    """Degrees of the absolutely irreducible modules, sorted.

    An F_p-irreducible with endomorphism field F_{p^k} contributes k
    absolutely irreducible constituents of degree dim/k.
    """
    degrees = []
    for irr in irreducible_modules(G, p, max_dim):
        degrees += [irr.dim // irr.end_dim] * irr.end_dim
    return sorted(degrees)


def fp_irreducible_degrees(G: FiniteGroup, p: int, max_dim: int = 4) -> list[int]:
    return sorted(irr.dim for irr in irreducible_modules(G, p, max_dim))


@dataclass(frozen=True)
class Embedding:
    images: tuple[Matrix, ...]
    traces_by_order: dict[int, frozenset[int]]


def embeddings_in_GL2(G: FiniteGroup, q: int) -> list[Embedding]:
    """Faithful representations G -> GL_2(F_q) up to conjugacy, with traces per element order.

    Traces are reported as signed residues, so -1 rather than q-1.
    """
    if G.order > len(linalg.general_linear(2, q)):
        return []
    gens = G.generators()
    out: list[Embedding] = []
    kept: list[MatrixModule] = []
    for M in representations(G, 2, q, gens):
        act = M.action()
        if len(set(act)) != G.order:
            continue
        if any(_conjugate(M, K) for K in kept):
            continue
        kept.append(M)
        traces: dict[int, set[int]] = {}
        for g, m in enumerate(act):
            traces.setdefault(G.element_order(g), set()).add(linalg.signed(linalg.trace(m, q), q))
        out.append(Embedding(M.images, {k: frozenset(v) for k, v in sorted(traces.items())}))
    return out


def _conjugate(a: MatrixModule, b: MatrixModule) -> bool:
    p = a.p
    for X in linalg.general_linear(a.dim, p):
        if all(linalg.mat_mul(X, A, p) == linalg.mat_mul(B, X, p) for A, B in zip(a.images, b.images)):
            return True
    return False


# --- F_2[S_3] ---------------------------------------------------------------


def _s3_images(M: MatrixModule):
    G = M.group
    if "sigma" not in G.named or "tau" not in G.named:
        raise ModuleError("module must be over the presented S3 (generators sigma, tau)")
    act = M.action()
    return act[G.named["sigma"]], act[G.named["tau"]]


@dataclass(frozen=True)
class S3ModuleReport:
    semisimple: bool
    simple_submodule_count: int
    sigma_trivial_simple_count: int
    split_dims: tuple[int, int]


def _poly_in_sigma(sigma: Matrix, coeffs: Sequence[int], p: int) -> Matrix:
    n = len(sigma)
    acc = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    power = linalg.identity(n)
    for c in coeffs:
        acc = tuple(tuple((x + c * y) % p for x, y in zip(r, s)) for r, s in zip(acc, power))
        power = linalg.mat_mul(power, sigma, p)
    return acc


def analyse_f2s3(M: MatrixModule) -> S3ModuleReport:
    if M.p != 2:
        raise ModuleError("F_2 modules only")
    if M.dim > 6:
        raise PreconditionError("dimension at most 6")
    sigma, _ = _s3_images(M)
    subs = M.submodules()
    nonzero = [W for W in subs if len(W) > 1]
    simple = [W for W in nonzero if not any(1 < len(U) < len(W) and U < W for U in nonzero)]
    socle = M.submodule_generated([v for W in simple for v in W])
    sigma_trivial = [W for W in simple if all(linalg.mat_vec(sigma, v, 2) == v for v in W)]
    # T / (sigma - 1)T and T / (sigma^2 + sigma + 1)T
    img1 = linalg.rank(_poly_in_sigma(sigma, [1, 1], 2), 2)
    img2 = linalg.rank(_poly_in_sigma(sigma, [1, 1, 1], 2), 2)
    split = (M.dim - img1, M.dim - img2)
    return S3ModuleReport(len(socle) == 2**M.dim, len(simple), len(sigma_trivial), split)


def is_semisimple_f2s3(M: MatrixModule) -> bool:
    return analyse_f2s3(M).semisimple


def sigma_split_holds(M: MatrixModule) -> bool:
    """T ~= T/(sigma-1)T x T/(sigma^2+sigma+1)T, checked on dimensions."""
    a, b = analyse_f2s3(M).split_dims
    return a + b == M.dim


# --- fixed spaces of 3-groups -----------------------------------------------


@dataclass(frozen=True)
class FixedSpace:
    dim: int
    fixed_count: int
    group_order: int
    nontrivial: bool
    orbit_congruence: bool

    @property
    def hypothesis_ok(self) -> bool:
        return self.nontrivial


def fixed_space_dim(generators: Sequence[Matrix], dim: int) -> FixedSpace:
    """Common fixed subspace over F_2 of a 3-group, with the orbit count check."""
    gens = [tuple(tuple(int(x) % 2 for x in r) for r in g) for g in generators]
    if any(len(g) != dim for g in gens):
        raise ModuleError("generator size does not match dim")
    one = linalg.identity(dim)
    elems = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = linalg.mat_mul(a, g, 2)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
                    if len(elems) > 3**8:
                        raise PreconditionError("generated group is too large")
        frontier = nxt
    order = len(elems)
    while order % 3 == 0:
        order //= 3
    if order != 1:
        raise PreconditionError(f"generated group has order {len(elems)}, not a power of 3")
    rows = [list(r) for g in gens for r in linalg.mat_sub(g, one, 2)]
    fixed_dim = len(linalg.nullspace(rows, dim, 2)) if rows else dim
    # orbit decomposition of V: singleton orbits are exactly V^G
    seen: set = set()
    singletons = 0
    for v in linalg.all_vectors(dim, 2):
        if v in seen:
            continue
        orbit = {linalg.mat_vec(m, v, 2) for m in elems}
        seen |= orbit
        if len(orbit) == 1:
            singletons += 1
        elif len(orbit) % 3:
            raise AssertionError("orbit size is not a power of 3")
    if singletons != 2**fixed_dim:
        raise AssertionError("orbit count disagrees with the fixed-space dimension")
    nontrivial = len(elems) > 1
    if not nontrivial:
        warnings.warn("the group acts trivially; the non-triviality hypothesis fails", stacklevel=2)
    return FixedSpace(fixed_dim, singletons, len(elems), nontrivial, singletons % 3 == 2 ** dim % 3)
