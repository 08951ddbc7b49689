"""Small dense matrices over F_p, stored as tuples of row tuples."""
from __future__ import annotations

import itertools
from functools import lru_cache

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a)


def mat_vec(a: Matrix, v: Vector, p: int) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def mat_sub(a: Matrix, b: Matrix, p: int) -> Matrix:
    return tuple(tuple((x - y) % p for x, y in zip(r, s)) for r, s in zip(a, b))


def trace(a: Matrix, p: int) -> int:
    return sum(a[i][i] for i in range(len(a))) % p


def signed(x: int, p: int) -> int:
    """Representative of x mod p in (-p/2, p/2]."""
    x %= p
    return x - p if x > p // 2 else x


def rref(rows: list[list[int]], p: int) -> list[list[int]]:
    """Reduced row echelon form with zero rows dropped."""
    m = [list(r) for r in rows]
    out, col = [], 0
    ncols = len(m[0]) if m else 0
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] % p), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] % p:
                c = m[i][col]
                m[i] = [(x - c * y) % p for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    out = [row for row in m[:r]]
    return out


def rank(rows, p: int) -> int:
    rows = [list(r) for r in rows]
    return len(rref(rows, p)) if rows else 0


def nullspace(rows, ncols: int, p: int) -> list[Vector]:
    """Basis of {x : A x = 0}."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    r = rref([list(x) for x in rows], p)
    pivots = []
    for row in r:
        pivots.append(next(j for j, x in enumerate(row) if x))
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(r, pivots):
            v[pc] = (-row[f]) % p
        basis.append(tuple(v))
    return basis


def span(vectors, p: int) -> frozenset[Vector]:
    """All F_p-combinations of ``vectors``."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return frozenset()
    n = len(vectors[0])
    out = {tuple([0] * n)}
    for v in vectors:
        out |= {tuple((x + c * y) % p for x, y in zip(w, v)) for w in out for c in range(1, p)}
    return frozenset(out)


def canonical_basis(vectors, p: int) -> tuple[Vector, ...]:
    vs = [list(v) for v in vectors]
    return tuple(tuple(r) for r in rref(vs, p)) if vs else ()


@lru_cache(maxsize=None)
def general_linear(n: int, p: int) -> tuple[Matrix, ...]:
    out = []
    for entries in itertools.product(range(p), repeat=n * n):
        m = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if rank(m, p) == n:
            out.append(m)
    return tuple(out)


def matrix_order(m: Matrix, p: int, limit: int = 10**5) -> int:
    ident = identity(len(m))
    acc, k = m, 1
    while acc != ident:
        acc = mat_mul(acc, m, p)
        k += 1
        if k > limit:
            raise ValueError("matrix is not invertible or its order is too large")
    return k


def all_vectors(n: int, p: int):
    return itertools.product(range(p), repeat=n)


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    rows, off = [], 0
    for b in blocks:
        k = len(b)
        for r in b:
            rows.append(tuple([0] * off + list(r) + [0] * (n - off - k)))
        off += k
    return tuple(rows)


def inverse(m: Matrix, p: int) -> Matrix:
    n = len(m)
    aug = [list(r) + list(e) for r, e in zip(m, identity(n))]
    r = rref(aug, p)
    if len(r) < n or any(r[i][i] != 1 for i in range(n)):
        raise ValueError("singular matrix")
    return tuple(tuple(row[n:]) for row in r)
