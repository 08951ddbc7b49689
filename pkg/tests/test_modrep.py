from __future__ import annotations

import itertools
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramaudit.modrep import groups as grp
from ramaudit.modrep import linalg
from ramaudit.modrep import modules as mods
from ramaudit.modrep.groups import GroupError
from ramaudit.modrep.modules import MatrixModule, ModuleError, PreconditionError

SIGMA = ((0, 1), (1, 1))


@pytest.mark.parametrize(
    "name, order", [("SH16", 16), ("S3", 6), ("A5", 60), ("GL2_F3", 48), ("GL2_F2", 6), ("D4", 8), ("A4", 12)]
)
def test_preset_orders(name, order):
    assert grp.preset(name).order == order


def test_unknown_preset():
    with pytest.raises(GroupError):
        grp.preset("nope")


@pytest.mark.parametrize("name", ["C3", "S3", "D4", "D5", "A4", "A5", "SH16"])
def test_conjugacy_data_matches_oracle(name, oracles):
    want = oracles["groups"][name]
    G = grp.preset(name)
    assert G.order == want["order"]
    assert [list(x) for x in grp.conjugacy_data(G)] == want["classes"]
    assert {str(k): v for k, v in sorted(G.order_profile().items())} == want["order_profile"]
    if "normal_orders" in want:
        assert grp.normal_subgroup_orders(G) == want["normal_orders"]


def test_conjugacy_examples():
    sh = grp.conjugacy_data(grp.preset("SH16"))
    assert [s for s, _ in sh] == [1, 1, 4, 2, 4, 2, 2]
    assert [o for _, o in sh] == [1, 2, 2, 4, 4, 8, 8]
    assert grp.conjugacy_data(grp.preset("C3")) == [(1, 1), (1, 3), (1, 3)]
    assert grp.conjugacy_data(grp.preset("S3")) == [(1, 1), (3, 2), (2, 3)]


def test_group_isomorphisms():
    assert grp.is_isomorphic(grp.preset("S3"), grp.preset("GL2_F2"))
    assert grp.is_isomorphic(grp.preset("S3"), grp.preset("D3"))
    assert not grp.is_isomorphic(grp.preset("D4"), grp.preset("SH16"))


def test_degree_partitions():
    assert mods.degree_partition_check(grp.preset("SH16"), 3) == [1, 1, 1, 1, 2, 2, 2]
    assert mods.degree_partition_check(grp.preset("S3"), 2) == [1, 2]
    assert mods.fp_irreducible_degrees(grp.preset("C3"), 2) == [1, 2]
    assert mods.degree_partition_check(grp.preset("C3"), 2) == [1, 1, 1]


def test_sh16_partition_shape():
    degrees = mods.degree_partition_check(grp.preset("SH16"), 3)
    assert sum(d * d for d in degrees) == 16 and len(degrees) == 7


@pytest.mark.parametrize("name, p", [("SH16", 3), ("S3", 2), ("C3", 2), ("D4", 3)])
def test_irreducibles_have_no_invariant_subspace(name, p):
    for irr in mods.irreducible_modules(grp.preset(name), p):
        M = irr.module
        act = M.action()
        gens = [act[g] for g in range(M.group.order)]
        for r in range(1, M.dim):
            for basis in itertools.combinations(list(linalg.all_vectors(M.dim, p)), r):
                if linalg.rank([list(v) for v in basis], p) != r:
                    continue
                W = linalg.span(basis, p)
                assert not all(linalg.mat_vec(g, w, p) in W for g in gens for w in W)


def test_gl2_embeddings():
    sh = mods.embeddings_in_GL2(grp.preset("SH16"), 3)
    assert sh
    for e in sh:
        assert e.traces_by_order[8] <= {1, -1}
    assert mods.embeddings_in_GL2(grp.preset("SH16"), 2) == []
    c3 = mods.embeddings_in_GL2(grp.preset("C3"), 2)
    assert c3 and all(e.traces_by_order[3] == {1} for e in c3)


def test_quotients():
    SH = grp.preset("SH16")
    kernel = SH.closure([grp.element_from_word(SH, "s^4")])
    assert len(kernel) == 2 and SH.is_normal(kernel)
    assert grp.quotient_isomorphic(SH, kernel, grp.preset("D4"))
    assert grp.quotient_isomorphic(SH, [SH.identity], SH)
    assert grp.quotient_isomorphic(SH, range(SH.order), grp.preset("C1"))
    S3 = grp.preset("S3")
    with pytest.raises(GroupError):
        S3.quotient(S3.closure([S3.named["tau"]]))


def test_solvable_caps():
    assert grp.solvable_subgroup_caps(grp.preset("A5")) == (12, 5)
    assert grp.solvable_subgroup_caps(grp.preset("S3")) == (6, 3)
    assert grp.solvable_subgroup_caps(grp.preset("C3")) == (3, 3)


def test_normal_subgroups_of_small_groups():
    assert 2 not in grp.normal_subgroup_orders(grp.preset("D3"))
    assert 2 not in grp.normal_subgroup_orders(grp.preset("D5"))
    # A4 does contain the normal Klein four-group; no normal cyclic subgroup of order 4 exists
    assert 4 in grp.normal_subgroup_orders(grp.preset("A4"))
    assert grp.normal_cyclic_subgroup_orders(grp.preset("A4")) == [1]


def test_subgroup_counts():
    assert len(grp.preset("SH16").subgroups()) == 15
    assert len(grp.preset("A5").subgroups()) == 59


def _s3_module(sigma, tau):
    return MatrixModule.on_named(grp.preset("S3"), 2, {"sigma": sigma, "tau": tau})


def test_f2s3_examples():
    eps = _s3_module(((1, 0), (0, 1)), ((1, 0), (1, 1)))
    rep = mods.analyse_f2s3(eps)
    assert not rep.semisimple
    assert (rep.simple_submodule_count, rep.sigma_trivial_simple_count) == (1, 1)
    assert mods.is_semisimple_f2s3(_s3_module(SIGMA, ((0, 1), (1, 0))))
    assert mods.is_semisimple_f2s3(_s3_module(((1,),), ((1,),)))


def test_f2s3_rejects_bad_relations():
    with pytest.raises(ModuleError):
        _s3_module(((1, 1), (0, 1)), ((1, 0), (0, 1)))


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_semisimplicity_lemma_brute_force(dim):
    S = grp.preset("S3")
    modules = list(mods.representations(S, dim, 2, (S.named["sigma"], S.named["tau"])))
    assert modules
    for M in modules:
        rep = mods.analyse_f2s3(M)
        assert sum(rep.split_dims) == dim
        if rep.sigma_trivial_simple_count == 0:
            assert rep.semisimple


def test_at_most_one_sigma_trivial_simple_is_not_enough():
    eps = _s3_module(((1, 0), (0, 1)), ((1, 0), (1, 1)))
    rep = mods.analyse_f2s3(eps)
    assert rep.sigma_trivial_simple_count <= 1 and not rep.semisimple


def test_fixed_space_examples():
    assert mods.fixed_space_dim([SIGMA], 2).dim == 0
    block = linalg.block_diag(SIGMA, linalg.identity(2))
    assert mods.fixed_space_dim([block], 4).dim == 2
    with pytest.raises(PreconditionError):
        mods.fixed_space_dim([((0, 1), (1, 0))], 2)
    with pytest.warns(UserWarning):
        mods.fixed_space_dim([linalg.identity(2)], 2)


def _sylow3_generators(d: int):
    """Generators of a Sylow 3-subgroup of GL_{2d}(F_2)."""
    I2 = linalg.identity(2)
    blocks = []
    for k in range(d):
        blocks.append(linalg.block_diag(*[SIGMA if j == k else I2 for j in range(d)]))
    if d == 3:
        # cyclic permutation of the three 2-dimensional blocks
        shift = [[0] * 6 for _ in range(6)]
        for j in range(3):
            for r in range(2):
                shift[2 * ((j + 1) % 3) + r][2 * j + r] = 1
        blocks.append(tuple(tuple(r) for r in shift))
    return blocks


def _random_invertible(rnd: Random, n: int):
    while True:
        m = tuple(tuple(rnd.randint(0, 1) for _ in range(n)) for _ in range(n))
        if linalg.rank(m, 2) == n:
            return m


def random_3_subgroup(rnd: Random, d: int):
    """Generators of a random nontrivial 3-subgroup of GL_{2d}(F_2), conjugated at random."""
    base = _sylow3_generators(d)
    one = linalg.identity(2 * d)
    while True:
        gens = []
        for _ in range(rnd.randint(1, 3)):
            m = one
            for _ in range(rnd.randint(1, 6)):
                m = linalg.mat_mul(m, rnd.choice(base), 2)
            gens.append(m)
        if any(g != one for g in gens):
            break
    X = _random_invertible(rnd, 2 * d)
    Xi = linalg.inverse(X, 2)
    return [linalg.mat_mul(linalg.mat_mul(X, g, 2), Xi, 2) for g in gens]


def test_sylow_orders():
    for d, order in ((1, 3), (2, 9), (3, 81)):
        gens = _sylow3_generators(d)
        assert mods.fixed_space_dim(gens, 2 * d).group_order == order


@settings(max_examples=500)
@given(st.integers(1, 3), st.randoms(use_true_random=False))
def test_orbit_lemma(d, rnd):
    fs = mods.fixed_space_dim(random_3_subgroup(rnd, d), 2 * d)
    assert fs.nontrivial
    assert fs.dim % 2 == 0 and fs.dim < 2 * d
    assert fs.fixed_count % 3 == 1 and fs.orbit_congruence
