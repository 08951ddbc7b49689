"""Finite groups and modular representations by exhaustive search."""
from __future__ import annotations

from .groups import (
    FiniteGroup,
    GroupError,
    conjugacy_data,
    element_from_word,
    is_isomorphic,
    normal_cyclic_subgroup_orders,
    normal_subgroup_orders,
    preset,
    quotient_isomorphic,
    solvable_subgroup_caps,
)
from .modules import (
    FixedSpace,
    MatrixModule,
    ModuleError,
    PreconditionError,
    analyse_f2s3,
    degree_partition_check,
    embeddings_in_GL2,
    fixed_space_dim,
    fp_irreducible_degrees,
    irreducible_modules,
    is_semisimple_f2s3,
)
