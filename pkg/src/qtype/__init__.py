"""Matrix-block decompositions of *-algebras of quotient quantum types.

Closed forms for unordered tuples, cycles and unordered words, and a
numerical commutant oracle for arbitrary permutation subgroups.
"""

from .commutant import decompose, pair_orbits, subgroup_decomposition
from .decomp import (
    AlgebraDecomposition,
    Block,
    cycle,
    cycle_dft_oracle,
    cycle_prime_closed_form,
    necklace_count,
    qubit_closed_form,
    unordered_tuple,
    unordered_words,
)
from .perm import Permutation, PermutationGroup, close_group, cyclic_group, symmetric_group
from .young import YoungDiagram, enumerate_diagrams, schur_weyl_multiplicity

__version__ = "0.1.0"

__all__ = [
    "AlgebraDecomposition",
    "Block",
    "Permutation",
    "PermutationGroup",
    "YoungDiagram",
    "close_group",
    "cycle",
    "cycle_dft_oracle",
    "cycle_prime_closed_form",
    "cyclic_group",
    "decompose",
    "enumerate_diagrams",
    "necklace_count",
    "pair_orbits",
    "qubit_closed_form",
    "schur_weyl_multiplicity",
    "subgroup_decomposition",
    "symmetric_group",
    "unordered_tuple",
    "unordered_words",
]
