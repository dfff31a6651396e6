"""Exact computation of the Gini index of integer partitions and its graded multiplicity interpretations."""

from .errors import (
    ChargeError,
    CharacterError,
    ConsistencyError,
    DomainError,
    GiniError,
    PartitionError,
    SizeMismatchError,
    TooManyPartsError,
)
from .gini import LorenzSample, b_stat, e2, gini, gini_nk, lorenz_points, normalized_gini
from .kostka import kostka_foulkes, kostka_number
from .partitions import (
    Partition,
    conjugate,
    covers,
    dominates,
    enumerate_partitions,
    enumerate_partitions_bounded,
    iter_partitions,
    partition_count,
)
from .polynomial import IntPolynomial
from .reflection_groups import (
    DihedralCharacter,
    DominantWeight,
    dihedral_characters,
    dihedral_gini,
    dihedral_graded_multiplicity,
    gl_gini,
    gl_graded_multiplicity,
    sym_gini,
    sym_graded_multiplicity,
)
from .series import (
    antichain_lower_bound,
    divisor_sum,
    expected_value,
    expected_value_normalized,
    genfun_coefficient,
    gini_sum,
    max_level_set_size,
    trend_report,
)
from .symfunc import hall_littlewood, kostka_foulkes_via_transition, schur
from .tableaux import (
    Tableau,
    charge,
    charge_tableau,
    enumerate_ssyt,
    enumerate_standard,
    hook_lengths,
    reading_word,
    standard_count,
)

__version__ = "0.1.0"

__all__ = [
    "CharacterError",
    "ChargeError",
    "ConsistencyError",
    "DihedralCharacter",
    "DomainError",
    "DominantWeight",
    "GiniError",
    "IntPolynomial",
    "LorenzSample",
    "Partition",
    "PartitionError",
    "SizeMismatchError",
    "Tableau",
    "TooManyPartsError",
    "antichain_lower_bound",
    "b_stat",
    "charge",
    "charge_tableau",
    "conjugate",
    "covers",
    "dihedral_characters",
    "dihedral_gini",
    "dihedral_graded_multiplicity",
    "divisor_sum",
    "dominates",
    "e2",
    "enumerate_partitions",
    "enumerate_partitions_bounded",
    "enumerate_ssyt",
    "enumerate_standard",
    "expected_value",
    "expected_value_normalized",
    "genfun_coefficient",
    "gini",
    "gini_nk",
    "gini_sum",
    "gl_gini",
    "gl_graded_multiplicity",
    "hall_littlewood",
    "hook_lengths",
    "iter_partitions",
    "kostka_foulkes",
    "kostka_foulkes_via_transition",
    "kostka_number",
    "lorenz_points",
    "max_level_set_size",
    "normalized_gini",
    "partition_count",
    "reading_word",
    "schur",
    "standard_count",
    "sym_gini",
    "sym_graded_multiplicity",
    "trend_report",
]
