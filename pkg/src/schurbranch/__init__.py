"""Exact branching multiplicities for polynomial GL-representations."""

from .branching import BranchingInstance, branching_multiplicity, encode_classical, restriction_coefficient
from .characters import character, character_table
from .errors import ConsistencyError, InvalidInput, ResourceLimitError
from .partitions import Partition, dim_specht, dim_weyl, enumerate_partitions, parse_partition
from .plethysm import plethysm_character, plethysm_specialized
from .schur_expand import kostka
from .schur_weyl import verify

__all__ = [
    "BranchingInstance",
    "ConsistencyError",
    "InvalidInput",
    "Partition",
    "ResourceLimitError",
    "branching_multiplicity",
    "character",
    "character_table",
    "dim_specht",
    "dim_weyl",
    "encode_classical",
    "enumerate_partitions",
    "kostka",
    "parse_partition",
    "plethysm_character",
    "plethysm_specialized",
    "restriction_coefficient",
    "verify",
]
