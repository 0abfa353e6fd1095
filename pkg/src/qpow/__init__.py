"""Exact arithmetic for quasisymmetric powersum bases, in commuting and
non-commuting variables, with an independent polynomial oracle."""

from .combinat import (
    Composition, Partition, SetComposition, SetPartition, Permutation,
    PartOrder, BlockOrder, NATURAL_DESCENDING, NATURAL_ASCENDING,
    DTILDE, DTILDE_REVERSED, part_order_from_ranking,
)
from .formal import FormalSum, TensorSum, BasisMismatch
from . import combinat, fillings, qsym, ncqsym, mn, oracle, suites

__all__ = [
    "Composition", "Partition", "SetComposition", "SetPartition",
    "Permutation", "PartOrder", "BlockOrder", "NATURAL_DESCENDING",
    "NATURAL_ASCENDING", "DTILDE", "DTILDE_REVERSED",
    "part_order_from_ranking", "FormalSum", "TensorSum", "BasisMismatch",
    "combinat", "fillings", "qsym", "ncqsym", "mn", "oracle", "suites",
]
