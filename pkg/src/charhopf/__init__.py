"""Exact arithmetic in the ring of symmetric functions and its π-deformations."""

from __future__ import annotations

from .partitions import Partition, conjugate, partition, partitions_of, partitions_upto
from .pideform import PiContext, context, pi_product, q_scalar, q_scalar_inverse, r_kernel, r_kernel_inverse
from .plethysm import plethysm
from .schur import antipode, coproduct, counit, schur_hall, skew
from .series import branch_to_group, branch_to_subgroup, series
from .symfunc import SymFunc, outer_product, s
from .tensor import TensorSF
from .textio import parse_partition, parse_symfunc

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "PiContext",
    "SymFunc",
    "TensorSF",
    "antipode",
    "branch_to_group",
    "branch_to_subgroup",
    "conjugate",
    "context",
    "coproduct",
    "counit",
    "outer_product",
    "parse_partition",
    "parse_symfunc",
    "partition",
    "partitions_of",
    "partitions_upto",
    "pi_product",
    "plethysm",
    "q_scalar",
    "q_scalar_inverse",
    "r_kernel",
    "r_kernel_inverse",
    "s",
    "schur_hall",
    "series",
    "skew",
]
