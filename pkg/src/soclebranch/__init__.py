"""Socle filtrations of tensor modules over gl(∞), sp(∞) and so(∞) under restriction."""

from .branching import (
    EmbeddingSpec,
    InvalidSpec,
    SimpleModule,
    SocleLayers,
    gl,
    layers_general,
    layers_tensor_type_ii,
    layers_type_i,
    layers_type_ii,
    layers_type_iii,
    so,
    sp,
    total_multiplicities,
)
from .gt import gt_mult
from .lr import lr, product_expand, skew_expand
from .partitions import INF, ExtendedNat, Partition, conjugate, interlaces, parse_partition, sym_dim

__all__ = [
    "EmbeddingSpec",
    "InvalidSpec",
    "SimpleModule",
    "SocleLayers",
    "gl",
    "sp",
    "so",
    "layers_general",
    "layers_tensor_type_ii",
    "layers_type_i",
    "layers_type_ii",
    "layers_type_iii",
    "total_multiplicities",
    "gt_mult",
    "lr",
    "product_expand",
    "skew_expand",
    "INF",
    "ExtendedNat",
    "Partition",
    "conjugate",
    "interlaces",
    "parse_partition",
    "sym_dim",
]
