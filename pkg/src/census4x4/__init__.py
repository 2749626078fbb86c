"""Bit-exact 3x3 and 4x4 census transforms for 8-bit grayscale images."""

from .analysis import ComparisonReport, MetricsReport, compare_transforms, compute_metrics, hamming_distance
from .census import (
    GroupSelector,
    TransformKind,
    census_bits,
    ct3_transform,
    ct4_transform,
    group_for,
    group_neighbor_positions,
    transform,
    transform_block_4x4,
)
from .image import GrayImage, PadMode, as_block, assemble_blocks, crop, pad_to_multiple, tile_blocks
from .pnm import PgmError, PgmVariant, load_pgm, read_pgm, save_pgm, write_pgm

__all__ = [
    "ComparisonReport", "GrayImage", "GroupSelector", "MetricsReport", "PadMode", "PgmError",
    "PgmVariant", "TransformKind", "as_block", "assemble_blocks", "census_bits", "compare_transforms",
    "compute_metrics", "crop", "ct3_transform", "ct4_transform", "group_for", "group_neighbor_positions",
    "hamming_distance", "load_pgm", "pad_to_multiple", "read_pgm", "save_pgm", "tile_blocks",
    "transform", "transform_block_4x4", "write_pgm",
]
