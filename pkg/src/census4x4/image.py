"""Grayscale image model: validation, replicate padding and 4x4 tiling."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

BLOCK = 4


class PadMode(enum.Enum):
    REPLICATE = "replicate"


@dataclass(frozen=True, eq=False)
class GrayImage:
    """An 8-bit grayscale image stored as a read-only ``(height, width)`` uint8 array."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D pixel array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image dimensions must be positive, got {arr.shape[1]}x{arr.shape[0]}")
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("intensities must lie in [0, 255]")
            if np.issubdtype(arr.dtype, np.floating) and not np.all(arr == np.floor(arr)):
                raise ValueError("intensities must be integers")
            arr = arr.astype(np.uint8)
        arr = np.ascontiguousarray(arr).copy()
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> GrayImage:
        return cls(np.array(rows, dtype=np.int64))

    @classmethod
    def from_flat(cls, width: int, height: int, values: Sequence[int]) -> GrayImage:
        values = np.asarray(values, dtype=np.int64)
        if values.size != width * height:
            raise ValueError(f"expected {width * height} pixels for {width}x{height}, got {values.size}")
        return cls(values.reshape(height, width))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __getitem__(self, rc):
        return int(self.pixels[rc])

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(np.array_equal(self.pixels, other.pixels))

    def __repr__(self):
        return f"GrayImage({self.width}x{self.height})"

    def tolist(self) -> list[list[int]]:
        return self.pixels.tolist()


def as_block(values) -> np.ndarray:
    """Validate and return a 4x4 uint8 block. Accepts any 16-element or 4x4 array-like."""
    arr = np.asarray(values)
    if arr.size != BLOCK * BLOCK:
        raise ValueError(f"a block needs exactly 16 values, got {arr.size}")
    if arr.dtype != np.uint8 and (arr.min() < 0 or arr.max() > 255):
        raise ValueError("block intensities must lie in [0, 255]")
    return arr.reshape(BLOCK, BLOCK).astype(np.uint8)


def pad_to_multiple(img: GrayImage, multiple: int = BLOCK,
                    mode: PadMode = PadMode.REPLICATE) -> tuple[GrayImage, tuple[int, int]]:
    """Pad bottom/right so both dimensions are multiples of ``multiple``.

    Returns the padded image and the original ``(width, height)``.
    """
    if multiple < 1:
        raise ValueError("multiple must be >= 1")
    if mode is not PadMode.REPLICATE:
        raise ValueError(f"unsupported pad mode {mode!r}")
    h, w = img.pixels.shape
    ph = -h % multiple
    pw = -w % multiple
    if ph == 0 and pw == 0:
        return img, (w, h)
    padded = np.pad(img.pixels, ((0, ph), (0, pw)), mode="edge")
    return GrayImage(padded), (w, h)


def tile_blocks(img: GrayImage) -> list[np.ndarray]:
    """Split into non-overlapping 4x4 blocks in raster order."""
    h, w = img.pixels.shape
    if h % BLOCK or w % BLOCK:
        raise ValueError(f"image {w}x{h} is not a multiple of {BLOCK} in both dimensions")
    tiles = img.pixels.reshape(h // BLOCK, BLOCK, w // BLOCK, BLOCK).swapaxes(1, 2)
    return [t.copy() for t in tiles.reshape(-1, BLOCK, BLOCK)]


def assemble_blocks(blocks: Sequence[np.ndarray], width: int, height: int) -> GrayImage:
    if width % BLOCK or height % BLOCK or width < 1 or height < 1:
        raise ValueError(f"{width}x{height} is not a positive multiple of {BLOCK}")
    tr, tc = height // BLOCK, width // BLOCK
    if len(blocks) != tr * tc:
        raise ValueError(f"expected {tr * tc} blocks for {width}x{height}, got {len(blocks)}")
    stack = np.stack([as_block(b) for b in blocks])
    arr = stack.reshape(tr, tc, BLOCK, BLOCK).swapaxes(1, 2).reshape(height, width)
    return GrayImage(arr)


def crop(img: GrayImage, width: int, height: int) -> GrayImage:
    """Top-left crop."""
    if width < 1 or height < 1 or width > img.width or height > img.height:
        raise ValueError(f"cannot crop {img.width}x{img.height} to {width}x{height}")
    if (width, height) == (img.width, img.height):
        return img
    return GrayImage(img.pixels[:height, :width])
