"""Census encodings: the classic 3x3 transform and the 4x4 overlapping-group transform.

Conventions shared by both operators:

* a comparison records bit 0 when the reference is strictly greater than the
  neighbour and bit 1 otherwise (ties give 1);
* neighbours are visited in raster order and the first comparison lands in
  the most significant bit;
* borders are handled by replicate padding.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Sequence

import numpy as np

from .image import BLOCK, GrayImage, PadMode, as_block, crop, pad_to_multiple


class TransformKind(enum.Enum):
    CT3 = "3x3"
    CT4X4 = "4x4"


class GroupSelector(enum.Enum):
    """One of the four 3x3 windows of a 4x4 kernel, named by (row band, col band)."""

    TL = (0, 0)
    TR = (0, 1)
    BL = (1, 0)
    BR = (1, 1)

    @property
    def row_offset(self) -> int:
        return self.value[0]

    @property
    def col_offset(self) -> int:
        return self.value[1]

    def members(self) -> list[tuple[int, int]]:
        r0, c0 = self.value
        return [(r0 + i, c0 + j) for i in range(3) for j in range(3)]


def census_bits(ref: int, neighbors: Sequence[int]) -> int:
    """Encode ``ref`` against 8 ordered neighbours; ``neighbors[0]`` is the MSB."""
    if len(neighbors) != 8:
        raise ValueError(f"census_bits needs exactly 8 neighbours, got {len(neighbors)}")
    for v in (ref, *neighbors):
        if not 0 <= v <= 255:
            raise ValueError(f"intensity {v} outside [0, 255]")
    code = 0
    for n in neighbors:
        code = (code << 1) | (0 if ref > n else 1)
    return code


def group_for(r: int, c: int) -> GroupSelector:
    # odd row/col selects the lower/right band
    _check_position(r, c)
    return GroupSelector((r & 1, c & 1))


@lru_cache(maxsize=None)
def group_neighbor_positions(r: int, c: int) -> tuple[tuple[int, int], ...]:
    """The 8 positions ``(r, c)`` is compared against, in group raster order."""
    g = group_for(r, c)
    return tuple(p for p in g.members() if p != (r, c))


def _check_position(r, c):
    if not (0 <= r < BLOCK and 0 <= c < BLOCK):
        raise ValueError(f"block position ({r}, {c}) out of range")


def transform_block_4x4(block) -> np.ndarray:
    """4x4 census transform of a single block; returns a 4x4 uint8 array."""
    b = as_block(block)
    out = np.empty((BLOCK, BLOCK), dtype=np.uint8)
    for r in range(BLOCK):
        for c in range(BLOCK):
            out[r, c] = census_bits(int(b[r, c]), [int(b[p]) for p in group_neighbor_positions(r, c)])
    return out


def _ct4_array(a: np.ndarray) -> np.ndarray:
    """Tiled 4x4 transform of an array whose dimensions are multiples of 4."""
    h, w = a.shape
    # planes[r, c] holds position (r, c) of every tile, contiguous
    planes = a.reshape(h // BLOCK, BLOCK, w // BLOCK, BLOCK).transpose(1, 3, 0, 2).copy()
    out = np.zeros_like(planes)
    le = np.empty(planes.shape[2:], dtype=bool)
    for r in range(BLOCK):
        for c in range(BLOCK):
            ref, acc = planes[r, c], out[r, c]
            for k, (nr, nc) in enumerate(group_neighbor_positions(r, c)):
                np.less_equal(ref, planes[nr, nc], out=le)
                acc |= le.view(np.uint8) << np.uint8(7 - k)
    return out.transpose(2, 0, 3, 1).reshape(h, w)


_OFFSETS_3X3 = [(dy, dx) for dy in (-1, 0, 1) for dx in (-1, 0, 1) if (dy, dx) != (0, 0)]


def _ct3_rows(padded: np.ndarray, y0: int, y1: int) -> np.ndarray:
    """3x3 census of output rows [y0, y1) given a 1-pixel padded array."""
    w = padded.shape[1] - 2
    center = padded[y0 + 1:y1 + 1, 1:w + 1]
    acc = np.zeros(center.shape, dtype=np.uint8)
    le = np.empty(center.shape, dtype=bool)
    for k, (dy, dx) in enumerate(_OFFSETS_3X3):
        np.less_equal(center, padded[y0 + 1 + dy:y1 + 1 + dy, 1 + dx:w + 1 + dx], out=le)
        acc |= le.view(np.uint8) << np.uint8(7 - k)
    return acc


def _bands(n: int, parts: int, step: int = 1) -> list[tuple[int, int]]:
    units = n // step
    parts = max(1, min(parts, units))
    edges = [round(i * units / parts) * step for i in range(parts + 1)]
    return [(a, b) for a, b in zip(edges, edges[1:]) if b > a]


def ct4_transform(img: GrayImage, pad: PadMode = PadMode.REPLICATE, threads: int = 1) -> GrayImage:
    """Whole-image 4x4 census: pad to a multiple of 4, transform each tile, crop back."""
    padded, (w, h) = pad_to_multiple(img, BLOCK, pad)
    a = padded.pixels
    if threads <= 1:
        out = _ct4_array(a)
    else:
        out = np.empty_like(a)
        bands = _bands(a.shape[0], threads, BLOCK)

        def work(band):
            y0, y1 = band
            out[y0:y1] = _ct4_array(a[y0:y1])

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, bands))
    return crop(GrayImage(out), w, h)


def ct3_transform(img: GrayImage, pad: PadMode = PadMode.REPLICATE, threads: int = 1) -> GrayImage:
    """Classic per-pixel 3x3 census transform with replicate borders."""
    if pad is not PadMode.REPLICATE:
        raise ValueError(f"unsupported pad mode {pad!r}")
    padded = np.pad(img.pixels, 1, mode="edge")
    h = img.height
    if threads <= 1:
        return GrayImage(_ct3_rows(padded, 0, h))
    out = np.empty(img.pixels.shape, dtype=np.uint8)

    def work(band):
        y0, y1 = band
        out[y0:y1] = _ct3_rows(padded, y0, y1)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(work, _bands(h, threads)))
    return GrayImage(out)


def transform(img: GrayImage, kind: TransformKind | str, pad: PadMode = PadMode.REPLICATE,
              threads: int = 1) -> GrayImage:
    kind = TransformKind(kind)
    if kind is TransformKind.CT3:
        return ct3_transform(img, pad, threads)
    return ct4_transform(img, pad, threads)
