"""Reading and writing 8-bit PGM (P2 ASCII / P5 binary)."""

from __future__ import annotations

import enum
import os

import numpy as np

from .image import GrayImage

_WHITESPACE = b" \t\n\r\x0b\x0c"


class PgmVariant(enum.Enum):
    ASCII_P2 = "P2"
    BINARY_P5 = "P5"


class PgmError(ValueError):
    """Base class for malformed PGM input."""


class BadMagicError(PgmError):
    pass


class HeaderError(PgmError):
    pass


class MaxvalError(PgmError):
    pass


class TruncatedPayloadError(PgmError):
    pass


class PixelRangeError(PgmError):
    pass


def _header_tokens(data: bytes, count: int, pos: int) -> tuple[list[bytes], int]:
    """Pull ``count`` whitespace-separated tokens starting at ``pos``, skipping ``#`` comments.

    Returns the tokens and the offset just past the last one.
    """
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos < n and data[pos] == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
            continue
        if pos >= n:
            break
        start = pos
        while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def read_pgm(data: bytes) -> GrayImage:
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise BadMagicError(f"bad magic number {magic!r} at offset 0; expected b'P2' or b'P5'")
    names = ("width", "height", "maxval")
    tokens, pos = _header_tokens(data, 3, 2)
    if len(tokens) < 3:
        raise HeaderError(f"header ended before field '{names[len(tokens)]}'")
    fields = {}
    for name, tok in zip(names, tokens):
        if not tok.isdigit():
            raise HeaderError(f"header field '{name}' is not a decimal integer: {tok!r}")
        fields[name] = int(tok)
    width, height, maxval = fields["width"], fields["height"], fields["maxval"]
    if width < 1 or height < 1:
        raise HeaderError(f"header fields 'width'/'height' must be positive, got {width}x{height}")
    if maxval != 255:
        raise MaxvalError(f"header field 'maxval' is {maxval}; only 255 is supported")
    npix = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise TruncatedPayloadError(f"missing raster after header at byte offset {pos}")
        start = pos + 1
        payload = data[start:start + npix]
        if len(payload) < npix:
            raise TruncatedPayloadError(
                f"payload truncated at byte offset {start + len(payload)}: "
                f"expected {npix} bytes, got {len(payload)}")
        arr = np.frombuffer(payload, dtype=np.uint8).reshape(height, width)
        return GrayImage(arr)

    body = data[pos:]
    try:
        values = body.split()
        nums = np.array([int(v) for v in values[:npix]], dtype=np.int64)
    except ValueError as exc:
        raise PgmError(f"non-numeric sample in P2 raster after byte offset {pos}") from exc
    if nums.size < npix:
        raise TruncatedPayloadError(
            f"payload truncated: expected {npix} samples after byte offset {pos}, got {nums.size}")
    bad = np.flatnonzero((nums > maxval) | (nums < 0))
    if bad.size:
        i = int(bad[0])
        raise PixelRangeError(f"sample {i} has value {nums[i]} outside [0, maxval={maxval}]")
    return GrayImage(nums.reshape(height, width))


def write_pgm(img: GrayImage, variant: PgmVariant = PgmVariant.BINARY_P5) -> bytes:
    variant = PgmVariant(variant)
    header = f"{variant.value}\n{img.width} {img.height}\n255\n".encode("ascii")
    if variant is PgmVariant.BINARY_P5:
        return header + img.pixels.tobytes()
    lines = [" ".join(map(str, row)) for row in img.pixels.tolist()]
    return header + ("\n".join(lines) + "\n").encode("ascii")


def load_pgm(path: str | os.PathLike) -> GrayImage:
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path: str | os.PathLike, img: GrayImage, variant: PgmVariant = PgmVariant.BINARY_P5) -> None:
    with open(path, "wb") as fh:
        fh.write(write_pgm(img, variant))
