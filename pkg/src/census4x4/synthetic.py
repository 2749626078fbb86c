"""Seeded test images.

All randomness comes from ``numpy.random.Generator(PCG64(seed))``, a 128-bit
permuted congruential generator, so a given seed always yields the same pixels
on any platform numpy supports.
"""

from __future__ import annotations

import zlib

import numpy as np

from .image import GrayImage


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_image(width: int, height: int, seed: int = 0) -> GrayImage:
    """Uniform random intensities in [0, 255]."""
    return GrayImage(_rng(seed).integers(0, 256, size=(height, width), dtype=np.uint8))


def gradient_noise_image(width: int, height: int, seed: int = 0, noise: float = 12.0) -> GrayImage:
    """A random-direction linear ramp plus a few soft discs, with Gaussian noise."""
    rng = _rng(seed)
    yy, xx = np.mgrid[0:height, 0:width].astype(np.float64)
    theta = rng.uniform(0, 2 * np.pi)
    ramp = np.cos(theta) * xx / max(width - 1, 1) + np.sin(theta) * yy / max(height - 1, 1)
    ramp = (ramp - ramp.min()) / max(np.ptp(ramp), 1e-9)
    a = 40.0 + 150.0 * ramp
    for _ in range(rng.integers(2, 5)):
        cx, cy = rng.uniform(0, width), rng.uniform(0, height)
        rad = rng.uniform(0.08, 0.25) * min(width, height)
        amp = rng.uniform(-60, 60)
        a += amp / (1.0 + np.exp(((xx - cx) ** 2 + (yy - cy) ** 2) ** 0.5 - rad))
    a += rng.normal(0.0, noise, size=a.shape)
    return GrayImage(np.clip(np.rint(a), 0, 255).astype(np.uint8))


def synthetic_corpus(count: int = 10, width: int = 64, height: int = 48, seed: int = 2024) -> list[GrayImage]:
    return [gradient_noise_image(width, height, seed=seed + i) for i in range(count)]


def checksum(img: GrayImage) -> int:
    """CRC-32 of the raw pixel bytes, with the dimensions mixed in."""
    return zlib.crc32(img.pixels.tobytes(), zlib.crc32(f"{img.width}x{img.height}".encode()))
