"""Throughput measurement for the two census transforms."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .census import TransformKind, transform
from .synthetic import checksum, random_image


@dataclass(frozen=True)
class BenchResult:
    width: int
    height: int
    iters: int
    seed: int
    threads: int
    input_checksum: int
    ct3_seconds: float
    ct4x4_seconds: float
    ct3_checksum: int
    ct4x4_checksum: int

    @property
    def megapixels(self) -> float:
        return self.width * self.height * self.iters / 1e6

    @property
    def ct3_mpix_per_s(self) -> float:
        return self.megapixels / self.ct3_seconds

    @property
    def ct4x4_mpix_per_s(self) -> float:
        return self.megapixels / self.ct4x4_seconds

    @property
    def ratio_ct4x4_over_ct3(self) -> float:
        return self.ct4x4_mpix_per_s / self.ct3_mpix_per_s

    def to_dict(self) -> dict:
        return {
            "size": f"{self.width}x{self.height}",
            "iters": self.iters,
            "seed": self.seed,
            "threads": self.threads,
            "input_checksum": self.input_checksum,
            "ct3": {"seconds": self.ct3_seconds, "megapixels_per_second": self.ct3_mpix_per_s,
                    "output_checksum": self.ct3_checksum},
            "ct4x4": {"seconds": self.ct4x4_seconds, "megapixels_per_second": self.ct4x4_mpix_per_s,
                      "output_checksum": self.ct4x4_checksum},
            "ratio_ct4x4_over_ct3": self.ratio_ct4x4_over_ct3,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def render_text(self) -> str:
        return (f"image {self.width}x{self.height}, {self.iters} iteration(s), seed {self.seed}, "
                f"threads {self.threads}\n"
                f"input checksum  {self.input_checksum:08x}\n"
                f"ct3    {self.ct3_mpix_per_s:12.2f} MPix/s  ({self.ct3_seconds:.4f} s, "
                f"output checksum {self.ct3_checksum:08x})\n"
                f"ct4x4  {self.ct4x4_mpix_per_s:12.2f} MPix/s  ({self.ct4x4_seconds:.4f} s, "
                f"output checksum {self.ct4x4_checksum:08x})\n"
                f"ratio ct4x4/ct3  {self.ratio_ct4x4_over_ct3:.3f}\n")


def _time(img, kind, iters, threads):
    out = transform(img, kind, threads=threads)  # warm-up, excluded from timing
    t0 = time.perf_counter()
    for _ in range(iters):
        out = transform(img, kind, threads=threads)
    # guard against a zero reading from a coarse clock on tiny inputs
    return max(time.perf_counter() - t0, 1e-9), out


def run_bench(width: int, height: int, iters: int, seed: int = 0, threads: int = 1) -> BenchResult:
    if width < 1 or height < 1 or iters < 1:
        raise ValueError("size and iteration count must be positive")
    img = random_image(width, height, seed)
    t3, out3 = _time(img, TransformKind.CT3, iters, threads)
    t4, out4 = _time(img, TransformKind.CT4X4, iters, threads)
    return BenchResult(width, height, iters, seed, threads, checksum(img), t3, t4,
                       checksum(out3), checksum(out4))
