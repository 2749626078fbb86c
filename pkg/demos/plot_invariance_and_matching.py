"""
Order-only encoding and Hamming distance
========================================

Census codes depend only on the ordering of intensities, so a brightness or
gamma change leaves them untouched. Codes from two images can then be
compared bit-wise with the Hamming distance.
"""

import numpy as np

from census4x4 import GrayImage, hamming_distance, transform
from census4x4.synthetic import gradient_noise_image

# Halve the range first so an expanding tone curve stays strictly increasing
img = GrayImage(gradient_noise_image(64, 48, seed=1).pixels // 2)
levels = np.arange(128)
lut = np.zeros(256, dtype=np.uint8)
lut[:128] = np.round(255 * (levels / 127) ** 0.6)
assert np.all(np.diff(lut[:128].astype(int)) > 0)

toned = GrayImage(lut[img.pixels])
for kind in ("3x3", "4x4"):
    same = transform(toned, kind) == transform(img, kind)
    print(f"{kind}: identical after tone curve -> {same}")

# Per-pixel Hamming distance between the codes of two noisy captures
a = transform(gradient_noise_image(64, 48, seed=1, noise=4.0), "4x4")
b = transform(gradient_noise_image(64, 48, seed=1, noise=10.0), "4x4")
dist = np.vectorize(hamming_distance)(a.pixels.astype(int), b.pixels.astype(int))
print("mean Hamming distance between captures:", dist.mean())
print("histogram of distances 0..8:", np.bincount(dist.ravel(), minlength=9))
