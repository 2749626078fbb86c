"""
3x3 versus 4x4 census on synthetic images
=========================================

Transform a few seeded gradient-plus-noise images with both kernels and
tabulate contrast, gradient and entropy statistics. The numbers are proxies
for the visual qualities one would judge by eye; nothing here decides which
transform "wins".
"""

import tempfile
from pathlib import Path

from census4x4 import compare_transforms, save_pgm
from census4x4.synthetic import synthetic_corpus

corpus = synthetic_corpus(count=3, width=96, height=64)

outdir = Path(tempfile.mkdtemp(prefix="census-demo-"))
for i, img in enumerate(corpus):
    report, ct3, ct4 = compare_transforms(img)
    print(f"image {i}")
    print(report.render_text())
    save_pgm(outdir / f"input{i}.pgm", img)
    save_pgm(outdir / f"ct3_{i}.pgm", ct3)
    save_pgm(outdir / f"ct4x4_{i}.pgm", ct4)

print(f"PGM files written to {outdir}")

# The matplotlib view, when available
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    img = corpus[0]
    _, ct3, ct4 = compare_transforms(img)
    fig, axes = plt.subplots(1, 3, figsize=(9, 2.5))
    for ax, im, title in zip(axes, (img, ct3, ct4), ("input", "3x3 census", "4x4 census")):
        ax.imshow(im.pixels, cmap="gray", vmin=0, vmax=255)
        ax.set_title(title)
        ax.axis("off")
    fig.savefig(outdir / "comparison.png", dpi=100, bbox_inches="tight")
    print(f"figure saved to {outdir / 'comparison.png'}")
