"""``census4x4`` command line: transform, compare, metrics, bench.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 format error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analysis import compare_transforms, compute_metrics
from .bench import run_bench
from .census import TransformKind, transform
from .image import PadMode
from .pnm import PgmError, PgmVariant, read_pgm, write_pgm

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_FORMAT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _size(text: str) -> tuple[int, int]:
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must look like WxH, got {text!r}")
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError(f"size must be positive, got {text!r}")
    return w, h


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _seed(text: str) -> int:
    try:
        n = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}")
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="census4x4", description="3x3 and 4x4 census transforms for 8-bit PGM images.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("transform", help="apply one census transform to a PGM image")
    t.add_argument("--kernel", choices=["3x3", "4x4"], required=True)
    t.add_argument("--input", required=True)
    t.add_argument("--output", required=True)

    c = sub.add_parser("compare", help="write both transforms and a metrics report to a directory")
    c.add_argument("--input", required=True)
    c.add_argument("--out-dir", required=True)
    c.add_argument("--format", choices=["text", "json"], default="text")

    m = sub.add_parser("metrics", help="print contrast, gradient and entropy statistics")
    m.add_argument("--input", required=True)
    m.add_argument("--format", choices=["text", "json"], default="text")

    b = sub.add_parser("bench", help="time both transforms on a seeded random image")
    b.add_argument("--size", type=_size, required=True, metavar="WxH")
    b.add_argument("--iters", type=_positive, required=True)
    b.add_argument("--seed", type=_seed, default=0)
    b.add_argument("--format", choices=["text", "json"], default="text")

    for sp in (t, c):
        sp.add_argument("--pad", choices=["replicate"], default="replicate")
    for sp in (t, c, b):
        sp.add_argument("--threads", type=_positive, default=1)
    return p


def _read(path):
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def _write(path, data: bytes):
    with open(path, "wb") as fh:
        fh.write(data)


def run_transform(args) -> int:
    img = _read(args.input)
    out = transform(img, TransformKind(args.kernel), PadMode(args.pad), threads=args.threads)
    _write(args.output, write_pgm(out, PgmVariant.BINARY_P5))
    return EXIT_OK


def run_compare(args) -> int:
    img = _read(args.input)
    report, out3, out4 = compare_transforms(img, PadMode(args.pad), threads=args.threads)
    os.makedirs(args.out_dir, exist_ok=True)
    _write(os.path.join(args.out_dir, "ct3.pgm"), write_pgm(out3))
    _write(os.path.join(args.out_dir, "ct4x4.pgm"), write_pgm(out4))
    if args.format == "json":
        _write(os.path.join(args.out_dir, "report.json"), report.to_json().encode())
    else:
        _write(os.path.join(args.out_dir, "report.txt"), report.render_text().encode())
    return EXIT_OK


def run_metrics(args) -> int:
    report = compute_metrics(_read(args.input))
    sys.stdout.write(report.to_json() if args.format == "json" else report.render_text() + "\n")
    return EXIT_OK


def run_bench_cmd(args) -> int:
    w, h = args.size
    result = run_bench(w, h, args.iters, seed=args.seed, threads=args.threads)
    sys.stdout.write(result.to_json() if args.format == "json" else result.render_text())
    return EXIT_OK


_COMMANDS = {
    "transform": run_transform,
    "compare": run_compare,
    "metrics": run_metrics,
    "bench": run_bench_cmd,
}


def _fail(code: int, message: str) -> int:
    # one line only
    print(f"census4x4: {' '.join(str(message).split())}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail(EXIT_USAGE, exc)
    try:
        return _COMMANDS[args.command](args)
    except PgmError as exc:
        return _fail(EXIT_FORMAT, f"{getattr(args, 'input', '')}: {exc}")
    except OSError as exc:
        return _fail(EXIT_IO, f"{exc.filename or ''}: {exc.strerror or exc}")


if __name__ == "__main__":
    sys.exit(main())
