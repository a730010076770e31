"""``wavetx`` command line.

Exit codes: 0 success, 1 domain error (bad shape or wavelet, failed
verification), 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
import zipfile
from pathlib import Path

import numpy as np

from . import verify as verify_suite
from .errors import WaveletError
from .filterbank import build_analysis, build_synthesis
from .multilevel import iwpt, load_pyramid, multilevel_dwt, multilevel_idwt, save_pyramid, wpt
from .tensor_core import read_npy, write_npy
from .transform import dwt, idwt
from .wavelet_db import lookup, validate

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wavetx", description="Fast DWT / WPT on NPY tensors.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, io=True):
        p.add_argument("--wavelet", default="haar")
        p.add_argument("--dtype", choices=("f64", "f32"), default="f64")
        if io:
            p.add_argument("--in", dest="input_path", required=True)
            p.add_argument("--out", dest="output_path", required=True)
        return p

    for name in ("dwt", "wpt"):
        p = common(sub.add_parser(name, help=f"forward {name.upper()} of a (batch, spatial..., channels) tensor"))
        p.add_argument("--levels", type=int, default=1, help="0 = deepest valid level")
        p.add_argument("--grouped", action="store_true", help="single NPY with 2^D x channels (one level only)")
    for name in ("idwt", "iwpt"):
        common(sub.add_parser(name, help=f"inverse of {name[1:]}"))

    p = sub.add_parser("info", help="print filter taps and the validation report")
    p.add_argument("--wavelet", default="haar")

    p = sub.add_parser("matrix", help="dump the analysis (or synthesis) matrix as CSV")
    p.add_argument("--wavelet", default="haar")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--synthesis", action="store_true")
    p.add_argument("--dtype", choices=("f64", "f32"), default="f64")

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("wavelets", nargs="*")
    p.add_argument("--wavelet", dest="extra", action="append", default=[])
    p.add_argument("--all", action="store_true")
    return parser


def _read_tensor(path, dtype) -> np.ndarray:
    x = read_npy(path)
    if x.ndim not in (3, 4, 5):
        raise UsageError(f"{path}: tensor rank must be 3, 4 or 5 (batch, spatial..., channels), got {x.ndim}")
    return x.astype(np.float32 if dtype == "f32" else np.float64)


def _levels(args):
    if args.levels < 0:
        raise UsageError("--levels must be >= 0")
    return args.levels


def cmd_forward(args, out):
    x = _read_tensor(args.input_path, args.dtype)
    levels = _levels(args)
    if args.grouped:
        if args.command != "dwt" or levels != 1:
            raise UsageError("--grouped is only valid for dwt with --levels 1")
        write_npy(args.output_path, dwt(x, args.wavelet).tensor)
        return EXIT_OK
    make = multilevel_dwt if args.command == "dwt" else wpt
    save_pyramid(make(x, args.wavelet, levels), args.output_path)
    return EXIT_OK


def cmd_inverse(args, out):
    src = Path(args.input_path)
    if src.is_file() and not zipfile.is_zipfile(src):
        if args.command != "idwt":
            raise UsageError("iwpt needs a pyramid directory or zip")
        q = _read_tensor(src, args.dtype)
        write_npy(args.output_path, idwt(q, args.wavelet))
        return EXIT_OK
    p = load_pyramid(src)
    x = multilevel_idwt(p) if args.command == "idwt" else iwpt(p)
    write_npy(args.output_path, x.astype(np.float32 if args.dtype == "f32" else np.float64))
    return EXIT_OK


def _taps(values) -> str:
    return " ".join(f"{v:.17g}" for v in values)


def cmd_info(args, out):
    spec = lookup(args.wavelet)
    out(f"name: {spec.name}")
    out(f"family: {spec.family}")
    out(f"orthogonal: {str(spec.orthogonal).lower()}")
    out(f"g: {_taps(spec.g)}")
    out(f"h: {_taps(spec.h)}")
    out(f"g_tilde: {_taps(spec.g_tilde)}")
    out(f"h_tilde: {_taps(spec.h_tilde)}")
    report = validate(spec)
    out("validation:")
    for line in report.lines():
        out(f"  {line}")
    return EXIT_OK if report.ok else EXIT_DOMAIN


def cmd_matrix(args, out):
    build = build_synthesis if args.synthesis else build_analysis
    M = build(args.wavelet, args.length, args.dtype)
    for row in M:
        out(",".join(f"{v:.17g}" for v in row))
    return EXIT_OK


def cmd_verify(args, out):
    wanted = list(args.wavelets) + list(args.extra)
    if args.all == bool(wanted):
        raise UsageError("verify needs wavelet names or --all (not both)")
    for name in wanted:
        lookup(name)
    return EXIT_OK if verify_suite.run(None if args.all else wanted, out=out) else EXIT_DOMAIN


COMMANDS = {
    "dwt": cmd_forward,
    "wpt": cmd_forward,
    "idwt": cmd_inverse,
    "iwpt": cmd_inverse,
    "info": cmd_info,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
}


def run(argv=None, out=print, err=None) -> int:
    err = err or (lambda msg: print(msg, file=sys.stderr))
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err(f"wavetx: usage error: {exc}")
        return EXIT_USAGE
    except WaveletError as exc:
        err(f"wavetx: {exc}")
        return EXIT_DOMAIN
    except (OSError, json.JSONDecodeError, zipfile.BadZipFile, KeyError) as exc:
        err(f"wavetx: I/O error: {exc}")
        return EXIT_IO


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
