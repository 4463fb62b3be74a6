"""Command-line front end.

Exit codes: 0 ok, 2 usage, 3 unparseable input, 4 numeric/domain error,
5 file could not be read or written.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

import numpy as np

from . import fdm, image2d
from .errors import FQTError
from .instfreq import polar_trace
from .quadrature import fsas, gas
from .tableio import (
    ParseError,
    format_matrix,
    format_table,
    parse_matrix,
    parse_series,
    read_text,
    write_text,
)
from .transforms import Family, TransformVariant, build_matrix, forward, inverse, restrict, fast_dct2

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_NUMERIC = 4
EXIT_IO = 5


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {v}")
    return v


def _int_list(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def _float_list(text: str) -> list:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text!r}") from None


def _common(p: argparse.ArgumentParser, series: bool = True):
    p.add_argument("input", help="input CSV path, or - for stdin")
    if series:
        p.add_argument("--fs", type=_positive_float, help="sample rate in Hz (overrides timestamps)")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")


def _band_options(p: argparse.ArgumentParser):
    p.add_argument("--strategy", choices=["equal", "dyadic", "equal-energy", "manual"], default="dyadic")
    p.add_argument("--bands", type=_positive_int, default=4, help="number of bands")
    p.add_argument("--edges", type=_int_list, help="manual interior edges (coefficient indices)")
    p.add_argument("--edges-hz", type=_float_list, help="manual interior edges in Hz")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqtkit",
        description="Fourier quadrature transforms, analytic signals and DCT-based decomposition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="DCT/DST coefficients of a signal")
    _common(p)
    p.add_argument("--variant", default="dct2", help="dct1..dct8 or dst1..dst8")
    p.add_argument("--inverse", action="store_true", help="treat input as coefficients and invert")

    p = sub.add_parser("analytic", help="analytic signal with IA, IP and IF columns")
    _common(p)
    p.add_argument("--kind", default="fsas2",
                   help="gas, fsasN / fsas-cN (cosine family) or fsas-sN (sine family), N in 1..8")
    p.add_argument("--scheme", choices=["ffd", "bfd", "cfd"], default="ffd")

    p = sub.add_parser("decompose", help="FIBF columns plus the DC term")
    _common(p)
    _band_options(p)

    p = sub.add_parser("tfe", help="long-form time-frequency-energy triplets")
    _common(p)
    _band_options(p)
    p.add_argument("--route", choices=["fsas", "gas"], default="fsas")
    p.add_argument("--scheme", choices=["ffd", "bfd", "cfd"], default="ffd")

    p = sub.add_parser("denoise", help="drop bands and write the cleaned signal and removed parts")
    _common(p)
    _band_options(p)
    p.add_argument("--drop", type=_int_list, default=[], help="1-based band numbers to remove")
    p.add_argument("--drop-dc", action="store_true", help="also remove the mean")

    p = sub.add_parser("trend", help="trend and variability at a time scale")
    _common(p)
    scale = p.add_mutually_exclusive_group(required=True)
    scale.add_argument("--cutoff", type=float, help="shortest period kept in the trend, in samples")
    scale.add_argument("--cutoff-seconds", type=float, help="same, in seconds")

    p = sub.add_parser("image-fsas", help="2-D quadrature component of a matrix")
    _common(p, series=False)
    p.add_argument("--part", choices=["imag", "coeffs", "recovered"], default="imag")
    return parser


# ---------------------------------------------------------------------------


def _load_series(args):
    return parse_series(read_text(args.input), args.fs)


def _plan(args, samples: np.ndarray, fs: float) -> fdm.BandPlan:
    n = samples.size
    if args.strategy == "manual":
        if args.edges is not None:
            return fdm.manual_plan(args.edges, n)
        if args.edges_hz is not None:
            return fdm.manual_plan(fdm.edges_from_hz(args.edges_hz, n, fs), n)
        raise UsageError("--strategy manual needs --edges or --edges-hz")
    if args.edges is not None or args.edges_hz is not None:
        raise UsageError("--edges/--edges-hz only apply to --strategy manual")
    return fdm.plan_bands(fast_dct2(samples), args.strategy, args.bands)


def cmd_transform(args) -> str:
    samples, _ = _load_series(args)
    variant = TransformVariant.parse(args.variant)
    if variant.family not in (Family.DCT, Family.DST):
        raise UsageError("--variant must be dct1..dct8 or dst1..dst8")
    if args.inverse:
        # coefficient files hold one value per label, i.e. N-1 values for the 1..N-1 variants
        m = build_matrix(variant, samples.size + variant.offset)
        return format_table(["n", "value"], [m.labels, inverse(m, samples)], args.format)
    m = build_matrix(variant, samples.size)
    values = forward(m, restrict(m, samples))
    return format_table(["k", "value"], [m.labels, values], args.format)


def _analytic_kind(kind: str):
    kind = kind.lower()
    if kind == "gas":
        return "gas", None
    for prefix, family in (("fsas-c", "cosine"), ("fsas-s", "sine"), ("fsas", "cosine")):
        rest = kind[len(prefix):]
        if kind.startswith(prefix) and rest.isdigit() and 1 <= int(rest) <= 8:
            return family, int(rest)
    raise UsageError(f"unknown --kind {kind!r}")


def cmd_analytic(args) -> str:
    samples, fs = _load_series(args)
    family, variant = _analytic_kind(args.kind)
    z = gas(samples, fs) if family == "gas" else fsas(samples, family, variant, fs)
    trace = polar_trace(z, args.scheme)
    n = np.arange(samples.size)
    return format_table(
        ["n", "real", "imag", "ia", "iphase", "if_hz"],
        [n, z.real, z.imag, trace.ia, trace.iphase, trace.freq_hz],
        args.format,
    )


def cmd_decompose(args) -> str:
    samples, fs = _load_series(args)
    d = fdm.decompose(samples, _plan(args, samples, fs), "fsas", fs)
    cols = ["n"] + [f"fibf_{i}" for i in range(1, d.n_bands + 1)] + ["dc"]
    data = [np.arange(samples.size)] + list(d.fibfs) + [d.dc_term()]
    return format_table(cols, data, args.format)


def cmd_tfe(args) -> str:
    samples, fs = _load_series(args)
    d = fdm.decompose(samples, _plan(args, samples, fs), args.route, fs)
    grid = fdm.tfe(d, args.scheme)
    order = np.lexsort((grid.band, grid.time))
    return format_table(["n", "f_hz", "energy"],
                        [grid.time[order], grid.freq[order], grid.energy[order]], args.format)


def cmd_denoise(args) -> str:
    samples, fs = _load_series(args)
    plan = _plan(args, samples, fs)
    for i in args.drop:
        plan.band(i)  # validates
    cleaned = fdm.remove_bands(samples, plan, args.drop, drop_dc=args.drop_dc)
    d = fdm.decompose(samples, plan, "fsas", fs)
    cols = ["n", "cleaned"]
    data = [np.arange(samples.size), cleaned]
    if args.drop_dc:
        cols.append("dc")
        data.append(d.dc_term())
    for i in sorted(set(args.drop)):
        cols.append(f"band_{i}")
        data.append(d.fibfs[i - 1])
    return format_table(cols, data, args.format)


def cmd_trend(args) -> str:
    samples, fs = _load_series(args)
    cutoff = args.cutoff if args.cutoff is not None else args.cutoff_seconds * fs
    slow, var = fdm.trend(samples, cutoff)
    return format_table(["n", "trend", "variability"], [np.arange(samples.size), slow, var], args.format)


def cmd_image_fsas(args) -> str:
    img = parse_matrix(read_text(args.input))
    if args.part == "imag":
        out = image2d.fsas2d(img).imag
    elif args.part == "coeffs":
        out = image2d.dct2d(img)
    else:
        out = image2d.recover_coeffs(image2d.fsas2d(img).imag)
    return format_matrix(out, args.format)


COMMANDS = {
    "transform": cmd_transform,
    "analytic": cmd_analytic,
    "decompose": cmd_decompose,
    "tfe": cmd_tfe,
    "denoise": cmd_denoise,
    "trend": cmd_trend,
    "image-fsas": cmd_image_fsas,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = COMMANDS[args.command](args)
        write_text(text, args.output)
    except UsageError as exc:
        print(f"fqtkit {args.command}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"fqtkit {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FQTError, FloatingPointError) as exc:
        print(f"fqtkit {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (OSError, UnicodeDecodeError) as exc:
        print(f"fqtkit {args.command}: cannot access file: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
