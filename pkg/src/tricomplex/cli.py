"""Command-line interface: render commands, root reports, verify suites.

Exit codes: 0 success, 1 flag or input error, 2 verify-suite failure.  The
CLI is a thin shell over the library; every output it can produce is
byte-identical to what the corresponding API calls return.
"""

from __future__ import annotations

import argparse
import sys

from . import formats, verify
from .algebra import SliceSpec, UNIT_NAMES
from .raster import Window2D, Window3D, scan2d, scan3d
from .realroots import classify, refine_bounds
from .sets import OctahedronSpec
from ._version import __version__

__all__ = ["run", "main"]


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; code 2 is reserved for a
    # failing verify suite, so raise instead and let run() map it to 1
    def error(self, message):
        raise _CliError(message)


def _window2d(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise _CliError(f"expected XLO,XHI,YLO,YHI, got {text!r}")
    try:
        return tuple(float(t) for t in parts)
    except ValueError:
        raise _CliError(f"malformed window {text!r}") from None


def _window3d(text: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != 6:
        raise _CliError(f"expected XLO,XHI,YLO,YHI,ZLO,ZHI, got {text!r}")
    try:
        return tuple(float(t) for t in parts)
    except ValueError:
        raise _CliError(f"malformed window {text!r}") from None


def _axes(text: str) -> tuple[str, str, str]:
    parts = tuple(t.strip() for t in text.split(","))
    if len(parts) != 3:
        raise _CliError(f"expected three comma-separated unit names, got {text!r}")
    return parts


def _positive(kind: str):
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise _CliError(f"{kind} must be an integer, got {text!r}") from None
        if value < 1:
            raise _CliError(f"{kind} must be >= 1, got {value}")
        return value

    return convert


def _add_render_common(sub, res_default: int):
    sub.add_argument("--power", type=_positive("power"), default=3)
    sub.add_argument("--res", type=_positive("res"), default=res_default)
    sub.add_argument("--max-iter", type=_positive("max-iter"), default=1000)
    sub.add_argument("--threads", type=_positive("threads"), default=1)
    sub.add_argument("--out", required=True)


def _build_parser() -> _Parser:
    parser = _Parser(prog="tricomplex", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    for name in ("multibrot", "hyperbrot"):
        sub = commands.add_parser(name, help=f"render the {name} set to a PPM image")
        _add_render_common(sub, 1024)
        sub.add_argument("--window", type=_window2d, default=(-1.5, 1.5, -1.5, 1.5))
        sub.add_argument(
            "--supersample", type=_positive("supersample"), default=1,
            help="render at N times the resolution and box-average down",
        )
        sub.set_defaults(func=_cmd_render2d, kind=f"{name}")

    sub = commands.add_parser("perplexbrot", help="voxel-scan the Perplexbrot to a TRIVOX file")
    _add_render_common(sub, 128)
    sub.add_argument("--window", type=_window3d, default=(-1.0, 1.0, -1.0, 1.0, -1.0, 1.0))
    sub.add_argument("--obj", help="also write the analytic octahedron as an OBJ mesh")
    sub.set_defaults(func=_cmd_render3d, axes=("1", "j1", "j2"))

    sub = commands.add_parser("slice", help="voxel-scan a principal 3D slice to a TRIVOX file")
    _add_render_common(sub, 128)
    sub.add_argument("--window", type=_window3d, default=(-1.0, 1.0, -1.0, 1.0, -1.0, 1.0))
    sub.add_argument("--axes", type=_axes, required=True,
                     help="three distinct unit names, e.g. 1,j1,j2")
    sub.set_defaults(func=_cmd_render3d, obj=None)

    sub = commands.add_parser("roots", help="real roots of x^p - x + c as CSV on stdout")
    sub.add_argument("--power", type=_positive("power"), required=True)
    sub.add_argument("--c", type=float, required=True)
    sub.set_defaults(func=_cmd_roots)

    sub = commands.add_parser("verify", help="run a self-check suite and report as CSV")
    sub.add_argument("--suite", choices=verify.SUITE_NAMES + ("all",), default="all")
    sub.add_argument("--out", help="write the report CSV here instead of stdout")
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(func=_cmd_verify)
    return parser


def _cmd_render2d(args) -> int:
    kind = "multibrot-complex" if args.kind == "multibrot" else "hyperbrot"
    factor = args.supersample
    window = Window2D(*args.window, args.res * factor, args.res * factor)
    raster = scan2d(kind, args.power, window, args.max_iter, workers=args.threads)
    gray = formats.gray_image(raster)
    if factor > 1:
        gray = formats.downsample_gray(gray, factor)
    formats.write_bytes(formats.gray_ppm_bytes(gray), args.out)
    return 0


def _cmd_render3d(args) -> int:
    spec = SliceSpec(args.axes)
    window = Window3D(*args.window, args.res, args.res, args.res)
    raster = scan3d(spec, args.power, window, args.max_iter, workers=args.threads)
    formats.write_vox(raster, args.out)
    if args.obj:
        formats.write_octahedron_obj(OctahedronSpec.for_power(args.power), args.obj)
    return 0


def _cmd_roots(args) -> int:
    report = classify(args.power, args.c)
    if report.regime in ("CZero", "ThreeSimple"):
        report = refine_bounds(args.power, args.c, report)
    print(f"regime: {report.regime}", file=sys.stderr)
    sys.stdout.write(formats.roots_csv_text(report))
    return 0


def _cmd_verify(args) -> int:
    rows = verify.run_suite(args.suite, seed=args.seed)
    csv_text = formats.verify_csv_text(rows)
    if args.out:
        formats.write_text(csv_text, args.out)
    else:
        sys.stdout.write(csv_text)
    failed = [r for r in rows if not r.passed]
    print(f"{args.suite}: {len(rows) - len(failed)} of {len(rows)} checks passed",
          file=sys.stderr)
    for row in failed:
        print(f"FAIL {row.name}: expected {row.expected}, observed {row.observed}",
              file=sys.stderr)
    return 2 if failed else 0


def _join_window_values(argv: list[str]) -> list[str]:
    # "--window -1.5,1.5,-1.5,1.5": argparse reads the leading "-" of the
    # value as an option prefix, so fold the value into one "--window=" token
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(_join_window_values(list(argv)))
        return args.func(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        print("run 'tricomplex --help' for usage", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:
        return int(e.code or 0)


def main() -> None:
    sys.exit(run())
