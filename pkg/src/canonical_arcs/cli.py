"""Command-line interface: solve, enumerate, verify, render."""

import argparse
import json
import sys

from . import __version__
from .document import dumps_config, dumps_document, loads_config
from .errors import ArcsError, InvalidArguments, InvalidInput, NumericalFailure, PairingMismatch
from .isotopy import Pairing, class_pairing, enumerate_classes, parse_class
from .oracle.verify import DEFAULT_RESOLUTION, verify_configuration
from .render import render_svg
from .solver import SamplingBudget, build_configuration
from .sphere import parse_point

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidArguments(message)


def _points(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise InvalidArguments(f"--points needs four comma-separated points, got {len(parts)}")
    try:
        return [parse_point(p) for p in parts]
    except ValueError as exc:
        raise InvalidArguments(str(exc)) from None


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidArguments(f"cannot read {path}: {exc.strerror}") from None


def cmd_solve(args, out):
    pts = _points(args.points)
    cls = parse_class(args.cls)
    if args.pairing is not None:
        wanted = Pairing.parse(args.pairing)
        derived = class_pairing(cls)
        if wanted is not derived:
            raise PairingMismatch(f"class {cls} induces pairing {derived}, not {wanted}")
    budget = SamplingBudget() if args.h is None else SamplingBudget(h=args.h)
    config = build_configuration(pts, cls, budget)
    text = dumps_config(config)
    if args.out:
        _write(args.out, text)
        out.write(
            f"class {cls} pairing {config.pairing} samples {len(config.arc0)},{len(config.arc1)} "
            f"modulus {config.annulus_modulus:.12g}\n"
        )
    else:
        out.write(text)
    if args.svg:
        _write(args.svg, render_svg(config))
    return EXIT_OK


def cmd_enumerate(args, out):
    classes = enumerate_classes(args.max_height)
    if args.json:
        doc = [{"r": c.r, "s": c.s, "pairing": str(class_pairing(c))} for c in classes]
        out.write(dumps_document(doc))
    else:
        for c in classes:
            out.write(f"({c.r},{c.s}) {class_pairing(c)}\n")
    return EXIT_OK


def cmd_verify(args, out):
    config = loads_config(_read(args.file))
    report = verify_configuration(config, tol=args.tol, resolution=args.resolution)
    for k in (0, 1):
        verdict = "pass" if report.arc_passed[k] else "FAIL"
        out.write(f"arc{k} hausdorff {report.hausdorff[k]:.3e} tol {report.tol:.3e} {verdict}\n")
    out.write(
        f"involution fix {report.fix_residual:.3e} idem {report.idem_residual:.3e} "
        f"{'pass' if report.involution_passed else 'FAIL'}\n"
    )
    out.write(f"disjointness margin {report.disjointness_margin:.3e}\n")
    if report.below_floor:
        out.write("note: tolerance is below the sampling floor 5*h\n")
    out.write(f"result {'pass' if report.passed else 'FAIL'}\n")
    if args.report:
        _write(args.report, dumps_document(report.as_dict()))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_render(args, out):
    config = loads_config(_read(args.file))
    if args.width < 16:
        raise InvalidArguments("--width must be at least 16")
    _write(args.svg, render_svg(config, args.width))
    return EXIT_OK


def build_parser():
    p = _Parser(prog="canonical-arcs", description="Canonical arc pairs for four sphere points.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="build the canonical configuration of a class")
    s.add_argument("--points", required=True, help="P0,P1,P2,P3 with entries like 1, -2.5, 3+4i or inf")
    s.add_argument("--class", dest="cls", required=True, help="slope r/s with gcd(r, s) = 1")
    s.add_argument("--pairing", help="expected pairing (validated against the class)")
    s.add_argument("--h", type=float, help="chordal sampling step (default 1e-2)")
    s.add_argument("--out", help="write the JSON document here instead of stdout")
    s.add_argument("--svg", help="also write an SVG figure")
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("enumerate", help="list classes up to a height")
    e.add_argument("--max-height", type=int, required=True)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check a configuration with the slit-map oracle")
    v.add_argument("file")
    v.add_argument("--tol", type=float, help="Hausdorff tolerance (default max(5e-3, 5h))")
    v.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    v.add_argument("--report", help="write the report as JSON")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="draw a configuration as SVG")
    r.add_argument("file")
    r.add_argument("--svg", required=True)
    r.add_argument("--width", type=int, default=600)
    r.set_defaults(func=cmd_render)
    return p


def _one_line(text):
    return " ".join(str(text).split())


def run(argv=None, out=None, err=None):
    """Run the CLI; returns the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except InvalidInput as exc:
        err.write(f"error: {type(exc).__name__}: {_one_line(exc)}\n")
        return EXIT_INVALID
    except NumericalFailure as exc:
        err.write(f"error: {type(exc).__name__}: {_one_line(exc)}\n")
        return EXIT_NUMERICAL
    except ArcsError as exc:
        err.write(f"error: {type(exc).__name__}: {_one_line(exc)}\n")
        return EXIT_NUMERICAL
    except OSError as exc:
        err.write(f"error: OSError: {_one_line(exc)}\n")
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
