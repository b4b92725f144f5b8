"""Command-line interface.

Subcommands:
  tess       tessellate a spinor pair and report exact areas/curvatures
  solve      fourth curvature(s) completing three tangent circles
  quad       integral quadruple family generated by a spinor pair
  verify     place a quadruple and check every spinor law numerically
  enumerate  stream quadruple families over an integer spinor box
  render     draw a tessellation or configuration JSON payload as SVG

Exit codes: 0 success, 1 domain/math failure (error name on stderr),
2 usage error.  The environment variable DESCARTES_TOLERANCE overrides
the default numeric tolerance of 1e-9; a --tolerance flag beats both.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import enumeration, svg
from .disks import (
    DEFAULT_TOLERANCE,
    PlacedDisk,
    midcircle_through_tangencies,
    place_configuration,
    realize_fourth,
    verify_spinor_laws,
)
from .errors import NonPositiveCurvature, SpintileError
from .quadruples import from_spinor_pair, fourth_curvatures
from .spinors import Spinor, cross
from .tessellation import (
    build_tessellation,
    butterfly_areas,
    check_observations,
    observation_constant,
    summarize,
    tessellation_to_json_dict,
)


def _env_tolerance() -> float:
    raw = os.environ.get("DESCARTES_TOLERANCE")
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        raise SystemExit(f"invalid DESCARTES_TOLERANCE {raw!r}")
    if value <= 0:
        raise SystemExit(f"DESCARTES_TOLERANCE must be positive, got {raw!r}")
    return value


def _parse_spinor(text: str) -> Spinor:
    try:
        return Spinor.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_rationals(text: str, expected: int) -> list[Fraction]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != expected:
        raise argparse.ArgumentTypeError(
            f"expected {expected} comma-separated values, got {len(parts)}"
        )
    try:
        return [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _cmd_tess(args: argparse.Namespace) -> int:
    tess = build_tessellation(args.a, args.b)
    if args.svg is not None:
        document = svg.render_tessellation(tess)
        with open(args.svg, "w") as handle:
            handle.write(document)
    if args.json:
        print(json.dumps(tessellation_to_json_dict(tess), indent=2))
        return 0
    report = summarize(tess)
    butterflies = butterfly_areas(tess)
    sq = report.square_areas
    red = report.red_areas
    print(f"pair a={tess.a.format()} b={tess.b.format()} (c={tess.c.format()})")
    print(f"squares   |a|^2={sq[0]} |b|^2={sq[1]} |c|^2={sq[2]}")
    print(f"reds      A={red[0]} B={red[1]} C={red[2]}")
    print(f"greens    G={report.green_area} (all six)")
    print(
        "light reds "
        + " ".join(str(v) for v in report.light_red_areas)
    )
    print(f"D={report.curvature_d} D'={report.curvature_d_prime}")
    print(f"midcircle of (A,B,C): {report.midcircle_abc}")
    print(
        "midcircles with D: "
        + " ".join(str(v) for v in report.midcircles_with_d)
    )
    print(
        "midcircles with D': "
        + " ".join(str(v) for v in report.midcircles_with_d_prime)
    )
    print("butterflies " + " ".join(str(v) for v in butterflies))
    print(f"square + opposite red constant: {observation_constant(tess)}")
    print(
        f"descartes residuals: D -> {report.descartes_residual_d}, "
        f"D' -> {report.descartes_residual_d_prime}"
    )
    for observation in check_observations(tess):
        status = "ok" if observation.passed else "FAILED"
        print(f"observation {observation.name}: {status}")
    print(f"overlap: {'yes' if tess.has_overlap else 'no'}")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    a, b, c = args.curvatures
    result = fourth_curvatures(a, b, c)
    if args.json:
        payload = {
            "curvatures": [str(a), str(b), str(c)],
            "larger": str(result.larger) if result.exact else result.larger,
            "smaller": str(result.smaller) if result.exact else result.smaller,
            "exact": result.exact,
        }
        print(json.dumps(payload, indent=2))
        return 0
    kind = "exact" if result.exact else "inexact"
    print(f"{result.larger}, {result.smaller} ({kind})")
    return 0


def _cmd_quad(args: argparse.Namespace) -> int:
    family = from_spinor_pair(args.a, args.b)
    a_curv, b_curv, c_curv = family.shared_curvatures
    if args.json:
        payload = {
            "a": family.generator_a.format(),
            "b": family.generator_b.format(),
            "A": str(a_curv),
            "B": str(b_curv),
            "C": str(c_curv),
            "D1": str(family.d1),
            "D2": str(family.d2),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(
        f"A={a_curv} B={b_curv} C={c_curv} D1={family.d1} D2={family.d2}"
        f"  (cross={cross(family.generator_a, family.generator_b)})"
    )
    return 0


def _realize_quadruple(
    curvatures: list[Fraction],
) -> tuple[tuple[PlacedDisk, ...], tuple[str, ...]]:
    """Place three positive curvatures, realize the remaining one, and
    restore the input order for reporting.

    Placement always runs at the library default tolerance: the user's
    verification tolerance grades the law residuals, not the setup step.
    """
    order = ["A", "B", "C", "D"]
    positives = [i for i, v in enumerate(curvatures) if v > 0]
    if len(positives) < 3:
        raise NonPositiveCurvature(
            "need at least three positive curvatures to place a configuration"
        )
    base = positives[:3]
    fourth = next(i for i in range(4) if i not in base)
    placed_base = place_configuration(*(curvatures[i] for i in base))
    fourth_disk = realize_fourth(placed_base, curvatures[fourth])
    by_index: dict[int, PlacedDisk] = dict(zip(base, placed_base))
    by_index[fourth] = fourth_disk
    disks = tuple(by_index[i] for i in range(4))
    return disks, tuple(order)


def _cmd_verify(args: argparse.Namespace) -> int:
    tolerance = args.tolerance if args.tolerance is not None else _env_tolerance()
    disks, labels = _realize_quadruple(args.curvatures)
    report = verify_spinor_laws(disks, tolerance, labels)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        quad_text = ",".join(str(v) for v in args.curvatures)
        print(f"quadruple ({quad_text}) placed:")
        for label, disk in zip(labels, disks):
            print(
                f"  {label}: center ({disk.center[0]:.12g}, {disk.center[1]:.12g}) "
                f"radius {disk.radius:.12g}"
            )
        print(f"law residuals (tolerance {tolerance:g}):")
        for name, value in report.law_residuals.items():
            print(f"  {name:10s} {value:.3e}")
        print(f"result: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    job = enumeration.EnumerationJob(
        bound=args.bound,
        primitive_only=args.primitive,
        output_format=args.format,
        shard=args.shard,
        include_zero=args.include_zero,
    )
    records = enumeration.enumerate_records(job)
    if args.out is None:
        enumeration.write_stream(records, sys.stdout, job.output_format)
    else:
        enumeration.write_records(records, args.out, job.output_format)
    return 0


def _disk_from_json(payload: dict) -> PlacedDisk:
    return PlacedDisk(
        center=(float(payload["center"][0]), float(payload["center"][1])),
        radius=float(payload["radius"]),
        curvature=float(payload["curvature"]),
    )


def _cmd_render(args: argparse.Namespace) -> int:
    with open(args.from_json) as handle:
        payload = json.load(handle)
    options = svg.RenderOptions(
        width_px=args.width_px,
        show_labels=not args.no_labels,
        show_midcircles=args.midcircles,
        show_spinor_arrows=args.spinor_arrows,
    )
    if "tiles" in payload:
        tess = build_tessellation(
            Spinor.parse(payload["a"]), Spinor.parse(payload["b"])
        )
        document = svg.render_tessellation(tess, options)
    elif "disks" in payload:
        disks = [_disk_from_json(entry) for entry in payload["disks"]]
        labels = [str(entry.get("label", i)) for i, entry in enumerate(payload["disks"])]
        midcircles = []
        if args.midcircles:
            for skip in range(len(disks)):
                triple = [d for i, d in enumerate(disks) if i != skip]
                if len(triple) == 3:
                    midcircles.append(midcircle_through_tangencies(*triple))
        document = svg.render_configuration(disks, midcircles, options, labels)
    else:
        raise SystemExit("json payload has neither 'tiles' nor 'disks'")
    with open(args.out, "w") as handle:
        handle.write(document)
    return 0


def _parse_shard(text: str) -> enumeration.Shard:
    try:
        index_text, count_text = text.split("/")
        return enumeration.Shard(index=int(index_text), count=int(count_text))
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"shard must look like 'i/k': {exc}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _width_px(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value < 64:
        raise argparse.ArgumentTypeError(f"width must be at least 64px, got {value}")
    return value


# values like "-1,2" or "-1/2,2/3" must parse as option values, not flags
_NEGATIVE_VALUE = re.compile(r"^-\d+([,/.]\S*)?$|^-\d*\.\d+\S*$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spintile",
        description="Exact tessellations of spinor pairs and the tangent-circle "
        "configurations they encode.",
    )
    parser._negative_number_matcher = _NEGATIVE_VALUE
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        command._negative_number_matcher = _NEGATIVE_VALUE
        return command

    tess = add_command("tess", "tessellate a spinor pair")
    tess.add_argument("--a", type=_parse_spinor, required=True, metavar="X,Y")
    tess.add_argument("--b", type=_parse_spinor, required=True, metavar="X,Y")
    tess.add_argument("--json", action="store_true")
    tess.add_argument("--svg", metavar="PATH", help="also write an SVG rendering")
    tess.set_defaults(func=_cmd_tess)

    solve = add_command("solve", "solve for the fourth curvature")
    solve.add_argument(
        "--curvatures",
        type=lambda t: _parse_rationals(t, 3),
        required=True,
        metavar="A,B,C",
    )
    solve.add_argument("--json", action="store_true")
    solve.set_defaults(func=_cmd_solve)

    quad = add_command("quad", "quadruple family of a spinor pair")
    quad.add_argument("--a", type=_parse_spinor, required=True, metavar="X,Y")
    quad.add_argument("--b", type=_parse_spinor, required=True, metavar="X,Y")
    quad.add_argument("--json", action="store_true")
    quad.set_defaults(func=_cmd_quad)

    verify = add_command("verify", "place a quadruple and check all laws")
    verify.add_argument(
        "--curvatures",
        type=lambda t: _parse_rationals(t, 4),
        required=True,
        metavar="A,B,C,D",
    )
    verify.add_argument("--tolerance", type=float, default=None)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    enum = add_command("enumerate", "enumerate spinor-pair families")
    enum.add_argument("--bound", type=_positive_int, required=True)
    enum.add_argument("--primitive", action="store_true")
    enum.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    enum.add_argument("--out", metavar="PATH")
    enum.add_argument("--shard", type=_parse_shard, default=enumeration.Shard())
    enum.add_argument(
        "--include-zero",
        action="store_true",
        help="keep pairs containing the zero spinor",
    )
    enum.set_defaults(func=_cmd_enumerate)

    render = add_command("render", "render a JSON payload to SVG")
    render.add_argument("--from-json", required=True, metavar="PATH")
    render.add_argument("--out", required=True, metavar="PATH")
    render.add_argument("--midcircles", action="store_true")
    render.add_argument("--width-px", type=_width_px, default=640)
    render.add_argument("--no-labels", action="store_true")
    render.add_argument("--spinor-arrows", action="store_true")
    render.set_defaults(func=_cmd_render)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; our own SystemExit
        # carries either a code or a message treated as a usage problem
        code = exc.code
        if code is None:
            return 0
        if isinstance(code, int):
            return code
        print(code, file=sys.stderr)
        return 2
    except SpintileError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
