import sys
import argparse
import json
import logging
import traceback
from io import StringIO
from typing import Any, List, Optional

from cayley_geom.calculus import CalculusException
from cayley_geom.connection import ConnectionException
from cayley_geom.coordinates import CoordinatesException, hypercubic_calculus, hypercubic_lattice, z4_coordinates
from cayley_geom.curvature import CurvatureException
from cayley_geom.development import DevelopmentException, RenderFormat, develop, folding_report, parse_projection, render
from cayley_geom.io import (Diagnostic, IoException, coframe_report, compatibility_report, curvature_report,
                            hypercubic_report, lattice_report, load_connection, load_lattice, load_metric,
                            metric_report, parse_element, ricci_report, solve_report, torsion_report, write_document,
                            z4_report)
from cayley_geom.lattice import LatticeException
from cayley_geom.metric import MetricException
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, NumericException
from cayley_geom.solver import SolveConfig, SolverException, TorsionMask, parse_grid, resolve_threads, solve

logger = logging.getLogger("cayley_geom")

VALIDATION_EXIT = 2

PACKAGE_EXCEPTIONS = (NumericException, LatticeException, CalculusException, MetricException, ConnectionException,
                      CurvatureException, SolverException, DevelopmentException, CoordinatesException)


def emit(document: Any, schema: str, out_path: Optional[str]):
    """Writes a report to --out, or to stdout when no file is given."""
    if out_path:
        print(f"Writing report to {out_path}...", file=sys.stderr)
        with open(out_path, 'w', encoding='utf-8') as f:
            write_document(document, schema, f)
    else:
        write_document(document, schema, sys.stdout)


def _lattice(args):
    print(f"Loading lattice {args.lattice}...", file=sys.stderr)
    return load_lattice(args.lattice)


def _metric(args, lattice):
    print(f"Loading metric {args.metric}...", file=sys.stderr)
    return load_metric(args.metric, lattice, Backend.parse_str(args.backend))


def _connection(args, lattice):
    print(f"Loading connection {args.connection}...", file=sys.stderr)
    return load_connection(args.connection, lattice, Backend.parse_str(args.backend))


def lattice_info(args):
    emit(lattice_report(_lattice(args)), "lattice-info", args.out)


def metric_check(args):
    lattice = _lattice(args)
    emit(metric_report(lattice, _metric(args, lattice), args.tolerance), "metric-check", args.out)


def compat_check(args):
    lattice = _lattice(args)
    m, c = _metric(args, lattice), _connection(args, lattice)
    emit(compatibility_report(lattice, m, c, args.tolerance), "compat-check", args.out)


def torsion_command(args):
    lattice = _lattice(args)
    emit(torsion_report(lattice, _connection(args, lattice), args.tolerance), "torsion", args.out)


def curvature_command(args):
    lattice = _lattice(args)
    emit(curvature_report(lattice, _connection(args, lattice), args.tolerance), "curvature", args.out)


def ricci_command(args):
    lattice = _lattice(args)
    m, c = _metric(args, lattice), _connection(args, lattice)
    emit(ricci_report(lattice, m, c), "ricci", args.out)


def solve_lc(args):
    lattice = _lattice(args)
    m = _metric(args, lattice)
    config = SolveConfig(constant_connection=not args.site_dependent,
                         grid=parse_grid(args.grid),
                         restarts=args.restarts,
                         seed=args.seed,
                         threads=resolve_threads(args.threads),
                         tolerance=args.tolerance)
    mask = TorsionMask.parse_str(args.mask)
    print(f"Solving with mask {mask}...", file=sys.stderr)
    report = solve(lattice, m, mask, config)
    print(f"Found {len(report)} connections.", file=sys.stderr)
    emit(solve_report(report), "solve-lc", args.out)


def develop_command(args):
    lattice = _lattice(args)
    m, c = _metric(args, lattice), _connection(args, lattice)
    base = parse_element(lattice.group, args.base)
    development = develop(lattice, m, c, base, args.depth)
    if folding_report(lattice, c, development).is_folded():
        logger.warning("transport reverses orientation, the development folds over itself")
    fmt = args.format
    if fmt is None:
        fmt = "svg" if args.out and args.out.lower().endswith(".svg") else "json"
    fmt = RenderFormat.parse_str(fmt)
    if fmt == RenderFormat.JSON:
        buffer = StringIO()
        render(development, fmt, buffer)
        emit(json.loads(buffer.getvalue()), "develop", args.out)
        return
    projection = parse_projection(args.projection)
    if args.out:
        print(f"Writing figure to {args.out}...", file=sys.stderr)
        with open(args.out, 'w', encoding='utf-8') as f:
            render(development, fmt, f, projection)
    else:
        render(development, fmt, sys.stdout, projection)


def _moduli(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",")]
    except ValueError:
        raise IoException(f"invalid torus moduli '{text}'", Diagnostic.VALIDATION_FAILED)


def coords_command(args):
    if args.coords_command == "z4-demo":
        emit(z4_report(z4_coordinates()), "coords", args.out)
        return
    lattice = hypercubic_lattice(_moduli(args.torus))
    system = hypercubic_calculus(lattice, args.kappa)
    c = _connection(args, lattice) if args.connection else None
    m = _metric(args, lattice) if args.metric else None
    if args.report == "bianchi" and c is None:
        raise IoException("the Bianchi report needs --connection", Diagnostic.VALIDATION_FAILED)
    document = hypercubic_report(system, c, m, args.report == "bianchi", args.tolerance)
    emit(document, "coords", args.out)


def coframe_command(args):
    lattice = _lattice(args)
    m = _metric(args, lattice)
    c = _connection(args, lattice) if args.connection else None
    emit(coframe_report(lattice, m, c, args.tolerance), "coframe", args.out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=["exact", "float"], default="exact",
                        help="Scalar arithmetic: exact rationals or float64 (default exact).")
    common.add_argument("--tolerance", type=float, default=FLOAT_TOLERANCE,
                        help="Zero tolerance for float comparisons.")
    common.add_argument("-o", "--out", help="Output file. Defaults to stdout.")
    common.add_argument("-v", "--verbose", action="store_true", help="Log progress at debug level.")

    arg_parser = argparse.ArgumentParser(description="Discrete Riemannian geometry on bicovariant group lattices.")
    commands = arg_parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, metric: bool = False, connection: bool = False,
                lattice: bool = True) -> argparse.ArgumentParser:
        parser = commands.add_parser(name, parents=[common], help=help_text)
        if lattice:
            parser.add_argument("--lattice", required=True, help="Lattice JSON file.")
        if metric:
            parser.add_argument("--metric", required=True, help="Metric JSON file.")
        if connection:
            parser.add_argument("--connection", required=True, help="Connection JSON file.")
        parser.set_defaults(handler=handler)
        return parser

    command("lattice-info", lattice_info, "Classify the arrow pairs of a lattice.")
    command("metric-check", metric_check, "Validate a metric and report its signature.", metric=True)
    command("compat-check", compat_check, "Check metric compatibility of a connection.", metric=True,
            connection=True)
    command("torsion", torsion_command, "Torsion components of a connection.", connection=True)
    command("curvature", curvature_command, "Curvature components of a connection.", connection=True)
    command("ricci", ricci_command, "Ricci contractions and curvature scalar.", metric=True, connection=True)

    solver = command("solve-lc", solve_lc, "Search for Levi-Civita connections.", metric=True)
    solver.add_argument("--mask", default="all", help="Torsion sectors forced to vanish, e.g. biangle,triangle.")
    kind = solver.add_mutually_exclusive_group()
    kind.add_argument("--constant", dest="site_dependent", action="store_false",
                      help="Search site independent connections (default).")
    kind.add_argument("--site-dependent", dest="site_dependent", action="store_true",
                      help="Solve the compatibility equations site by site.")
    solver.add_argument("--grid", default="default", help='"default", "none" or comma separated rationals.')
    solver.add_argument("--restarts", type=int, default=8, help="Newton restarts when --grid none.")
    solver.add_argument("--seed", type=int, default=0, help="Seed for Newton starting points.")
    solver.add_argument("--threads", type=int, default=None,
                        help="Worker threads; falls back to $CAYLEY_GEOM_THREADS, then 1.")

    developer = command("develop", develop_command, "Develop the lattice into the tangent space.", metric=True,
                        connection=True)
    developer.add_argument("--base", default="0", help="Base site of the development.")
    developer.add_argument("--depth", type=int, default=2, help="Longest word developed.")
    developer.add_argument("--format", choices=["svg", "json"], help="Defaults to svg for .svg output, else json.")
    developer.add_argument("--projection", default="0,1", help="Tangent axes drawn in the SVG figure.")

    coframe = command("coframe", coframe_command, "Orthonormal coframe and frame connection.", metric=True)
    coframe.add_argument("--connection", help="Connection JSON file.")

    coords = commands.add_parser("coords", help="Coordinate calculus on Z4 and hypercubic lattices.")
    coords.set_defaults(handler=coords_command)
    systems = coords.add_subparsers(dest="coords_command", required=True)
    systems.add_parser("z4-demo", parents=[common], help="The coordinates x, y on (Z4, {1,2}).")
    hypercubic = systems.add_parser("hypercubic", parents=[common], help="Coordinates x = kappa a on a torus.")
    hypercubic.add_argument("--torus", default="5,5", help="Torus moduli, e.g. 5,5.")
    hypercubic.add_argument("--kappa", default="1", help="Lattice spacing as a rational.")
    hypercubic.add_argument("--connection", help="Connection JSON file.")
    hypercubic.add_argument("--metric", help="Metric JSON file.")
    hypercubic.add_argument("--report", choices=["none", "bianchi"], default="none",
                            help="Add the Bianchi identity checks.")
    return arg_parser


def fail(code: Diagnostic, message: str) -> int:
    print(json.dumps({"error": {"code": code.value, "message": message}}, sort_keys=True), file=sys.stderr)
    return VALIDATION_EXIT


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.handler(args)
    except IoException as e:
        return fail(e.code, str(e))
    except PACKAGE_EXCEPTIONS as e:
        return fail(Diagnostic.VALIDATION_FAILED, str(e))
    except Exception as e:
        print(f"\nAn unexpected error occurred: {e}", file=sys.stderr)
        traceback.print_exc()
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
