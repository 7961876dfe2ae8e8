"""Command-line entry point: ``fordtunnels <command> [options]``.

Exit codes:
  0  success
  2  check-simple: not simple
  3  check-simple: uncertain (tangency within tolerance)
  4  find-t0: no sign change on the interval
  5  alarm: the discreteness alarm fired
  6  unreadable or malformed rep document
  7  invalid representation, or a face pairing check failed
  8  parameter out of range
  9  enumeration budget exceeded
  10 degenerate configuration
  11 lifts too far apart for an epsilon-ball witness
  1  any other toolkit error
  64 command-line usage error
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import errors
from .ford import discreteness_alarm, face_pairing_check, ford_footprint, is_simple_ford
from .geometry import Geodesic, dual_geodesic
from .group import enumerate_elements, rep_from_family
from .moebius import INF
from .render import render_svg, scene_from_footprint
from .serialization import load_rep, report, serialize_rep
from .tunnels import find_t0, lift_pair_distance, min_translate_distance, tunnel_roles

EXIT_OK = 0
EXIT_NOT_SIMPLE = 2
EXIT_UNCERTAIN = 3
EXIT_NO_SIGN_CHANGE = 4
EXIT_ALARM = 5
EXIT_USAGE = 64

ERROR_CODES = (
    (errors.NoSignChange, EXIT_NO_SIGN_CHANGE),
    (errors.ParseError, 6),
    (errors.ValidationError, 7),
    (errors.OutOfRange, 8),
    (errors.BudgetExceeded, 9),
    (errors.DegenerateConfiguration, 10),
    (errors.HypothesisViolated, 10),
    (errors.TooFarApart, 11),
    (errors.FordToolkitError, 1),
)

EXAMPLES = ("simple-ford", "prop42", "thm43")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _boundary_point(text: str):
    t = text.strip().lower()
    if t in ("inf", "infinity", "oo"):
        return INF
    try:
        return complex(t.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _common_options() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--rep", metavar="FILE", help="rep document (JSON)")
    src.add_argument("--example", choices=EXAMPLES, help="built-in representation")
    p.add_argument("--n", type=int, default=2, help="number of generators for thm43 (default 2)")
    p.add_argument("--t", type=_float_list, help="family parameters, comma separated (default all 2)")
    p.add_argument("--tol", type=float, help="override the rep tolerance")
    p.add_argument("--grid", type=int, default=64, help="visibility sampling resolution")
    p.add_argument("--max-word-len", type=int, help="longest word to enumerate")
    p.add_argument("--lattice-bound", type=int, help="bound on lattice offsets in words")
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    p.add_argument("--format", choices=("report", "svg"), default="report")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _Parser(prog="fordtunnels", description="Ford domains and tunnel geodesics.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    sub.add_parser("check-simple", parents=[common], help="test for a simple Ford domain")
    sub.add_parser("ford", parents=[common], help="visible isometric spheres over the fundamental parallelogram")
    p = sub.add_parser("find-t0", parents=[common], help="parameter at which tunnel k self-intersects")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--interval", type=float, nargs=2, metavar=("LO", "HI"), default=(0.0, 4.0))
    p = sub.add_parser("self-intersect", parents=[common], help="closest approach of a geodesic to its translates")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--k", type=int)
    target.add_argument("--geodesic", type=_boundary_point, nargs=2, metavar=("E1", "E2"))
    sub.add_parser("alarm", parents=[common], help="isometric spheres larger than the shortest cusp translation")
    sub.add_parser("faces", parents=[common], help="face pairing residuals of the generators")
    sub.add_parser("export-rep", parents=[common], help="write the rep document")
    return parser


def load_args_rep(args):
    if args.rep:
        rep = load_rep(args.rep)
    elif args.example:
        t = args.t
        if args.example == "prop42" and t is not None:
            if len(t) != 1:
                raise UsageError("prop42 takes a single --t value")
            t = t[0]
        rep = rep_from_family(args.example, n=args.n, t=t)
    else:
        raise UsageError("one of --rep or --example is required")
    if args.tol is not None:
        if args.tol <= 0:
            raise UsageError("--tol must be positive")
        rep = rep.with_gammas(rep.gammas, tol=args.tol)
    return rep


def _option(value, default):
    return default if value is None else value


def _cmd_check_simple(args, rep):
    res = is_simple_ford(rep)
    witness = None
    if res.witness is not None:
        s1, s2, rel = res.witness
        witness = {"sphere1": s1, "sphere2": s2, "relation": rel}
    code = {"simple": EXIT_OK, "not_simple": EXIT_NOT_SIMPLE}.get(res.verdict, EXIT_UNCERTAIN)
    return report("check-simple", {"verdict": res.verdict, "min_gap": res.min_gap, "witness": witness}), code


def _footprint_payload(fp):
    return {
        "parallelogram": fp.parallelogram,
        "max_len": fp.max_len,
        "lattice_bound": fp.lattice_bound,
        "grid_res": fp.grid_res,
        "spheres": [{"center": e.sphere.center, "radius": e.sphere.radius,
                     "owner": None if e.sphere.owner is None else str(e.sphere.owner),
                     "visibility": e.visibility, "margin": e.margin,
                     "lattice_class": e.lattice_class} for e in fp.spheres],
        "visible_classes": [{"center": c, "radius": r} for c, r in fp.visible_classes()],
    }


def _cmd_ford(args, rep):
    fp = ford_footprint(rep, _option(args.max_word_len, 1), _option(args.lattice_bound, 1), args.grid)
    if args.format == "svg":
        return render_svg(scene_from_footprint(fp)), EXIT_OK
    return report("ford", _footprint_payload(fp)), EXIT_OK


def _cmd_find_t0(args, rep):
    if rep.family not in ("prop42", "thm43"):
        raise errors.DegenerateConfiguration("find-t0 needs a prop42 or thm43 rep")
    n = rep.n
    t = list(rep.params) if rep.family == "thm43" else None
    res = find_t0(rep.family, args.k, n=n, interval=tuple(args.interval), t=t)
    if args.format == "svg":
        fam = rep_from_family(rep.family, n=n, t=_family_params(rep, args.k, res.t0))
        fp = ford_footprint(fam, 1, 0, args.grid)
        lifts = ((res.witness[0], "lift a"), (res.witness[1], "lift b"))
        return render_svg(scene_from_footprint(fp, lifts)), EXIT_OK
    return report("find-t0", res), EXIT_OK


def _family_params(rep, k, value):
    if rep.family == "prop42":
        return value
    params = list(rep.params)
    params[k - 1] = value
    return params


def _cmd_self_intersect(args, rep):
    max_len = _option(args.max_word_len, 3)
    bound = _option(args.lattice_bound, 0)
    payload = {"max_len": max_len, "lattice_bound": bound}
    lifts = ()
    if args.geodesic is not None:
        try:
            g = Geodesic(*args.geodesic)
        except ValueError as exc:
            raise UsageError(f"--geodesic: {exc}")
    else:
        _, _, tau = tunnel_roles(rep, args.k)
        g = dual_geodesic(tau)
        lp = lift_pair_distance(rep, args.k)
        payload["k"] = args.k
        payload["lift_pair"] = {"dist": lp.dist, "flag": lp.flag, "lift_a": lp.lift_a, "lift_b": lp.lift_b}
        lifts = ((lp.lift_a, "lift a"), (lp.lift_b, "lift b"))
    found = min_translate_distance(rep, g, max_len, bound)
    if args.format == "svg":
        fp = ford_footprint(rep, 1, 0, args.grid)
        return render_svg(scene_from_footprint(fp, lifts)), EXIT_OK
    payload.update(geodesic=g, translate={"dist": found.dist, "flag": found.flag,
                                          "word": None if found.word is None else str(found.word),
                                          "image": found.image, "candidates": found.candidates})
    return report("self-intersect", payload), EXIT_OK


def _cmd_alarm(args, rep):
    elements = enumerate_elements(rep, _option(args.max_word_len, 2), _option(args.lattice_bound, 0))
    res = discreteness_alarm(rep, elements)
    payload = {"alarm": res.alarm, "min_translation": res.min_translation, "max_radius": res.max_radius,
               "offenders": [{"word": str(w), "radius": r} for w, r in res.offenders]}
    return report("alarm", payload), EXIT_ALARM if res.alarm else EXIT_OK


def _cmd_faces(args, rep):
    res = face_pairing_check(rep, rep.tol if args.tol is not None else 1e-8)
    return report("faces", res), EXIT_OK if res.ok else 7


def _cmd_export_rep(args, rep):
    return serialize_rep(rep), EXIT_OK


COMMANDS = {
    "check-simple": _cmd_check_simple,
    "ford": _cmd_ford,
    "find-t0": _cmd_find_t0,
    "self-intersect": _cmd_self_intersect,
    "alarm": _cmd_alarm,
    "faces": _cmd_faces,
    "export-rep": _cmd_export_rep,
}


def _error_code(exc: Exception) -> int:
    for cls, code in ERROR_CODES:
        if isinstance(exc, cls):
            return code
    return 1


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            rep = load_args_rep(args)
        for w in caught:
            print(f"fordtunnels: warning: {w.message}", file=sys.stderr)
        if args.format == "svg" and args.command not in ("ford", "find-t0", "self-intersect"):
            raise UsageError(f"--format svg is not available for {args.command}")
        text, code = COMMANDS[args.command](args, rep)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fordtunnels: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except errors.FordToolkitError as exc:
        print(f"fordtunnels: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _error_code(exc)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"fordtunnels: error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return code


def main(argv=None):
    sys.exit(run(argv))
