"""Command-line interface: ``jtk <command> [options]``.

Exit status: 0 success, 1 a verification check failed, 2 usage or
configuration error.
"""
import argparse
import json
import os
import sys

from . import hopf
from .errors import ConfigError, JTKError
from .maps import BUILTIN_NAMES, expression_map, resolve_map, solve_forward, solve_inverse
from .parser import parse
from .expr import evaluate
from .rational import format_rational
from .reps import classical_irrep, jordanian_irrep
from .similarity import mu_from_lambda, solve_similarity
from .suites import ALL_SUITES, config_from_spins, run_suite

DEFAULT_SERIES_ORDER = 16
DEFAULT_SIMILARITY_ORDER = 8


def _env_order(default):
    raw = os.environ.get("JTK_DEFAULT_ORDER")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"JTK_DEFAULT_ORDER must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"JTK_DEFAULT_ORDER must be a positive integer, got {raw!r}")
    return value


def _map_from_args(args):
    if getattr(args, "phi", None) is not None:
        if args.map is not None:
            raise ConfigError("give either --map or --phi, not both")
        return expression_map(args.phi, name="phi")
    return resolve_map(args.map or "minimal")


def _series_obj(s):
    return [format_rational(c) for c in s.coefficients]


def _series_text(name, s):
    return f"{name}: " + ", ".join(format_rational(c) for c in s.coefficients)


def _matrices_obj(mats):
    return {k: m.to_json_obj() for k, m in mats.items()}


def _matrices_text(mats):
    return "\n\n".join(f"{k} =\n{m}" for k, m in mats.items())


def cmd_solve_map(args):
    m = _map_from_args(args)
    order = args.order or _env_order(DEFAULT_SERIES_ORDER)
    fwd = solve_forward(m, order)
    inv = solve_inverse(m, order)
    forward = dict(zip(("F2", "F3", "U", "V", "W"), fwd.series()))
    inverse = dict(zip(("psi", "g1", "G2", "G3", "A", "B", "C"), inv.series()))
    phi = m.phi(order)
    if args.format == "json":
        obj = {"map": m.name, "order": order, "phi": _series_obj(phi),
               "forward": {k: _series_obj(v) for k, v in forward.items()},
               "inverse": {k: _series_obj(v) for k, v in inverse.items()}}
        return json.dumps(obj, sort_keys=True), 0
    lines = [f"map {m.name}, coefficients of w^0 .. w^{order - 1}", _series_text("phi", phi)]
    lines += [_series_text(k, v) for k, v in forward.items()]
    lines += [_series_text(k, v) for k, v in inverse.items()]
    return "\n".join(lines), 0


def cmd_build_irrep(args):
    if args.classical:
        mats = classical_irrep(args.two_j).generators()
        name = "classical"
    else:
        m = _map_from_args(args)
        mats = jordanian_irrep(m, args.two_j).generators()
        name = m.name
    if args.format == "json":
        return json.dumps({"map": name, "two_j": args.two_j, "generators": _matrices_obj(mats)},
                          sort_keys=True), 0
    return _matrices_text(mats), 0


def _require_pair(args):
    if args.two_j1 is None or args.two_j2 is None:
        raise ConfigError("--two-j1 and --two-j2 are required")
    for v in (args.two_j1, args.two_j2):
        if v < 0:
            raise ConfigError("spins must be non-negative")


def cmd_rmatrix(args):
    _require_pair(args)
    R = hopf.rmatrix(args.two_j1, args.two_j2)
    return (R.to_json() if args.format == "json" else str(R)), 0


def cmd_twist(args):
    _require_pair(args)
    m = _map_from_args(args)
    tw = hopf.twist_general(m, args.two_j1, args.two_j2)
    mats = {k: v for k, v in tw.matrices().items() if k in ("V", "F", "FS", "R")}
    if args.format == "json":
        return json.dumps({"map": m.name, "two_j1": args.two_j1, "two_j2": args.two_j2,
                           "matrices": _matrices_obj(mats)}, sort_keys=True), 0
    return _matrices_text(mats), 0


def cmd_similarity(args):
    order = args.order or _env_order(DEFAULT_SIMILARITY_ORDER)
    lam = solve_similarity(args.source, args.target, order)
    mu = mu_from_lambda(lam) if args.mu else None
    if args.format == "json":
        obj = {"source": lam.source, "target": lam.target, "order": order,
               "lambda": [format_rational(c) for c in lam.coefficients]}
        if mu is not None:
            obj["mu"] = [format_rational(c) for c in mu.coefficients]
        return json.dumps(obj, sort_keys=True), 0
    lines = [f"c{k} = {format_rational(c)}" for k, c in enumerate(lam.coefficients, start=1)]
    if mu is not None:
        lines += [f"d{k} = {format_rational(c)}" for k, c in enumerate(mu.coefficients)]
    return "\n".join(lines), 0


def cmd_eval(args):
    if args.two_j is None:
        raise ConfigError("--two-j is required")
    tree = parse(args.expr, "matrix").node
    m = _map_from_args(args)
    rep = jordanian_irrep(m, args.two_j)
    env = {**rep.generators(), **rep.classical.generators()}
    value = evaluate(tree, env, rep.dim)
    return (value.to_json() if args.format == "json" else str(value)), 0


def cmd_verify(args):
    if args.phi is not None:
        raise ConfigError("verify takes --map (a builtin name or a file), not --phi")
    cfg = config_from_spins(args.map or "minimal", args.two_j, args.two_j1, args.two_j2, args.two_j3,
                            args.order or _env_order(DEFAULT_SIMILARITY_ORDER))
    report = run_suite(args.suite, cfg)
    text = report.to_json() if args.format == "json" else report.to_text()
    return text, 0 if report.passed else 1


def build_parser():
    p = argparse.ArgumentParser(prog="jtk", description="Exact checks for the Jordanian deformation of sl(2).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, map_opts=True):
        if map_opts:
            sp.add_argument("--map", help=f"builtin ({', '.join(BUILTIN_NAMES)}) or a file holding a phi expression")
            sp.add_argument("--phi", help="phi as an expression in w, e.g. '2*tanh(w/2)'")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--out", help="write output to this file")

    def spins(sp, single=False, pair=False, triple=False):
        if single:
            sp.add_argument("--two-j", type=int, dest="two_j", help="twice the spin")
        if pair:
            sp.add_argument("--two-j1", type=int, dest="two_j1")
            sp.add_argument("--two-j2", type=int, dest="two_j2")
        if triple:
            sp.add_argument("--two-j3", type=int, dest="two_j3")

    sp = sub.add_parser("solve-map", help="series of the forward and inverse generator maps")
    common(sp)
    sp.add_argument("--order", type=int)
    sp.set_defaults(func=cmd_solve_map)

    sp = sub.add_parser("build-irrep", help="generator matrices on a spin j irrep")
    common(sp)
    spins(sp, single=True)
    sp.add_argument("--classical", action="store_true", help="classical sl(2) generators instead")
    sp.set_defaults(func=cmd_build_irrep)

    sp = sub.add_parser("rmatrix", help="triangular R-matrix on j1 (x) j2")
    common(sp, map_opts=False)
    spins(sp, pair=True)
    sp.set_defaults(func=cmd_rmatrix)

    sp = sub.add_parser("twist", help="twist matrices V, F, FS and R for a map")
    common(sp)
    spins(sp, pair=True)
    sp.set_defaults(func=cmd_twist)

    sp = sub.add_parser("similarity", help="similarity series lambda between two maps")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", default="minimal")
    sp.add_argument("--order", type=int)
    sp.add_argument("--mu", action="store_true", help="also print mu as a series in T - 1")
    common(sp, map_opts=False)
    sp.set_defaults(func=cmd_similarity)

    sp = sub.add_parser("eval", help="evaluate a generator expression on an irrep")
    sp.add_argument("expr")
    common(sp)
    spins(sp, single=True)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify", help="run a check suite")
    sp.add_argument("--suite", choices=ALL_SUITES, default="all")
    sp.add_argument("--order", type=int, help="similarity series order")
    common(sp)
    spins(sp, single=True, pair=True, triple=True)
    sp.set_defaults(func=cmd_verify, format="text")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", None) is not None and args.order < 1:
        parser.error("--order must be positive")
    try:
        text, status = args.func(args)
    except JTKError as exc:
        print(f"jtk: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
