"""Command-line interface: ``projconf <command> ...``."""
from __future__ import annotations

import argparse
import sys

from . import classifier, closure, enumeration
from .errors import ParameterError, ProjconfError
from .families import parse_family_label
from .io import dumps, parse_config
from .rankmatrix import compute_rank_matrix
from .splitting import compute_splitting


def _orbit(args) -> classifier.OrbitClass:
    if args.config:
        return classifier.classify(parse_config(args.config))
    if not args.family:
        raise ParameterError("give an orbit with --family LABEL [--param P ...] or --config FILE")
    params = args.param or None
    if params and len(params) == 1:
        params = params[0]
    return classifier.orbit_from_tag(args.family, params)


def cmd_classify(args):
    return dumps(classifier.classify(parse_config(args.config)).to_json())


def cmd_splitting(args):
    s = compute_splitting(parse_config(args.config))
    return dumps({"splitting": s.to_json(), "label": str(s), "type": s.type_str()})


def cmd_rank_matrix(args):
    phi = compute_rank_matrix(parse_config(args.config))
    return dumps(phi.to_json())


def cmd_same_orbit(args):
    a, b = parse_config(args.first), parse_config(args.second)
    return dumps(classifier.same_orbit(a, b))


def cmd_closure(args):
    o = _orbit(args)
    return dumps(closure.orbit_closure_description(o).to_json())


def cmd_closure_contains(args):
    o = _orbit(args)
    if args.target_config:
        psi = compute_rank_matrix(parse_config(args.target_config))
    else:
        from .families import family_rank_matrix

        psi = family_rank_matrix(parse_family_label(args.target))
    return dumps(closure.fibre_closure_verdict(o, psi))


def cmd_enumerate(args):
    return dumps(enumeration.catalogue_json())


def cmd_hasse(args):
    return enumeration.export_dot(enumeration.build_poset(args.kind))


def cmd_verify(args):
    from .acceptance import run_all

    results = run_all(seed=args.seed)
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    sys.stdout.write("\n".join(lines) + "\n")
    return ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="projconf", description="Orbits of five ordered points in P^3.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def with_config(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="config JSON file or inline JSON text")
        p.set_defaults(func=func)
        return p

    with_config("classify", cmd_classify, "rank type, family and parameter of a configuration")
    with_config("splitting", cmd_splitting, "indecomposable splitting of a configuration")
    with_config("rank-matrix", cmd_rank_matrix, "rank matrix of a configuration")

    p = sub.add_parser("same-orbit", help="whether two configurations lie in one orbit")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_same_orbit)

    def orbit_args(p):
        p.add_argument("--family", help='family label, e.g. "phi[5^3]" or "phi[4^2;1]"')
        p.add_argument("--param", action="append", help='parameter like "1:2:3"; repeat for the two-point family')
        p.add_argument("--config", help="take the orbit of this configuration instead")

    p = sub.add_parser("closure", help="explicit closure description of an orbit")
    orbit_args(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("closure-contains", help="verdict of an orbit closure on a fibre")
    orbit_args(p)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--target", help="family label of the target fibre")
    target.add_argument("--target-config", help="configuration whose rank matrix is the target")
    p.set_defaults(func=cmd_closure_contains)

    p = sub.add_parser("enumerate", help="catalogue of all rank matrices")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hasse", help="Hasse diagram of an order as DOT")
    p.add_argument("--kind", choices=list(enumeration.ORDER_KINDS), default="leq")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--seed", type=int, default=20240611)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except ProjconfError as exc:
        sys.stdout.write(dumps(exc.to_json()))
        return 1
    if isinstance(out, bool):
        return 0 if out else 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
