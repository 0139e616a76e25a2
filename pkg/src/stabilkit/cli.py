"""Command-line front end.

Exit codes: 0 success (or "stable"/"valid"), 1 negative verdict, 2 input
error, 3 precondition violation. Costs are printed doubled (``cost2``).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from pathlib import Path

from .approx import solve_approx
from .certificate import StabilizerSolution, parse_certificate, serialize_solution
from .errors import GraphParseError, PreconditionError
from .factor_critical import solve_factor_critical
from .fpt import solve_exact, solve_tutte_all
from .gallai_edmonds import decompose, is_stable
from .generators import gen_factor_critical, gen_mkec, gen_random, gen_setcover
from .graph import Graph, format_graph, parse_graph
from .oracle import solve_oracle, verify_certificate

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

ALGORITHMS: dict[str, Callable[[Graph], StabilizerSolution]] = {
    "exact-fpt": solve_exact,
    "factor-critical": solve_factor_critical,
    "approx": solve_approx,
    "tutte-all": solve_tutte_all,
    "oracle": solve_oracle,
}


class InputError(Exception):
    pass


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read(path))
    except GraphParseError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _ints(vs) -> str:
    return ",".join(str(v) for v in sorted(vs))


def cmd_ged(args: argparse.Namespace) -> int:
    ged = decompose(_load_graph(args.file))
    print(f"X={_ints(ged.X)}")
    print(f"Y={_ints(ged.Y)}")
    print(f"Z={_ints(ged.Z)}")
    for K in ged.components:
        print(f"component={_ints(K)}")
    return EXIT_OK


def cmd_stable(args: argparse.Namespace) -> int:
    if is_stable(_load_graph(args.file)):
        print("stable")
        return EXIT_OK
    print("unstable")
    return EXIT_NEGATIVE


def cmd_stabilize(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    sol = ALGORITHMS[args.algo](g)
    text = serialize_solution(sol)
    if args.out:
        Path(args.out).write_text(text)
    print(f"cost2={sol.cost.doubled}")
    if not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    try:
        cert = parse_certificate(_read(args.cert))
    except GraphParseError as exc:
        raise InputError(f"{args.cert}: {exc}") from exc
    verdict = verify_certificate(g, cert)
    if verdict.valid:
        print("valid")
        return EXIT_OK
    print("invalid")
    for v in verdict.violations:
        print(f"violation={v}")
    return EXIT_NEGATIVE


def _emit(graph: Graph, meta: dict | None, out: str | None) -> None:
    text = format_graph(graph)
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    if meta is not None:
        Path(out + ".meta.json").write_text(json.dumps(meta) + "\n")
    print(f"n={graph.n}")
    print(f"m={graph.m}")


def _parse_sets(spec: str) -> list[list[int]]:
    try:
        return [[int(x) for x in block.split(",") if x] for block in spec.split(";")]
    except ValueError as exc:
        raise InputError(f"bad set list {spec!r}; expected e.g. '0,1;1,2'") from exc


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "mkec":
            inst = gen_mkec(_load_graph(args.base), args.k, args.q)
            _emit(inst.graph, inst.to_json_obj(), args.out)
        elif args.family == "setcover":
            inst = gen_setcover(_parse_sets(args.sets), args.elems, args.N)
            _emit(inst.graph, inst.to_json_obj(), args.out)
        elif args.family == "fc":
            _emit(gen_factor_critical(args.ears, args.seed), None, args.out)
        else:
            _emit(gen_random(args.n, args.p, args.seed), None, args.out)
    except ValueError as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise InputError(str(exc)) from exc
    return EXIT_OK


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stabilkit", description="Fractional additive stabilizers of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ged", help="print the Gallai-Edmonds decomposition")
    s.add_argument("file")
    s.set_defaults(func=cmd_ged)

    s = sub.add_parser("stable", help="exit 0 if the graph is stable, 1 otherwise")
    s.add_argument("file")
    s.set_defaults(func=cmd_stable)

    s = sub.add_parser("stabilize", help="compute a stabilizer certificate")
    s.add_argument("file")
    s.add_argument("--algo", choices=sorted(ALGORITHMS), default="exact-fpt")
    s.add_argument("--out", help="write the certificate here instead of stdout")
    s.set_defaults(func=cmd_stabilize)

    s = sub.add_parser("verify", help="check a certificate against a graph")
    s.add_argument("file")
    s.add_argument("cert")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="generate an instance")
    fam = s.add_subparsers(dest="family", required=True)
    g = fam.add_parser("mkec", help="k-edge-coverage reduction")
    g.add_argument("base", help="base graph file")
    g.add_argument("k", type=int)
    g.add_argument("q", type=int, nargs="?", default=0, help="copies of the Tutte block (0: automatic)")
    g = fam.add_parser("setcover", help="set-cover reduction")
    g.add_argument("sets", help="sets as comma lists separated by ';', e.g. '0,1;1,2;0,1,2'")
    g.add_argument("elems", type=int)
    g.add_argument("N", type=int)
    g = fam.add_parser("fc", help="random factor-critical graph from odd ear lengths")
    g.add_argument("ears", type=int, nargs="+")
    g.add_argument("--seed", type=int, default=0)
    g = fam.add_parser("random", help="seeded random graph G(n, p)")
    g.add_argument("n", type=int)
    g.add_argument("p", type=_fraction)
    g.add_argument("seed", type=int)
    for name in ("mkec", "setcover", "fc", "random"):
        fam.choices[name].add_argument("--out", help="write the graph (and metadata) here")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
