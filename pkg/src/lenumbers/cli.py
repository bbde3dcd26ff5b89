"""Command-line interface: analyze, constraints, arrangement, cyclo."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arrangements import CentralArrangement3, arrangement_report
from .constraints import ComponentData, SingularSetup, full_report
from .cyclo import CycloProduct, cyclotomic, factor_unity, homogeneous_char
from .errors import (
    GenericityError,
    InputError,
    LeNumbersError,
    PolyParseError,
    ResourceLimitError,
)
from .invariants import analyze_poly
from .localring import Budget
from .polynomials import parse_poly

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GENERICITY = 2
EXIT_RESOURCE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route usage errors through the input-error exit code
        raise InputError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="lenumbers",
                     description="Exact slice invariants and Milnor-fiber "
                                 "monodromy constraints for hypersurface "
                                 "singularities with one-dimensional critical locus.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="path to a JSON job file, '-' for stdin, "
                                        "or inline JSON starting with '{'")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for slice-form candidates (default 0)")
    common.add_argument("--max-pairs", type=int, default=100_000)
    common.add_argument("--max-monomials", type=int, default=1_000_000)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common],
                   help="compute slice invariants of a polynomial, then constraints")
    sub.add_parser("constraints", parents=[common],
                   help="run the constraint engine on numeric setup data")
    sub.add_parser("arrangement", parents=[common],
                   help="analyze a central hyperplane arrangement in C^3")
    cyclo = sub.add_parser("cyclo", parents=[common],
                           help="cyclotomic utilities: phi, unity, homchar, gcd")
    cyclo.add_argument("operation", choices=("phi", "unity", "homchar", "gcd"))
    cyclo.add_argument("args", nargs="*")
    return parser


def _load_job(args) -> dict:
    if args.input is None:
        raise InputError("this command needs --input")
    text = args.input
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith("{"):
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read input file: {exc}")
    try:
        job = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON input: {exc}")
    if not isinstance(job, dict):
        raise InputError("the JSON input must be an object")
    return job


def _budget(args) -> Budget:
    if args.max_pairs < 1 or args.max_monomials < 1:
        raise InputError("budgets must be positive")
    return Budget(max_pairs=args.max_pairs, max_monomials=args.max_monomials)


def _frac(value) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot read {value!r} as a rational number")


def _emit(payload: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_analyze(args) -> int:
    job = _load_job(args)
    try:
        poly_text = job["polynomial"]
        variables = list(job["variables"])
    except KeyError as missing:
        raise InputError(f"analyze input is missing the key {missing}")
    if not isinstance(poly_text, str):
        raise InputError("'polynomial' must be a string")
    f = parse_poly(poly_text, variables)
    z0 = job.get("z0")
    if z0 is not None:
        z0 = [_frac(c) for c in z0]
    seed = args.seed if args.seed is not None else int(job.get("seed", 0))
    result = analyze_poly(f, z0=z0, seed=seed, budget=_budget(args), names=variables)
    le = result.invariants
    payload = {
        "command": "analyze",
        "polynomial": poly_text,
        "variables": variables,
        "seed": seed,
        "slice_variables": list(result.slice_names),
        "le": le.to_dict(),
        "polar_ideal": (None if result.polar is None
                        else result.polar.to_strings(result.slice_names)),
        "constraints": None,
    }
    lines = [le.render_text()]
    if not le.genericity_ok:
        _emit(payload, "\n".join(lines), args.format)
        return EXIT_GENERICITY
    setup = SingularSetup(
        n=result.setup.n,
        mu0=le.mu0,
        char_h0=None if job.get("charH0") is None else CycloProduct.parse(job["charH0"]),
        d0=int(job["d0"]) if job.get("d0") is not None else None,
        components=tuple(ComponentData.from_dict(c)
                         for c in job.get("components", [])),
        lambda0=le.lambda0,
        omega=le.omega,
    )
    report = full_report(setup, le=le)
    payload["constraints"] = report.to_dict()
    lines.append(report.render_text())
    _emit(payload, "\n".join(lines), args.format)
    return EXIT_OK


def _cmd_constraints(args) -> int:
    job = _load_job(args)
    setup = SingularSetup.from_dict(job)
    report = full_report(setup)
    payload = {"command": "constraints", "setup": setup.to_dict(),
               "report": report.to_dict()}
    _emit(payload, report.render_text(), args.format)
    return EXIT_OK


def _cmd_arrangement(args) -> int:
    job = _load_job(args)
    if "normals" not in job:
        raise InputError("arrangement input is missing the key 'normals'")
    normals = tuple(tuple(_frac(v) for v in n) for n in job["normals"])
    arr = CentralArrangement3(normals)
    z0 = job.get("z0")
    report = arrangement_report(arr, z0=z0)
    payload = {"command": "arrangement",
               "normals": [[str(v) for v in n] for n in arr.normals],
               "report": report.to_dict()}
    _emit(payload, report.render_text(), args.format)
    return EXIT_OK


def _cmd_cyclo(args) -> int:
    op = args.operation
    values = args.args
    if op == "phi":
        if len(values) != 1:
            raise InputError("usage: cyclo phi K")
        poly = cyclotomic(_int(values[0]))
        payload = {"command": "cyclo", "operation": "phi", "polynomial": str(poly)}
        _emit(payload, str(poly), args.format)
        return EXIT_OK
    if op == "unity":
        if len(values) != 1:
            raise InputError("usage: cyclo unity D")
        product = factor_unity(_int(values[0]))
        text = f"{product} ; expands to {product.expand()}"
        payload = {"command": "cyclo", "operation": "unity",
                   "factors": str(product), "expanded": str(product.expand())}
        _emit(payload, text, args.format)
        return EXIT_OK
    if op == "homchar":
        if len(values) != 2:
            raise InputError("usage: cyclo homchar N D")
        product = homogeneous_char(_int(values[0]), _int(values[1]))
        text = f"{product} ; degree {product.degree()} ; trace {product.trace()}"
        payload = {"command": "cyclo", "operation": "homchar", "factors": str(product),
                   "degree": product.degree(), "trace": product.trace()}
        _emit(payload, text, args.format)
        return EXIT_OK
    if len(values) != 2:
        raise InputError("usage: cyclo gcd 'Phi_...' 'Phi_...'")
    a = CycloProduct.parse(values[0])
    b = CycloProduct.parse(values[1])
    g = a.gcd(b)
    text = f"{g} ; degree {g.degree()} ; trace {g.trace()}"
    payload = {"command": "cyclo", "operation": "gcd", "factors": str(g),
               "degree": g.degree(), "trace": g.trace()}
    _emit(payload, text, args.format)
    return EXIT_OK


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"expected an integer, got {text!r}")


_COMMANDS = {
    "analyze": _cmd_analyze,
    "constraints": _cmd_constraints,
    "arrangement": _cmd_arrangement,
    "cyclo": _cmd_cyclo,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (InputError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenericityError as exc:
        print(f"genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except LeNumbersError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
