"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 parse/schema error, 3 usage.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import builders
from .complex import CfkComplex, InvalidComplex, direct_sum, mirror, tensor, validate
from .complex import tau as compute_tau
from .invariants import nu_n, profile
from .io import SchemaError, dumps, parse, profile_to_json, profile_to_tsv

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _load(path: str) -> CfkComplex:
    if not Path(path).is_file():
        raise SchemaError(f"{path}: no such file")
    c = parse(path)
    report = validate(c)
    if not report.valid:
        raise InvalidComplex(report)
    return c


def _write(c: CfkComplex, out: str) -> None:
    report = validate(c)
    if not report.valid:
        raise InvalidComplex(report)
    text = dumps(c)
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cfknu", description="Concordance invariants nu_n from CFK^infty complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="validate a complex file")
    c.add_argument("file")

    c = sub.add_parser("tau", help="print tau")
    c.add_argument("file")

    c = sub.add_parser("nu", help="print nu_n for one n")
    c.add_argument("file")
    c.add_argument("--n", type=int, required=True)

    c = sub.add_parser("invariants", help="print the profile n -> nu_n with tau, nu^+, nu^+'")
    c.add_argument("file")
    c.add_argument("--n-min", type=int, default=-8)
    c.add_argument("--n-max", type=int, default=8)
    c.add_argument("--format", choices=["tsv", "json"], default="tsv")
    c.add_argument("--plateau", type=int, default=3)
    c.add_argument("--n-cap", type=int, default=64)

    b = sub.add_parser("build", help="write a model complex")
    kinds = b.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    k = kinds.add_parser("staircase")
    k.add_argument("--steps", type=_csv_ints, required=True)
    k = kinds.add_parser("torus")
    k.add_argument("--p", type=int, required=True)
    k.add_argument("--q", type=int, required=True)
    k = kinds.add_parser("thin")
    k.add_argument("--tau", type=int, required=True)
    k = kinds.add_parser("box")
    k.add_argument("--alexander", type=int, default=0)
    k.add_argument("--maslov", type=int, default=0)
    kinds.add_parser("unknot")
    for k in kinds.choices.values():
        k.add_argument("-o", "--output", required=True)

    c = sub.add_parser("mirror", help="write the mirror (dual) complex")
    c.add_argument("file")
    c.add_argument("-o", "--output", required=True)

    for name, text in [("tensor", "write the tensor product (connected sum)"), ("sum", "write the direct sum")]:
        c = sub.add_parser(name, help=text)
        c.add_argument("file1")
        c.add_argument("file2")
        c.add_argument("-o", "--output", required=True)
    return p


def _build(args) -> CfkComplex:
    if args.kind == "staircase":
        return builders.staircase(args.steps)
    if args.kind == "torus":
        return builders.torus(args.p, args.q)
    if args.kind == "thin":
        return builders.thin_model(args.tau)
    if args.kind == "box":
        return builders.box(args.alexander, args.maslov)
    return builders.unknot()


def run(args) -> None:
    cmd = args.command
    if cmd == "check":
        _load(args.file)
        print("valid")
    elif cmd == "tau":
        print(compute_tau(_load(args.file)))
    elif cmd == "nu":
        print(nu_n(_load(args.file), args.n).value)
    elif cmd == "invariants":
        if args.n_min > args.n_max:
            raise UsageError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
        if args.plateau < 1 or args.n_cap < 1:
            raise UsageError("--plateau and --n-cap must be positive")
        prof = profile(_load(args.file), args.n_min, args.n_max, args.plateau, args.n_cap)
        sys.stdout.write(profile_to_json(prof) if args.format == "json" else profile_to_tsv(prof))
    elif cmd == "build":
        try:
            c = _build(args)
        except ValueError as e:
            raise UsageError(str(e)) from None
        _write(c, args.output)
    elif cmd == "mirror":
        _write(mirror(_load(args.file)), args.output)
    elif cmd == "tensor":
        _write(tensor(_load(args.file1), _load(args.file2)), args.output)
    elif cmd == "sum":
        a, b = _load(args.file1), _load(args.file2)
        s = direct_sum(a, b)
        _write(CfkComplex(s.name, s.generators, s.differential), args.output)


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        run(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except SchemaError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidComplex as e:
        print("invalid complex:", file=sys.stderr)
        for kind, detail in e.report.violations:
            print(f"  {kind.value}: {detail}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
