"""Command-line driver.

Exit codes: 0 success, 1 parse error, 2 semantic or computation error,
3 when ``thick-check`` finds a violated identity.
"""

from __future__ import annotations

import argparse
import sys

from . import criteria, dual, io, reps
from .coalgebra import delta
from .errors import PathCoalgError
from .fields import Field

EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, EXIT_CHECK = 0, 1, 2, 3


def _field(args) -> Field:
    return Field.from_tag(args.field)


def _load(path: str) -> io.ShapeFile:
    try:
        return io.load(path)
    except OSError as exc:
        raise PathCoalgError(f"cannot read {path}: {exc.strerror}") from None


def cmd_analyze(args) -> int:
    sf = _load(args.file)
    xdata = None
    if args.xdata:
        if sf.xdata is None:
            raise io.SemanticError("--xdata", "file has no xdata lines")
        xdata = sf.xdata
    rep = criteria.report(sf.shape(), xdata)
    sys.stdout.write(io.dumps_report(rep) if args.format == "json" else rep.to_text())
    return EXIT_OK


def cmd_delta(args) -> int:
    sf = _load(args.file)
    shape = sf.shape()
    p = shape.quiver.parse_path(args.path)
    for q, r, c in delta(shape, p, _field(args)):
        print(f"{c} * {q} (x) {r}")
    return EXIT_OK


def cmd_convolve(args) -> int:
    sf = _load(args.file)
    shape, f = sf.shape(), _field(args)

    def operand(text):
        return dual.TruncatedDual(shape, args.trunc, io.parse_linear_combination(text, shape.quiver, f), f)

    lhs = operand(args.lhs)
    if args.rhs.strip() == "<invert>":
        result = dual.invert(lhs)
    else:
        result = dual.convolve(lhs, operand(args.rhs))
    print(f"# truncation N={result.degree}")
    for p, c in sorted(result.coeffs.items()):
        print(f"{c}*{p}")
    return EXIT_OK


def _rep_from_spec(spec: str, shape, side: str, f: Field) -> reps.Representation:
    parts = spec.split(":")
    if parts[0] == "simple" and len(parts) == 2:
        return reps.simple(shape, parts[1], side, f)
    if parts[0] == "inj" and len(parts) in (2, 3):
        depth = int(parts[2]) if len(parts) == 3 else None
        return reps.injective_trunc(shape, parts[1], side, depth, f)
    raise io.SemanticError(spec, "representation spec must be simple:<v> or inj:<v>[:<depth>]")


def cmd_ext1(args) -> int:
    sf = _load(args.file)
    shape, f = sf.instantiated_shape(), _field(args)
    m = _rep_from_spec(args.M, shape, args.side, f)
    n = _rep_from_spec(args.N, shape, args.side, f)
    res = reps.ext1(shape, m, n)
    print(f"ext1={res.dim} cocycles={len(res.cocycles)} (Z={res.cocycle_dim}, B={res.coboundary_rank})")
    return EXIT_OK


def cmd_thick_check(args) -> int:
    chk = reps.sequence_check_thick(args.n, _field(args))
    print(chk.summary())
    print(
        f"hom(T,E)={chk.hom_TE} hom(T,T^n)={chk.hom_T_Tn} socle(E)=S:{str(chk.socle_E_is_S).lower()} "
        f"euler(T,S)={chk.euler_TS} euler(T,E)={chk.euler_TE}"
    )
    return EXIT_OK if chk.ok else EXIT_CHECK


def cmd_dot(args) -> int:
    sys.stdout.write(io.to_dot(_load(args.file).shape()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pathcoalg", description="Path coalgebras, complete path algebras and comodules.")
    ap.add_argument("--field", default="q", help="'q' (rationals, default) or 'fp:<prime>'")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="path statistics and criteria report")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--text", dest="format", action="store_const", const="text")
    p.add_argument("--xdata", action="store_true", help="evaluate t41 with the file's xdata lines")
    p.set_defaults(func=cmd_analyze, format="text")

    p = sub.add_parser("delta", help="comultiplication of a path")
    p.add_argument("file")
    p.add_argument("--path", required=True)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("convolve", help="product in the truncated dual algebra")
    p.add_argument("file")
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True, help="linear combination, or '<invert>' for the inverse of lhs")
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("ext1", help="dimension of Ext^1 between built-in comodules")
    p.add_argument("file")
    p.add_argument("--M", required=True)
    p.add_argument("--N", required=True)
    p.add_argument("--side", choices=["right", "left"], default="right")
    p.set_defaults(func=cmd_ext1)

    p = sub.add_parser("thick-check", help="exact-sequence bookkeeping on the thick arrow quiver")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_thick_check)

    p = sub.add_parser("dot", help="Graphviz export of the quiver")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PathCoalgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
