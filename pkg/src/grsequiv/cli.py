"""Command-line front end.

Exit codes: 0 success / equal, 1 semantic negative (not equal, round-trip
mismatch), 2 invalid input or unsupported size.  Documents go to stdout (or
``-o``); conversion report lines (``gamma=...``, ``a=... lambda=...``) go to
stderr so that stdout stays a valid document.
"""

from __future__ import annotations

import argparse
import sys

from . import document
from .analysis import codes_equal, min_distance
from .codes import DEFAULT_ENUM_LIMIT, GrsCode
from .errors import DocumentError, GrsError
from .field import field_new
from .transform import (
    choose_gamma,
    egrs_to_grs,
    grs_to_egrs,
    normalization_params,
    shift_scale,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID = 0, 1, 2


def _int_csv(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, kind: str | None = None):
    code = document.loads(_read(path))
    if kind is not None and code.kind != kind:
        raise DocumentError(f"expected a {kind} document, got {code.kind}")
    return code


def _emit(code, out: str | None) -> None:
    text = document.dumps(code)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _report(line: str) -> None:
    print(line, file=sys.stderr)


def cmd_field(args) -> int:
    F = field_new(args.p, args.m, args.reduction)
    red = ",".join(map(str, F.reduction)) if F.m > 1 else "none"
    print(f"q={F.q} p={F.p} m={F.m} reduction={red}")
    return EXIT_OK


def cmd_validate(args) -> int:
    c = _load(args.file)
    print(f"VALID kind={c.kind} q={c.q} n={c.n} k={c.k} N={c.N}")
    return EXIT_OK


def cmd_encode(args) -> int:
    c = _load(args.file)
    print(",".join(map(str, c.encode(args.message))))
    return EXIT_OK


def cmd_genmat(args) -> int:
    c = _load(args.file)
    for row in c.generator_matrix():
        print(",".join(map(str, row)))
    return EXIT_OK


def cmd_normalize(args) -> int:
    c = _load(args.file, "grs")
    params = normalization_params(c)
    _report(f"a={params.a} lambda={params.lam}")
    _emit(shift_scale(c, params), args.output)
    return EXIT_OK


def cmd_to_egrs(args) -> int:
    c = _load(args.file, "grs")
    out = grs_to_egrs(c)
    params = normalization_params(c)
    _report(f"a={params.a} lambda={params.lam}")
    _emit(out, args.output)
    return EXIT_OK


def cmd_to_grs(args) -> int:
    c = _load(args.file, "egrs")
    g = choose_gamma(c, args.gamma)
    out = egrs_to_grs(c, g)
    _report(f"gamma={g.gamma}")
    _emit(out, args.output)
    return EXIT_OK


def cmd_equal(args) -> int:
    a, b = _load(args.file_a), _load(args.file_b)
    if codes_equal(a, b):
        print(f"EQUAL dim={a.k}")
        return EXIT_OK
    print("NOT-EQUAL")
    return EXIT_NEGATIVE


def cmd_mindist(args) -> int:
    c = _load(args.file)
    print(min_distance(c, args.limit).format())
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    c = _load(args.file)
    if isinstance(c, GrsCode):
        first = grs_to_egrs(c)
        second = egrs_to_grs(first, args.gamma)
    else:
        first = egrs_to_grs(c, args.gamma)
        second = grs_to_egrs(first)
    print(f"{first.kind} {document.dumps(first).rstrip()}")
    print(f"{second.kind} {document.dumps(second).rstrip()}")
    hops = [("hop 1", c, first), ("hop 2", first, second), ("closure", c, second)]
    for name, x, y in hops:
        if not codes_equal(x, y):
            print(f"ROUNDTRIP MISMATCH at {name}")
            return EXIT_NEGATIVE
    print("ROUNDTRIP OK")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grsequiv",
        description="GRS / extended GRS codes over GF(p^m): build, convert, compare.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="print q and the reduction polynomial")
    p.add_argument("p", type=int)
    p.add_argument("m", type=int, nargs="?", default=1)
    p.add_argument("--reduction", type=_int_csv, default=None,
                   help="coefficients c_0,...,c_m (little-endian, monic)")
    p.set_defaults(func=cmd_field)

    def with_file(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="code document, or - for stdin")
        p.set_defaults(func=func)
        return p

    with_file("validate", cmd_validate, "check a code document")
    p = with_file("encode", cmd_encode, "encode one message")
    p.add_argument("--message", type=_int_csv, required=True, help="f_0,...,f_{k-1}")
    with_file("genmat", cmd_genmat, "print the generator matrix")
    for name, func, help in [
        ("normalize", cmd_normalize, "move the last point to 0 and the last weight to 1"),
        ("to-egrs", cmd_to_egrs, "rewrite a GRS code as an extended code"),
        ("to-grs", cmd_to_grs, "rewrite an extended code as a GRS code"),
    ]:
        p = with_file(name, func, help)
        p.add_argument("-o", "--output", default=None)
        if name == "to-grs":
            p.add_argument("--gamma", type=int, default=None)

    p = sub.add_parser("equal", help="compare the subspaces of two codes")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_equal)

    p = with_file("mindist", cmd_mindist, "brute-force minimum distance")
    p.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT)

    p = with_file("roundtrip", cmd_roundtrip, "convert to the other family and back")
    p.add_argument("--gamma", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GrsError as exc:
        print(f"error: {exc.diagnostic()}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
