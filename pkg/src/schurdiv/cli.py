"""Command-line surface.

A small input grammar (index vectors, rational lists, difference arguments,
Laurent JSON), subcommand dispatch, JSON and LaTeX emitters, and the
verification suite runner.  Exit codes: 0 success, 1 verification or
consistency failure, 2 usage or parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .alphabet import (
    Alphabet,
    DiffArgument,
    X,
    X_INV,
    complete_sym,
    diff_arg,
    root_poly,
    vandermonde_delta,
)
from .companion import (
    ColumnRange,
    RecurrentSeq,
    double_companion,
    giambelli_block,
    giambelli_general,
    houmu_ratio,
)
from .division import (
    euclid_remainder_multischur,
    euclid_remainders,
    remainder_laurent,
    remainder_x_pow,
)
from .errors import ConsistencyError, DomainError, ParseError
from .laurent import LaurentPoly
from .linalg import Matrix
from .rationals import parse_rational
from .schur import MultiSchurSpec, gschur, multi_schur

# ------------------------------------------------------------ input grammar


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def parse_index_vector(text: str) -> tuple[int, ...]:
    """Parse "[j1,j2,...,jn]" with optional signs and whitespace."""
    i = _skip_ws(text, 0)
    if i >= len(text) or text[i] != "[":
        raise ParseError("expected '['", offset=i)
    i = _skip_ws(text, i + 1)
    out: list[int] = []
    if i < len(text) and text[i] == "]":
        i += 1
    else:
        while True:
            i = _skip_ws(text, i)
            m = re.match(r"[+-]?\d+", text[i:])
            if not m:
                raise ParseError("expected an integer", offset=i)
            out.append(int(m.group()))
            i = _skip_ws(text, i + m.end())
            if i < len(text) and text[i] == ",":
                i += 1
                continue
            if i < len(text) and text[i] == "]":
                i += 1
                break
            raise ParseError("expected ',' or ']'", offset=i)
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("trailing characters after index vector", offset=i)
    return tuple(out)


def _parse_rationals(text: str) -> list[Fraction]:
    """Comma-separated rationals; duplicates allowed."""
    if text.strip() == "":
        return []
    out: list[Fraction] = []
    pos = 0
    for chunk in text.split(","):
        tok = chunk.strip()
        if not tok:
            raise ParseError("empty entry in rational list", offset=pos)
        off = pos + chunk.index(tok)
        out.append(parse_rational(tok, offset=off))
        pos += len(chunk) + 1
    return out


def parse_rational_list(text: str) -> Alphabet:
    """Comma-separated rationals with distinctness enforced."""
    values = _parse_rationals(text)
    seen: set[Fraction] = set()
    pos = 0
    for chunk, val in zip(text.split(","), values):
        if val in seen:
            raise ParseError(f"duplicate letter {chunk.strip()}", offset=pos)
        seen.add(val)
        pos += len(chunk) + 1
    return Alphabet(values)


_SIDE_TOKEN = re.compile(r"x\^-1|x|[+-]?\d+(?:\s*/\s*\d+)?")


def _parse_side(text: str, i: int) -> tuple[list, int]:
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != "(":
        raise ParseError("expected '('", offset=i)
    i = _skip_ws(text, i + 1)
    items: list = []
    if i < len(text) and text[i] == ")":
        return items, i + 1
    while True:
        i = _skip_ws(text, i)
        m = _SIDE_TOKEN.match(text[i:])
        if not m:
            raise ParseError("expected a rational, 'x', or 'x^-1'", offset=i)
        tok = m.group()
        if tok == "x":
            items.append(X)
        elif tok == "x^-1":
            items.append(X_INV)
        else:
            items.append(parse_rational(tok.replace(" ", ""), offset=i))
        i = _skip_ws(text, i + m.end())
        if i < len(text) and text[i] == ",":
            i += 1
            continue
        if i < len(text) and text[i] == ")":
            return items, i + 1
        raise ParseError("expected ',' or ')'", offset=i)


def parse_diff_argument(text: str) -> DiffArgument:
    """Parse "(A) - (B)"; the "- (B)" half may be omitted."""
    plus, i = _parse_side(text, 0)
    i = _skip_ws(text, i)
    minus: list = []
    if i < len(text):
        if text[i] != "-":
            raise ParseError("expected '-' between the two sides", offset=i)
        minus, i = _parse_side(text, i + 1)
        i = _skip_ws(text, i)
        if i != len(text):
            raise ParseError("trailing characters after difference", offset=i)
    return diff_arg(plus=plus, minus=minus)


def parse_columns(text: str) -> tuple[DiffArgument, ...]:
    """';'-separated difference arguments."""
    return tuple(parse_diff_argument(part) for part in text.split(";"))


def parse_laurent_json(text: str) -> LaurentPoly:
    """Object of degree-string -> rational-string, e.g. {"-1":"3/2"}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", offset=exc.pos) from None
    if not isinstance(obj, dict):
        raise ParseError("Laurent JSON must be an object of degree -> rational")
    table: dict[int, Fraction] = {}
    for k, v in obj.items():
        try:
            d = int(k)
        except ValueError:
            raise ParseError(f"bad degree key {k!r}") from None
        if not isinstance(v, str):
            raise ParseError(f"coefficient for degree {k} must be a string")
        table[d] = parse_rational(v)
    return LaurentPoly(table)


def parse_colrange(text: str) -> ColumnRange:
    m = re.fullmatch(r"\s*([+-]?\d+)\.\.([+-]?\d+)\s*", text)
    if not m:
        raise ParseError("expected a column range of the form kmin..kmax")
    kmin, kmax = int(m.group(1)), int(m.group(2))
    if kmin > kmax:
        raise ParseError(f"empty column range {kmin}..{kmax}")
    return ColumnRange(kmin, kmax)


# --------------------------------------------------------------- emitters


def emit_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_laurent(p: LaurentPoly) -> str:
    if p.is_zero:
        return "0"
    parts: list[tuple[str, str]] = []
    for d, c in reversed(list(p.items())):
        if d == 0:
            core = latex_rational(abs(c))
        else:
            power = "x" if d == 1 else f"x^{{{d}}}"
            core = power if abs(c) == 1 else f"{latex_rational(abs(c))}{power}"
        parts.append(("-" if c < 0 else "+", core))
    first_sign, first_core = parts[0]
    out = ("-" if first_sign == "-" else "") + first_core
    for sign, core in parts[1:]:
        out += f" {sign} {core}"
    return out


def latex_matrix(rows: list[list[str]], env: str) -> str:
    body = " \\\\ ".join(" & ".join(row) for row in rows)
    return f"\\begin{{{env}}} {body} \\end{{{env}}}"


def _latex_label(text: str) -> str:
    return text.replace("(A^∨)", "(A^{\\vee})")


def _matrix_json(m: Matrix) -> list[list[str]]:
    return [[str(e) for e in row] for row in m.to_lists()]


def _alphabet_json(A: Alphabet) -> list[str]:
    return [str(a) for a in A]


# --------------------------------------------------------------- handlers


def cmd_schur(args: argparse.Namespace) -> int:
    J = parse_index_vector(args.J)
    A = parse_rational_list(args.A)
    value = gschur(J, A)
    if args.latex:
        exps = [J[l] + l for l in range(len(A))]
        rows = [[latex_rational(a**e) for a in A] for e in exps]
        print(
            f"S_{{({','.join(map(str, J))})}}({','.join(_alphabet_json(A))})"
            f" = \\frac{{{latex_matrix(rows, 'vmatrix')}}}"
            f"{{{latex_rational(vandermonde_delta(A))}}}"
            f" = {latex_rational(value)}"
        )
    else:
        emit_json(
            {
                "command": "schur",
                "J": list(J),
                "A": _alphabet_json(A),
                "value": str(value),
            }
        )
    return 0


def cmd_multischur(args: argparse.Namespace) -> int:
    J = parse_index_vector(args.J)
    I = parse_index_vector(args.I) if args.I is not None else ()
    columns = parse_columns(args.cols)
    spec = MultiSchurSpec(J, columns, I)
    value = multi_schur(spec)
    if args.latex:
        n = len(J)
        rows = [
            [
                latex_laurent(complete_sym(spec.J[k] - spec.I[l] + k - l, columns[k]))
                for k in range(n)
            ]
            for l in range(n)
        ]
        print(f"{latex_matrix(rows, 'vmatrix')} = {latex_laurent(value)}")
    else:
        emit_json(
            {
                "command": "multischur",
                "J": list(J),
                "I": list(spec.I),
                "columns": [str(c) for c in columns],
                "value": value.to_json_obj(),
            }
        )
    return 0


def cmd_remainder(args: argparse.Namespace) -> int:
    A = parse_rational_list(args.A)
    if args.power is not None:
        rem = remainder_x_pow(args.power, A)
        source: dict = {"power": args.power}
    else:
        f = parse_laurent_json(args.laurent)
        rem = remainder_laurent(f, A)
        source = {"laurent": f.to_json_obj()}
    if args.latex:
        print(f"r(x) = {latex_laurent(rem)}")
    else:
        emit_json(
            {
                "command": "remainder",
                "A": _alphabet_json(A),
                "input": source,
                "remainder": rem.to_json_obj(),
            }
        )
    return 0


def cmd_euclid(args: argparse.Namespace) -> int:
    if args.m < 0:
        raise ParseError("--m must be nonnegative")
    A = parse_rational_list(args.A)
    B = parse_rational_list(args.B)
    n = len(A)
    dividend = complete_sym(args.m, diff_arg(plus=[X], minus=B))
    divisor = root_poly(A)
    trace = euclid_remainders(dividend, divisor)
    table = []
    if args.m >= n >= 1:
        for r in range(1, min(n, len(trace.remainders)) + 1):
            rem = trace.remainders[r - 1]
            formula = euclid_remainder_multischur(r, args.m, A, B)
            row: dict = {
                "r": r,
                "remainder": rem.to_json_obj(),
                "formula": formula.to_json_obj(),
            }
            if rem.is_zero:
                row["scalar"] = None
                row["proportional"] = formula.is_zero
            else:
                proportional = formula * rem.coeff(rem.degree()) == rem * formula.coeff(
                    formula.degree()
                )
                row["proportional"] = proportional
                row["scalar"] = (
                    str(formula.coeff(formula.degree()) / rem.coeff(rem.degree()))
                    if proportional and not formula.is_zero
                    else None
                )
            table.append(row)
    emit_json(
        {
            "command": "euclid",
            "m": args.m,
            "A": _alphabet_json(A),
            "B": _alphabet_json(B),
            "dividend": dividend.to_json_obj(),
            "divisor": divisor.to_json_obj(),
            "quotients": [q.to_json_obj() for q in trace.quotients],
            "remainders": [r.to_json_obj() for r in trace.remainders],
            "table": table,
        }
    )
    return 0


def cmd_companion(args: argparse.Namespace) -> int:
    A = parse_rational_list(args.A)
    crange = parse_colrange(args.cols)
    C = double_companion(A, crange)
    if args.latex:
        rows = [[latex_rational(e) for e in row] for row in C.to_lists()]
        print(
            f"\\mathcal{{C}}_{{[{crange.kmin}..{crange.kmax}]}}"
            f"({','.join(_alphabet_json(A))}) = {latex_matrix(rows, 'pmatrix')}"
        )
    else:
        emit_json(
            {
                "command": "companion",
                "A": _alphabet_json(A),
                "kmin": crange.kmin,
                "kmax": crange.kmax,
                "matrix": _matrix_json(C),
            }
        )
    return 0


def cmd_giambelli(args: argparse.Namespace) -> int:
    J = parse_index_vector(args.J)
    A = parse_rational_list(args.A)
    use_block = args.block or args.explain
    if use_block:
        blocks, value = giambelli_block(J, A)
        label_rows = [[lab.text for lab in row] for row in blocks.labels]
        if args.latex:
            rows = [[_latex_label(t) for t in row] for row in label_rows]
            print(
                f"S_{{({','.join(map(str, J))})}}({','.join(_alphabet_json(A))})"
                f" = {latex_matrix(rows, 'vmatrix')} = {latex_rational(value)}"
            )
            return 0
        out: dict = {
            "command": "giambelli",
            "route": "block",
            "J": list(J),
            "A": _alphabet_json(A),
            "value": str(value),
            "matrix": _matrix_json(blocks.assembled()),
            "labels": label_rows,
            "blocks": {
                "P": _matrix_json(blocks.P),
                "Q": _matrix_json(blocks.Q),
                "M": _matrix_json(blocks.M),
                "N": _matrix_json(blocks.N),
            },
        }
        if args.explain:
            out["hooks"] = {
                "negative": {
                    "alpha": list(blocks.neg_hooks.alpha),
                    "beta": list(blocks.neg_hooks.beta),
                },
                "positive": {
                    "alpha": list(blocks.pos_hooks.alpha),
                    "beta": list(blocks.pos_hooks.beta),
                },
            }
        emit_json(out)
        return 0
    matrix, value = giambelli_general(J, A)
    if args.latex:
        rows = [[latex_rational(e) for e in row] for row in matrix.to_lists()]
        print(
            f"S_{{({','.join(map(str, J))})}}({','.join(_alphabet_json(A))})"
            f" = {latex_matrix(rows, 'vmatrix')} = {latex_rational(value)}"
        )
    else:
        emit_json(
            {
                "command": "giambelli",
                "route": "minor",
                "J": list(J),
                "A": _alphabet_json(A),
                "value": str(value),
                "matrix": _matrix_json(matrix),
            }
        )
    return 0


def cmd_houmu(args: argparse.Namespace) -> int:
    A = parse_rational_list(args.A)
    J = parse_index_vector(args.J)
    windows = [_parse_rationals(s) for s in args.seq]
    seqs = [RecurrentSeq(tuple(w), args.m0, A) for w in windows]
    value = houmu_ratio(seqs, J)
    reference = gschur(J, A)
    agrees = value == reference
    emit_json(
        {
            "command": "houmu",
            "A": _alphabet_json(A),
            "J": list(J),
            "m0": args.m0,
            "sequences": [[str(v) for v in w] for w in windows],
            "value": str(value),
            "bialternant": str(reference),
            "agrees": agrees,
        }
    )
    return 0 if agrees else 1


def cmd_verify(args: argparse.Namespace) -> int:
    from .verify import run_verify

    if args.trials < 1:
        raise ParseError("--trials must be at least 1")
    names = [s for s in args.suites.split(",") if s] if args.suites else None
    report = run_verify(trials=args.trials, seed=args.seed, nmax=args.nmax, suites=names)
    emit_json(report.to_json_obj())
    print(f"wall time: {report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


# --------------------------------------------------------------- dispatch

LATEX_COMMANDS = {"schur", "multischur", "remainder", "companion", "giambelli"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="emit JSON (the default)")
    mode.add_argument("--latex", action="store_true", help="emit a LaTeX determinant display")
    common.add_argument("--seed", type=int, default=0, help="randomization seed")
    common.add_argument("--trials", type=int, default=200, help="trial count for verification")
    common.add_argument("--nmax", type=int, default=6, help="largest alphabet size drawn")

    parser = argparse.ArgumentParser(
        prog="schurdiv",
        description="Exact division remainders as Schur-function determinants.",
        epilog="Values that begin with '-' must be attached with '=', "
        "e.g. --cols=-2..3 or --A=-4,1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", parents=[common], help="bialternant Schur value for any index vector")
    p.add_argument("--J", required=True, help='index vector, e.g. "[-4,-3,-2,1,3,4]"')
    p.add_argument("--A", required=True, help='alphabet, e.g. "1,2,5/3"')
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("multischur", parents=[common], help="multi-alphabet Schur determinant")
    p.add_argument("--J", required=True, help="upper index vector")
    p.add_argument("--I", default=None, help="lower index vector (default all zeros)")
    p.add_argument(
        "--cols",
        required=True,
        help="';'-separated difference arguments, e.g. \"(1,2) - (x);(1,2)\"",
    )
    p.set_defaults(func=cmd_multischur)

    p = sub.add_parser("remainder", parents=[common], help="division remainder modulo R(x, A)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--power", type=int, help="remainder of x^K (K may be negative)")
    src.add_argument("--laurent", help='Laurent JSON, e.g. {"-1":"3/2"}')
    p.add_argument("--A", required=True, help="alphabet of division points")
    p.set_defaults(func=cmd_remainder)

    p = sub.add_parser("euclid", parents=[common], help="Euclidean remainder trace and closed forms")
    p.add_argument("--m", type=int, required=True, help="dividend degree")
    p.add_argument("--A", required=True, help="divisor roots")
    p.add_argument("--B", default="", help="dividend parameter alphabet (may be empty)")
    p.set_defaults(func=cmd_euclid)

    p = sub.add_parser("companion", parents=[common], help="remainder coordinates over a column window")
    p.add_argument("--A", required=True, help="alphabet of division points")
    p.add_argument("--cols", required=True, help='column window, e.g. "-2..3"')
    p.set_defaults(func=cmd_companion)

    p = sub.add_parser("giambelli", parents=[common], help="Schur value as a hook-block determinant")
    p.add_argument("--J", required=True, help="index vector")
    p.add_argument("--A", required=True, help="alphabet")
    p.add_argument("--block", action="store_true", help="use the two-alphabet block determinant")
    p.add_argument("--explain", action="store_true", help="list diagonal hooks and entry labels")
    p.set_defaults(func=cmd_giambelli)

    p = sub.add_parser("houmu", parents=[common], help="recurrent-sequence determinant ratio")
    p.add_argument("--A", required=True, help="shared root alphabet")
    p.add_argument("--J", required=True, help="index vector")
    p.add_argument(
        "--seq",
        action="append",
        required=True,
        help="one 2n-value window (repeat n times)",
    )
    p.add_argument("--m0", type=int, default=0, help="index of the first window value")
    p.set_defaults(func=cmd_houmu)

    p = sub.add_parser("verify", parents=[common], help="run the randomized verification suites")
    p.add_argument("--suites", default=None, help="comma-separated suite names (default all)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    try:
        if args.latex and args.command not in LATEX_COMMANDS:
            raise ParseError(f"--latex is not defined for '{args.command}'")
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ZeroDivisionError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
