"""Command-line front end.

All exact quantities travel as "num/den" strings so no float ever touches
an exact code path; floats appear only in the L-series subcommand and the
complex embeddings, and are always printed with 17 significant digits.
Identical invocations produce byte-identical output.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 violated
mathematical precondition (the error class name is printed to stderr).
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import checks
from .characters import (
    enumerate_characters,
    load_character_file,
    principal_character,
    quadratic_character,
)
from .cyclotomic import embed_complex
from .errors import MathError
from .eulerian import descent_oracle, eulerian_recurrence
from .fermionic import padic_truncation
from .lfunction import LEvaluation, LParams, l_eval
from .rationals import format_rational, parse_rational
from .twisted import TwistedConfig, twisted_values


def _dumps(doc) -> str:
    """Deterministic JSON: insertion order, floats at 17 significant digits."""
    if doc is None:
        return "null"
    if isinstance(doc, bool):
        return "true" if doc else "false"
    if isinstance(doc, int):
        return str(doc)
    if isinstance(doc, float):
        return format(doc, ".17g")
    if isinstance(doc, str):
        return json.dumps(doc)
    if isinstance(doc, (list, tuple)):
        return "[" + ",".join(_dumps(v) for v in doc) + "]"
    if isinstance(doc, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{_dumps(v)}" for k, v in doc.items()) + "}"
    raise TypeError(f"cannot serialize {type(doc).__name__}")


def _parse_index_list(text: str) -> list[int]:
    """Index lists: "3", "0,2,4", or "0..5" (inclusive)."""
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",")]


def _resolve_character(spec: str, modulus: int):
    if spec == "principal":
        return principal_character(modulus)
    if spec == "quadratic":
        return quadratic_character(modulus)
    if spec.startswith("index:"):
        index = int(spec.split(":", 1)[1])
        chars = enumerate_characters(modulus)
        if not 0 <= index < len(chars):
            raise ValueError(f"character index {index} outside 0..{len(chars) - 1}")
        return chars[index]
    if spec.startswith("file:"):
        char = load_character_file(spec.split(":", 1)[1])
        if char.modulus != modulus:
            raise ValueError(
                f"character file has modulus {char.modulus}, flags say {modulus}"
            )
        return char
    raise ValueError(f"unknown character spec {spec!r}")


def _validate_zeta(order: int, exponent: int) -> None:
    if order < 1 or order % 2 == 0:
        raise ValueError("zeta order must be odd and positive")
    if math.gcd(exponent, order) != 1:
        raise ValueError(f"zeta exponent {exponent} is not coprime to order {order}")


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_classic(args) -> int:
    poly = eulerian_recurrence(args.n)
    doc = {"n": args.n, "coeffs": [format_rational(c) for c in poly.coeffs]}
    status = 0
    if args.check_oracle:
        match = descent_oracle(args.n) == poly
        doc["oracle_match"] = match
        if not match:
            status = 1
    _emit(args, _dumps(doc) + "\n")
    return status


def _cmd_twisted(args) -> int:
    q = parse_rational(args.q)
    _validate_zeta(args.zeta_order, args.zeta_k)
    char = _resolve_character(args.char, args.d)
    cfg = TwistedConfig.build(char, args.zeta_order, args.zeta_k % args.zeta_order, q)
    indices = _parse_index_list(args.n)
    values = twisted_values(cfg, max(indices))
    rows = []
    for n in indices:
        val = values[n].value
        emb = embed_complex(val, 1)
        rows.append({"n": n, "cyclotomic": val.to_json(), "complex": [emb.real, emb.imag]})
    doc = {
        "params": {
            "q": format_rational(q),
            "d": args.d,
            "char": args.char,
            "zeta_order": args.zeta_order,
            "zeta_k": args.zeta_k % args.zeta_order,
            "ambient_order": cfg.field.order,
        },
        "values": rows,
    }
    if args.format == "json":
        _emit(args, _dumps(doc) + "\n")
    else:
        lines = ["n,re,im,cyclotomic_order,cyclotomic_coeffs"]
        for row in rows:
            coeffs = ";".join(row["cyclotomic"]["coeffs"])
            lines.append(
                f"{row['n']},{format(row['complex'][0], '.17g')},"
                f"{format(row['complex'][1], '.17g')},{row['cyclotomic']['order']},{coeffs}"
            )
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_integral(args) -> int:
    q = parse_rational(args.q)
    report = padic_truncation(args.n, q, args.p, args.levels)
    if args.format == "json":
        doc = {
            "n": args.n,
            "q": format_rational(q),
            "p": args.p,
            "exact": format_rational(report.exact),
            "levels": [
                {
                    "N": lv.level,
                    "partial": format_rational(lv.partial),
                    "valuation": "inf" if lv.valuation == math.inf else lv.valuation,
                }
                for lv in report.levels
            ],
        }
        _emit(args, _dumps(doc) + "\n")
    else:
        _emit(args, report.to_csv())
    return 0


def _cmd_lfun(args) -> int:
    q = parse_rational(args.q)
    _validate_zeta(args.zeta_order, args.zeta_k)
    char = _resolve_character(args.char, args.d)
    cfg = TwistedConfig.build(char, args.zeta_order, args.zeta_k % args.zeta_order, q)
    parts = args.s.split(",")
    s = complex(float(parts[0]), float(parts[1]) if len(parts) > 1 else 0.0)
    result: LEvaluation = l_eval(
        LParams(s=s, cfg=cfg, tol=args.tol, max_terms=args.max_terms)
    )
    doc = {
        "s": [s.real, s.imag],
        "value": [result.value.real, result.value.imag],
        "terms": result.terms_used,
        "tail_bound": result.tail_bound,
    }
    _emit(args, _dumps(doc) + "\n")
    return 0


def _cmd_chars(args) -> int:
    chars = enumerate_characters(args.d)
    doc = {"modulus": args.d, "characters": [c.to_json() for c in chars]}
    _emit(args, _dumps(doc) + "\n")
    return 0


def _cmd_check(args) -> int:
    if args.grid == "default":
        grid = checks.default_grid()
    elif args.grid.startswith("file:"):
        with open(args.grid.split(":", 1)[1], "r", encoding="utf-8") as fh:
            grid = checks.grid_from_json(json.load(fh))
    else:
        raise ValueError(f"unknown grid spec {args.grid!r}")
    try:
        report = checks.run_relation(args.relation, grid)
    except KeyError:
        print(f"error: unknown relation {args.relation!r}", file=sys.stderr)
        return 2
    _emit(args, _dumps(report.to_json()) + "\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulertwist",
        description="Exact twisted Eulerian polynomials, alternating q-integrals, "
        "and their L-series, with relation checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classic", help="classical Eulerian polynomial coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check-oracle", action="store_true")
    p.add_argument("--output")
    p.set_defaults(handler=_cmd_classic)

    p = sub.add_parser("twisted", help="twisted Eulerian values on a parameter point")
    p.add_argument("--q", required=True, help='rational, e.g. "2" or "5/2"')
    p.add_argument("--d", type=int, required=True, help="character modulus (odd)")
    p.add_argument("--char", default="principal", help="principal|quadratic|index:I|file:PATH")
    p.add_argument("--zeta-order", type=int, default=1)
    p.add_argument("--zeta-k", type=int, default=1)
    p.add_argument("--n", required=True, help='index list: "3", "0,2", or "0..5"')
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output")
    p.set_defaults(handler=_cmd_twisted)

    p = sub.add_parser("integral", help="alternating Riemann-sum truncation report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--levels", type=int, default=5)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(handler=_cmd_integral)

    p = sub.add_parser("lfun", help="L-series value at a complex point")
    p.add_argument("--q", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--char", default="principal")
    p.add_argument("--zeta-order", type=int, default=1)
    p.add_argument("--zeta-k", type=int, default=1)
    p.add_argument("--s", required=True, help='complex point "RE" or "RE,IM"')
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-terms", type=int, default=200000)
    p.add_argument("--output")
    p.set_defaults(handler=_cmd_lfun)

    p = sub.add_parser("chars", help="enumerate all characters of a modulus")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(handler=_cmd_chars)

    p = sub.add_parser("check", help="run one relation check over a grid")
    p.add_argument("--relation", required=True)
    p.add_argument("--grid", default="default", help="default|file:PATH")
    p.add_argument("--output")
    p.set_defaults(handler=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (MathError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
