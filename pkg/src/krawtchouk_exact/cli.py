"""Command-line front end.

Subcommands ``coeffs``, ``table``, ``roots``, ``gram`` and ``verify`` print
a JSON document (schema version "1"), CSV with a header row, or plain
space-separated text.  Rationals are always written as exact "p/q"
strings; decimals appear only through ``roots --decimals``.

Exit codes: 0 success (all checks passed), 1 a verification failed,
2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import identities, orthogonality, roots
from .krawtchouk import METHODS, KrawtchoukParams, k_value_table, krawtchouk
from .report import VerificationReport, rational_str

SCHEMA_VERSION = "1"
SUITES = ("pascal", "value-rec", "poly-rec", "summation", "symmetry", "kernel", "orthogonality", "roots", "interlacing")


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    """Accepts "p/q", decimals, and powers of two written "2^-k"."""
    text = text.strip()
    try:
        if text.startswith("2^"):
            return Fraction(2) ** int(text[2:])
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def parse_s_set(text: str) -> list[int]:
    try:
        values = sorted({int(v) for v in text.split(",") if v.strip()})
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad --s-set {text!r}") from exc
    if not values or min(values) < 2:
        raise argparse.ArgumentTypeError("--s-set needs integers >= 2")
    return values


def document(command: str, parameters: dict, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "payload": payload,
    }


def _csv(header: list, rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _params(args) -> KrawtchoukParams:
    try:
        return KrawtchoukParams(args.n, args.s, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------- commands


def cmd_coeffs(args) -> tuple[dict, str, str, int]:
    params = _params(args)
    methods = METHODS if args.method == "all" else (args.method,)
    polys = {name: krawtchouk(params.n, params.s, params.m, name) for name in methods}
    coeffs = {name: [rational_str(c) for c in p.coeffs] for name, p in polys.items()}
    if args.method == "all":
        agree = len({p for p in polys.values()}) == 1
        payload = {"methods": coeffs, "agree": agree}
        header = ["power", *methods]
        rows = [[k, *(coeffs[name][k] for name in methods)] for k in range(params.m + 1)]
        plain = "\n".join(f"{name}: {' '.join(coeffs[name])}" for name in methods) + f"\nagree: {str(agree).lower()}\n"
    else:
        payload = {"method": args.method, "coefficients": coeffs[args.method]}
        header = ["power", "coefficient"]
        rows = [[k, c] for k, c in enumerate(coeffs[args.method])]
        plain = " ".join(coeffs[args.method]) + "\n"
    doc = document("coeffs", {"n": params.n, "s": params.s, "m": params.m, "method": args.method}, payload)
    return doc, _csv(header, rows), plain, 0


def cmd_table(args) -> tuple[dict, str, str, int]:
    if args.n < 0 or args.s < 2 or not 0 <= args.m_max <= args.n:
        raise UsageError(f"table needs s >= 2 and 0 <= m-max <= n, got n={args.n}, s={args.s}, m-max={args.m_max}")
    table = [[rational_str(v) for v in row] for row in k_value_table(args.n, args.s, args.m_max)]
    doc = document("table", {"n": args.n, "s": args.s, "m_max": args.m_max}, {"rows": table})
    csv_text = _csv(["m", *range(args.n + 1)], [[m, *row] for m, row in enumerate(table)])
    plain = "".join(" ".join(row) + "\n" for row in table)
    return doc, csv_text, plain, 0


def cmd_roots(args) -> tuple[dict, str, str, int]:
    params = _params(args)
    if params.m < 1:
        raise UsageError("roots needs m >= 1")
    if args.width <= 0:
        raise UsageError("--width must be positive")
    intervals = roots.isolate_roots(params, args.width)
    parameters = {"n": params.n, "s": params.s, "m": params.m, "width": rational_str(args.width)}
    if args.decimals is not None:
        parameters["decimals"] = args.decimals
    payload = {"count": len(intervals), "intervals": [iv.to_dict(args.decimals) for iv in intervals]}
    doc = document("roots", parameters, payload)
    header = ["index", "lo", "hi", "exact"] + (["decimal"] if args.decimals is not None else [])
    rows = []
    lines = []
    for idx, iv in enumerate(intervals):
        d = iv.to_dict(args.decimals)
        rows.append([idx, d["lo"], d["hi"], str(iv.exact).lower()] + ([d["decimal"]] if "decimal" in d else []))
        lines.append(str(iv) + (f"  ~ {d['decimal']}" if "decimal" in d else ""))
    return doc, _csv(header, rows), "\n".join(lines) + "\n", 0


def cmd_gram(args) -> tuple[dict, str, str, int]:
    if args.n < 0 or args.s < 2:
        raise UsageError(f"gram needs n >= 0 and s >= 2, got n={args.n}, s={args.s}")
    g = orthogonality.gram_matrix(args.n, args.s)
    diagonal = all(v == 0 for k, row in enumerate(g) for l, v in enumerate(row) if k != l)
    matrix = [[rational_str(v) for v in row] for row in g]
    doc = document("gram", {"n": args.n, "s": args.s}, {"matrix": matrix, "diagonal": diagonal})
    csv_text = _csv(["k", *range(args.n + 1)], [[k, *row] for k, row in enumerate(matrix)])
    plain = "".join(" ".join(row) + "\n" for row in matrix) + f"diagonal: {str(diagonal).lower()}\n"
    return doc, csv_text, plain, 0


def iter_suite(suite: str, n_max: int, s_set: list[int], seed: int, width: Fraction, extended: bool) -> Iterator[Callable[[], VerificationReport]]:
    """Thunks for every (suite, parameter point), in lexicographic parameter order."""
    ns = range(1, n_max + 1)
    if suite == "pascal":
        yield lambda: identities.check_pascal_basis(max(20, n_max))
    elif suite in ("value-rec", "poly-rec", "kernel"):
        fn = {
            "value-rec": identities.check_value_recurrence,
            "poly-rec": identities.check_poly_recurrence,
            "kernel": identities.check_bivariate_kernel,
        }[suite]
        for n in ns:
            for s in s_set:
                yield lambda n=n, s=s: fn(n, s)
    elif suite == "summation":
        for n in ns:
            for s in s_set:
                for m in range(1, (n + 1 if extended else n)):
                    if n >= 2:
                        yield lambda n=n, s=s, m=m: identities.check_summation(n, s, m, extended)
    elif suite == "symmetry":
        for n in ns:
            for m in range(n + 1):
                yield lambda n=n, m=m: identities.check_symmetry_s2(n, m)
            for m in range(1, n + 1):
                yield lambda n=n, m=m: roots.check_root_symmetry_s2(n, m, width)
    elif suite == "orthogonality":
        for n in ns:
            for s in s_set:
                yield lambda n=n, s=s: orthogonality.check_gram(n, s)
                for m in range(1, n + 1):
                    yield lambda n=n, s=s, m=m: orthogonality.check_low_degree_orthogonality(n, s, m, seed, 50)
    elif suite == "roots":
        for n in ns:
            for s in s_set:
                for m in range(1, n + 1):
                    yield lambda n=n, s=s, m=m: roots.check_root_isolation(n, s, m, width)
    elif suite == "interlacing":
        for n in ns:
            for s in s_set:
                for m in range(1, n):
                    yield lambda n=n, s=s, m=m: roots.check_interlacing(n, s, m, width)
    else:
        raise UsageError(f"unknown suite {suite!r}")


def run_verification(suite: str, n_max: int, s_set: list[int], seed: int = 0, width=roots.DEFAULT_WIDTH, extended: bool = False) -> list[VerificationReport]:
    suites = SUITES if suite == "all" else (suite,)
    reports = []
    for name in suites:
        for thunk in iter_suite(name, n_max, s_set, seed, Fraction(width), extended):
            reports.append(thunk())
    return reports


def cmd_verify(args) -> tuple[dict, str, str, int]:
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if args.width <= 0:
        raise UsageError("--width must be positive")
    reports = run_verification(args.suite, args.n_max, args.s_set, args.seed, args.width, args.extended)
    failed = [r for r in reports if not r.passed]
    payload = {
        "summary": {"total": len(reports), "failed": len(failed), "passed": not failed},
        "reports": [r.to_dict() for r in reports],
    }
    parameters = {
        "suite": args.suite,
        "n_max": args.n_max,
        "s_set": args.s_set,
        "seed": args.seed,
        "width": rational_str(args.width),
        "extended": args.extended,
    }
    doc = document("verify", parameters, payload)
    rows = []
    lines = []
    for r in reports:
        d = r.to_dict()
        point = " ".join(f"{k}={v}" for k, v in d["parameters"].items())
        witness = "" if d["witness"] is None else json.dumps(d["witness"], sort_keys=True)
        rows.append([d["identity"], point, str(r.passed).lower(), witness])
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {d['identity']} {point}" + (f" witness={witness}" if witness else ""))
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} passed")
    csv_text = _csv(["identity", "parameters", "passed", "witness"], rows)
    return doc, csv_text, "\n".join(lines) + "\n", 1 if failed else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="krawtchouk", description="Exact Krawtchouk polynomial toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, m=False):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        if m:
            p.add_argument("--m", type=int, required=True)
        p.add_argument("--format", choices=("json", "csv", "plain"), default="json")

    p = sub.add_parser("coeffs", help="coefficients of K_{m,n,s}, constant term first")
    common(p, m=True)
    p.add_argument("--method", choices=(*METHODS, "all"), default="definition")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("table", help="values K_m(i), m = 0..m-max, i = 0..n")
    common(p)
    p.add_argument("--m-max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("roots", help="certified isolating intervals for the roots of K_{m,n,s}")
    common(p, m=True)
    p.add_argument("--width", type=parse_rational, default=roots.DEFAULT_WIDTH)
    p.add_argument("--decimals", type=int, default=None, help="add a decimal rendering (display only)")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("gram", help="Gram matrix of K_0..K_n under the weighted inner product")
    common(p)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("verify", help="run identity and certificate suites")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--s-set", type=parse_s_set, default=[2, 3, 5])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--width", type=parse_rational, default=roots.DEFAULT_WIDTH)
    p.add_argument("--extended", action="store_true", help="also check the summation identity at m = n")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def render(doc: dict, csv_text: str, plain: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    return csv_text if fmt == "csv" else plain


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        doc, csv_text, plain, code = args.func(args)
    except UsageError as exc:
        print(f"krawtchouk {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(doc, csv_text, plain, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
