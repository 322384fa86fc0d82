"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .checks import CHECKS, run_checks
from .closed_forms import CONVOLUTION_BOUNDS, closed_nk, closed_total
from .counting import build_table, count_nk, count_total
from .enumeration import count_colored, enumerate_colored, enumerate_matrix
from .errors import CapExceededError, ColorCompError, DomainError, FamilyError
from .recurrence import build_triangle, extract_coeffs, verify_recurrence
from .sequences import KINDS, ColorFamily
from .series import coeff_of_power

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_FLAG = {"p": "--p", "q": "--q", "m": "--m", "k_rows": "--k-rows"}


class UsageError(ColorCompError):
    pass


def read_b_file(path: str | Path) -> list[int]:
    """Parse a custom color sequence: a JSON array, or whitespace-separated integers with ``#`` comments."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"--b-file: cannot read {path}: {exc.strerror}") from None
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--b-file: invalid JSON in {path}: {exc}") from None
        values = data
    else:
        values = []
        for line in text.splitlines():
            values.extend(line.split("#", 1)[0].split())
    out = []
    for v in values:
        try:
            iv = int(v)
        except (TypeError, ValueError):
            raise UsageError(f"--b-file: {v!r} is not an integer") from None
        if isinstance(v, (bool, float)) or iv < 0:
            raise UsageError(f"--b-file: values must be nonnegative integers, got {v!r}")
        out.append(iv)
    return out


def resolve_family(args: argparse.Namespace) -> ColorFamily:
    kind = args.family
    if kind == "custom":
        if args.b_file is None:
            raise UsageError("--family custom requires --b-file")
        values = read_b_file(args.b_file)
    elif args.b_file is not None:
        raise UsageError(f"--b-file is only valid with --family custom, not {kind!r}")
    else:
        values = None
    params = {name: getattr(args, name) for name in _FLAG}
    try:
        return ColorFamily.from_params(kind, values=values, **params)
    except FamilyError as exc:
        msg = str(exc)
        for name, flag in _FLAG.items():
            msg = msg.replace(f"parameter {name}", f"flag {flag}")
        raise UsageError(msg) from None


def _family_args(parser: argparse.ArgumentParser) -> None:
    g = parser.add_argument_group("family")
    g.add_argument("--family", required=True, choices=KINDS)
    g.add_argument("--p", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--k-rows", dest="k_rows", type=int)
    g.add_argument("--b-file", dest="b_file")


def _format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _compute(family: ColorFamily, n: int, k: int | None, oracle: str) -> int:
    if n < 0:
        raise DomainError(f"--n must be >= 0, got {n}")
    if k is not None and k < 0:
        raise DomainError(f"--k must be >= 0, got {k}")
    if oracle == "dp":
        return count_total(family, n) if k is None else count_nk(family, n, k)
    if oracle == "enum":
        return count_colored(family, n, k)
    if oracle == "series":
        if k is not None:
            return coeff_of_power(family, n, k)
        return 1 if n == 0 else sum(coeff_of_power(family, n, kk) for kk in range(1, n + 1))
    value = closed_total(family, n) if k is None else closed_nk(family, n, k)
    if value is None:
        where = "" if k is None else f" at n={n}, k={k}"
        raise UsageError(f"no closed form for {family}{where}")
    return value


def _emit_value(args, family: ColorFamily, value: int, oracle: str, k: int | None) -> str:
    if args.format == "json":
        return _dump({"family": family.to_json(), "n": args.n, "k": k, "oracle": oracle, "value": str(value)})
    if args.format == "csv":
        return _csv([["family", "n", "k", "oracle", "value"], [family.label, args.n, "" if k is None else k, oracle, value]])
    return str(value)


def cmd_count(args) -> int:
    family = resolve_family(args)
    k = getattr(args, "k", None)
    value = _compute(family, args.n, k, args.oracle)
    print(_emit_value(args, family, value, args.oracle, k))
    return EXIT_OK


def cmd_closed(args) -> int:
    family = resolve_family(args)
    value = closed_total(family, args.n) if args.k is None else closed_nk(family, args.n, args.k)
    if args.format == "json":
        print(_dump({"family": family.to_json(), "n": args.n, "k": args.k, "value": None if value is None else str(value)}))
    elif args.format == "csv":
        print(_csv([["family", "n", "k", "value"], [family.label, args.n, "" if args.k is None else args.k, "" if value is None else value]]))
    else:
        print("absent" if value is None else value)
    return EXIT_OK


def cmd_table(args) -> int:
    family = resolve_family(args)
    table = build_table(family, args.n_max)
    n_max = table.n_max
    if args.format == "json":
        print(_dump(table.to_json()))
        return EXIT_OK
    header = ["n"] + [f"k={k}" for k in range(1, n_max + 1)] + ["total"]
    rows = [[str(n)] + [str(table.cell(n, k)) if k <= n else "" for k in range(1, n_max + 1)] + [str(table.totals[n])] for n in range(1, n_max + 1)]
    if args.format == "csv":
        print(_csv([header] + rows))
        return EXIT_OK
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    print(f"# {family.label}: b_i = {family.formula}")
    for r in [header] + rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    family = resolve_family(args)
    if args.matrices:
        if family.kind != "matrix":
            raise UsageError("--matrices requires --family matrix")
        items = enumerate_matrix(family.k_rows, args.n)
    else:
        items = enumerate_colored(family, args.n, args.k)
    out = sys.stdout
    for i, item in enumerate(items):
        if args.limit is not None and i >= args.limit:
            break
        out.write(json.dumps(item.to_json(), separators=(", ", ": ")) + "\n")
    return EXIT_OK


def cmd_recurrence(args) -> int:
    if args.p < 1 or args.q < 0:
        raise UsageError(f"need --p >= 1 and --q >= 0, got p={args.p}, q={args.q}")
    triangle = build_triangle(args.p, args.q)
    spec = extract_coeffs(args.p, args.q, triangle)
    if args.show == "triangle":
        if args.format == "json":
            print(_dump(triangle.to_json()))
        elif args.format == "csv":
            print(_csv([["j"] + [f"i={i}" for i in range(args.q + 3)]] + [[j] + list(row) for j, row in enumerate(triangle.rows)]))
        else:
            for j, row in enumerate(triangle.rows):
                print(f"j={j}: " + " ".join(str(v) for v in row))
        return EXIT_OK
    if args.show == "coeffs":
        if args.format == "json":
            print(_dump(spec.to_json()))
        elif args.format == "csv":
            print(_csv([["i", "m_i"]] + [[i, m] for i, m in enumerate(spec.coeffs)]))
        else:
            print("[" + ", ".join(str(c) for c in spec.coeffs) + "]")
            print(f"order {spec.order}")
        return EXIT_OK
    report = verify_recurrence(ColorFamily.binom_general(args.p, args.q), spec, args.n_lo, args.n_hi)
    if args.format == "json":
        print(_dump(report.to_json()))
    elif args.format == "csv":
        print(_csv([["n", "lhs", "rhs", "ok"]] + [[n, lhs, rhs, lhs == rhs] for n, lhs, rhs in report.results]))
    else:
        for n, lhs, rhs in report.results:
            print(f"n={n} {'ok' if lhs == rhs else 'FAIL'}")
        status = "pass" if report.ok else "fail"
        print(f"{status}: holds from n={report.holds_from} through n={args.n_hi}")
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_verify(args) -> int:
    report = run_checks(args.only, n_max=args.n_max, bound=args.bound)
    if args.format == "json":
        print(_dump(report.to_json()))
    elif args.format == "csv":
        print(_csv([["check", "status", "checked", "failures"]] + [[c.name, c.status, c.checked, c.n_failures] for c in report.checks]))
    else:
        for c in report.checks:
            print(f"{c.status:<5}  {c.name:<16} {c.checked} checks, {c.n_failures} failures")
            for line in c.failures:
                print(f"       {line}")
            for note in c.notes:
                print(f"       note: {note}")
        print("OK" if report.ok else "FAILED")
    return EXIT_OK if report.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorcomp", description="Count and verify colored integer compositions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of colored compositions of n (with k parts if --k is given)")
    _family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--oracle", choices=("dp", "enum", "series", "closed"), default="dp")
    _format_arg(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("total", help="number of colored compositions of n with any number of parts")
    _family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", choices=("dp", "enum", "series", "closed"), default="dp")
    _format_arg(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="triangle of counts C(n, k) with row totals")
    _family_args(p)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    _format_arg(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list compositions as JSON lines")
    _family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--matrices", action="store_true", help="emit matrix compositions (family matrix only)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("closed", help="evaluate the closed formula, printing 'absent' when there is none")
    _family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    _format_arg(p)
    p.set_defaults(func=cmd_closed)

    p = sub.add_parser("recurrence", help="coefficient triangle and recurrence for b_i = C(i+p-1, q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--show", choices=("triangle", "coeffs", "verify"), default="coeffs")
    p.add_argument("--n-lo", dest="n_lo", type=int, default=2)
    p.add_argument("--n-hi", dest="n_hi", type=int, default=40)
    _format_arg(p)
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("verify", help="run the identity and oracle-agreement suites")
    p.add_argument("--only", action="append", choices=tuple(CHECKS), help="run only this check (repeatable)")
    p.add_argument("--n-max", dest="n_max", type=int, help="override the size bound of the selected checks")
    p.add_argument("--bound", choices=CONVOLUTION_BOUNDS, default="corrected")
    _format_arg(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"colorcomp: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, DomainError) as exc:
        print(f"colorcomp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
