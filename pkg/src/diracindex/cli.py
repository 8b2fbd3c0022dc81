"""Command-line front end.

Exit codes: 0 success / all cases pass, 1 verification failure,
2 usage error (argparse default).  Only long option names exist.
The environment variable DIRAC_MAX_RANK overrides the rank cap.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .dirac import discrete_series_family, index_polynomial
from .emit import (
    dumps,
    emit,
    poly_from_obj,
    poly_to_obj,
    springer_rows_to_csv,
    springer_rows_to_latex,
    springer_row_to_obj,
)
from .errors import DiracIndexError, RankCapExceeded
from .fixtures import su_n1_ds_family
from .groups import DEFAULT_RANK_CAP, Family, GroupId, build_root_datum
from .springer import springer_table
from .suites import SUITE_NAMES, run_suite
from .sun1 import char_poly_det, extract_det_factors, gcd_with_index

_GROUP_RE = re.compile(r"^(SU|SOe|Sp|SO\*)\(([-0-9R,]+)\)$")


def parse_group(text: str) -> GroupId:
    """Parse labels like SU(2,1), SOe(4,5), Sp(4,R), Sp(1,2), SO*(6)."""
    m = _GROUP_RE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse group {text!r}")
    head, args = m.groups()
    parts = args.split(",")
    try:
        if head == "SU":
            p, q = int(parts[0]), int(parts[1])
            return GroupId.su(p, q)
        if head == "SO*":
            (n2,) = (int(parts[0]),)
            if n2 % 2:
                raise ValueError("SO*(2n) needs an even argument")
            return GroupId.so_star(n2 // 2)
        if head == "SOe":
            a, b = int(parts[0]), int(parts[1])
            if a % 2:
                raise ValueError("first SOe argument must be even")
            if b % 2:
                return GroupId.so_even_odd(a // 2, (b - 1) // 2)
            return GroupId.so_even_even(a // 2, b // 2)
        if head == "Sp":
            if parts[-1] == "R":
                n2 = int(parts[0])
                if n2 % 2:
                    raise ValueError("Sp(2n,R) needs an even argument")
                return GroupId.sp_r(n2 // 2)
            p, q = int(parts[0]), int(parts[1])
            return GroupId.sp_pq(p, q)
    except (ValueError, IndexError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse group {text!r}: {exc}")
    raise argparse.ArgumentTypeError(f"cannot parse group {text!r}")


def parse_weight(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(part) for part in text.split(","))


def _rank_cap() -> int:
    value = os.environ.get("DIRAC_MAX_RANK")
    return int(value) if value else DEFAULT_RANK_CAP


def _cmd_springer_table(args) -> int:
    families = None
    if args.families != "all":
        try:
            families = {Family(f) for f in args.families.split(",")}
        except ValueError:
            tags = ", ".join(f.value for f in Family)
            raise DiracIndexError(f"unknown family tag; choose from: {tags}")
    rows = springer_table(max_param=args.max, families=families)
    if args.format == "json":
        sys.stdout.write(
            dumps({"type": "springer_table", "rows": [springer_row_to_obj(r) for r in rows]})
        )
    elif args.format == "csv":
        sys.stdout.write(springer_rows_to_csv(rows))
    else:
        sys.stdout.write(springer_rows_to_latex(rows))
    return 0


def _cmd_index_poly(args) -> int:
    cap = _rank_cap()
    group = args.group
    if group.rank > cap:
        raise RankCapExceeded(
            f"rank {group.rank} exceeds the cap {cap}; set DIRAC_MAX_RANK to raise it"
        )
    if args.chamber is not None:
        if group.family != Family.SU or group.q != 1:
            raise DiracIndexError("--chamber applies to SU(n,1) groups only")
        fam = su_n1_ds_family(group.p, args.chamber)
    else:
        if args.hc_param is None:
            raise DiracIndexError("provide either --chamber or --hc-param")
        datum = build_root_datum(group, max_rank=cap)
        fam = discrete_series_family(args.hc_param, datum)
    poly = index_polynomial(fam)
    sys.stdout.write(dumps({"type": "polynomial", **poly_to_obj(poly)}))
    return 0


def _cmd_char_poly(args) -> int:
    poly = char_poly_det(args.n, args.i)
    obj = {"type": "polynomial", **poly_to_obj(poly)}
    if args.factor:
        factors, cofactor = extract_det_factors(args.n, args.i)
        obj["factors"] = [
            {"form": [str(c) for c in form.coeffs], "mult": m} for form, m in factors
        ]
        obj["cofactor"] = poly_to_obj(cofactor)
    sys.stdout.write(dumps(obj))
    return 0


def _cmd_gcd(args) -> int:
    poly = gcd_with_index(args.n, args.i)
    sys.stdout.write(dumps({"type": "polynomial", **poly_to_obj(poly)}))
    return 0


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "springer" and args.max is not None:
        kwargs["max_param"] = args.max
    report = run_suite(args.suite, **kwargs)
    if args.format == "json":
        sys.stdout.write(dumps(report.to_obj()))
    else:
        for case in report.cases:
            status = "PASS" if case.passed else "FAIL"
            line = f"[{status}] {report.suite}/{case.id}"
            if case.detail:
                line += f"  ({case.detail})"
            print(line)
        print(f"{report.suite}: {'all passed' if report.all_pass else 'FAILURES'}")
    return 0 if report.all_pass else 1


def _cmd_emit(args) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    obj = json.loads(text)
    kind = obj.get("type")
    if kind == "polynomial":
        sys.stdout.write(emit(poly_from_obj(obj), args.format))
        return 0
    if kind in ("springer_table", "suite_report", "limit_report", "virtual_module",
                "index_family"):
        if args.format == "json":
            sys.stdout.write(dumps(obj))
            return 0
        if kind == "springer_table" and args.format == "csv":
            # re-emit from parsed rows without recomputation
            import csv as _csv
            import io as _io

            buf = _io.StringIO()
            writer = _csv.writer(buf, lineterminator="\n")
            writer.writerow(["group", "generator", "springer", "partition", "dim"])
            for row in obj["rows"]:
                part = row["partition"]
                writer.writerow(
                    [
                        row["group"],
                        row["generator"],
                        "Yes" if row["springer"] else "No",
                        "-" if part is None else "[" + ",".join(map(str, part)) + "]",
                        row["dim"] if row["dim"] is not None else "-",
                    ]
                )
            sys.stdout.write(buf.getvalue())
            return 0
    raise DiracIndexError(f"cannot emit {kind!r} as {args.format}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracindex",
        description="Exact Dirac index polynomials, character asymptotics, "
        "and the Springer classification table for classical equal-rank groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("springer-table", help="emit the classification table")
    p_table.add_argument("--families", default="all",
                         help="comma-separated family tags or 'all'")
    p_table.add_argument("--max", type=int, default=5, help="parameter bound")
    p_table.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p_table.set_defaults(func=_cmd_springer_table)

    p_ip = sub.add_parser("index-poly", help="index polynomial of a discrete-series family")
    p_ip.add_argument("--group", type=parse_group, required=True,
                      help="e.g. 'SU(2,1)', 'Sp(4,R)', 'SOe(4,5)', 'SO*(6)'")
    p_ip.add_argument("--chamber", type=int, default=None,
                      help="chamber index for SU(n,1)")
    p_ip.add_argument("--hc-param", type=parse_weight, default=None,
                      help="regular Harish-Chandra parameter, comma-separated rationals")
    p_ip.set_defaults(func=_cmd_index_poly)

    p_cp = sub.add_parser("char-poly", help="character determinant polynomial for SU(n,1)")
    p_cp.add_argument("--n", type=int, required=True)
    p_cp.add_argument("--i", type=int, required=True)
    p_cp.add_argument("--factor", action="store_true",
                      help="also list extracted linear factors")
    p_cp.set_defaults(func=_cmd_char_poly)

    p_gcd = sub.add_parser("gcd", help="common divisor of character and index polynomials")
    p_gcd.add_argument("--n", type=int, required=True)
    p_gcd.add_argument("--i", type=int, required=True)
    p_gcd.set_defaults(func=_cmd_gcd)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p_verify.add_argument("--max", type=int, default=None,
                          help="parameter bound (springer suite)")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_emit = sub.add_parser("emit", help="re-serialize a tagged JSON object")
    p_emit.add_argument("--input", default="-", help="file path or - for stdin")
    p_emit.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p_emit.set_defaults(func=_cmd_emit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiracIndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
