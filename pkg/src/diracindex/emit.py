"""Deterministic machine-readable emitters: tagged JSON, CSV and LaTeX.

JSON schemas (bit-exact across platforms; fractions as reduced strings):

* polynomial     {"vars": n, "terms": [{"exp": [...], "coeff": "a/b"}]}
                 terms sorted graded-lex (degree ascending, then exponent
                 tuple descending lexicographically);
* virtual module {"terms": [{"gamma": ["a/b", ...], "coeff": n}]}
                 sorted by gamma lexicographically;
* index family   {"base": [...], "coeffs": [{"w": {"perm": [...],
                 "signs": [...]}, "a": n}]} with coefficients folded onto
                 canonical compact-coset representatives;
* limit report   {"d": n, "value": "a/b"|null, "expected": "a/b"|null,
                 "match": bool, "underflow": bool};
* suite report   {"suite": name, "cases": [{"id", "pass", "detail"}],
                 "all_pass": bool}.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from .asymptotics import LimitReport
from .dirac import IndexFamily, canonical_coeffs
from .errors import UnsupportedFormat
from .groups import Weight
from .kmodules import VirtualKModule
from .polynomials import LinearForm, MultiPoly
from .springer import SpringerRow, generator_forms


def frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def weight_strs(w: Weight) -> list[str]:
    return [frac_str(c) for c in w]


def poly_to_obj(poly: MultiPoly) -> dict:
    return {
        "vars": poly.arity,
        "terms": [
            {"exp": list(exp), "coeff": frac_str(c)}
            for exp, c in poly.sorted_terms()
        ],
    }


def poly_from_obj(obj: dict) -> MultiPoly:
    return MultiPoly(
        obj["vars"],
        {tuple(t["exp"]): Fraction(t["coeff"]) for t in obj["terms"]},
    )


def vkm_to_obj(module: VirtualKModule) -> dict:
    return {
        "terms": [
            {"gamma": weight_strs(g), "coeff": c}
            for g, c in module.sorted_terms()
        ]
    }


def family_to_obj(fam: IndexFamily) -> dict:
    folded = canonical_coeffs(fam)
    entries = sorted(
        ((w.perm, w.signs, a) for w, a in folded.items()),
    )
    return {
        "base": weight_strs(fam.base),
        "coeffs": [
            {"w": {"perm": list(p), "signs": list(s)}, "a": a}
            for p, s, a in entries
        ],
    }


def limit_report_to_obj(report: LimitReport) -> dict:
    return {
        "d": report.d,
        "value": None if report.value is None else frac_str(report.value),
        "expected": None if report.expected is None else frac_str(report.expected),
        "match": report.match,
        "underflow": report.underflow,
    }


def partition_str(partition) -> str:
    if partition is None:
        return "-"
    return "[" + ",".join(str(x) for x in partition) + "]"


def _merge_quadratic_factors(forms: list[LinearForm]) -> list[tuple[str, tuple]]:
    """Group (X_i - X_j) with (X_i + X_j) into (X_i^2 - X_j^2) for display."""
    singles: list[tuple[str, tuple]] = []
    diffs: set[tuple[int, int]] = set()
    sums: set[tuple[int, int]] = set()
    for form in forms:
        support = [(k, c) for k, c in enumerate(form.coeffs) if c != 0]
        if len(support) == 1:
            singles.append(("var", (support[0][0],)))
        else:
            (i, ci), (j, cj) = support
            if ci * cj < 0:
                diffs.add((i, j))
            else:
                sums.add((i, j))
    out: list[tuple[str, tuple]] = []
    for i, j in sorted(diffs):
        if (i, j) in sums:
            out.append(("sqdiff", (i, j)))
        else:
            out.append(("diff", (i, j)))
    for i, j in sorted(sums - diffs):
        out.append(("sum", (i, j)))
    out.extend(sorted(singles, key=lambda t: t[1]))
    return out


def generator_text(row: SpringerRow, latex: bool = False) -> str:
    from .groups import build_root_datum

    datum = build_root_datum(row.group, max_rank=max(8, row.group.rank))
    pieces = []
    for kind, data in _merge_quadratic_factors(generator_forms(datum)):
        if latex:
            fmt = {
                "var": lambda i: f"X_{{{i + 1}}}",
                "diff": lambda i, j: f"(X_{{{i + 1}}}-X_{{{j + 1}}})",
                "sum": lambda i, j: f"(X_{{{i + 1}}}+X_{{{j + 1}}})",
                "sqdiff": lambda i, j: f"(X_{{{i + 1}}}^2-X_{{{j + 1}}}^2)",
            }
        else:
            fmt = {
                "var": lambda i: f"X{i + 1}",
                "diff": lambda i, j: f"(X{i + 1}-X{j + 1})",
                "sum": lambda i, j: f"(X{i + 1}+X{j + 1})",
                "sqdiff": lambda i, j: f"(X{i + 1}^2-X{j + 1}^2)",
            }
        pieces.append(fmt[kind](*data))
    return "".join(pieces) if pieces else "1"


def springer_row_to_obj(row: SpringerRow) -> dict:
    from .springer import Bipartition

    label = row.label
    if isinstance(label, Bipartition):
        label_obj: Any = {"alpha": list(label.alpha), "beta": list(label.beta)}
    else:
        label_obj = list(label)
    return {
        "group": row.group.label(),
        "family": row.group.family.value,
        "params": [row.group.p, row.group.q],
        "generator": generator_text(row),
        "label": label_obj,
        "springer": row.is_springer,
        "partition": None if row.partition is None else list(row.partition),
        "dim": row.orbit_dim,
        "two_orbits": row.two_orbits,
    }


def springer_rows_to_csv(rows: list[SpringerRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["group", "generator", "springer", "partition", "dim"])
    for row in rows:
        writer.writerow(
            [
                row.group.label(),
                generator_text(row),
                "Yes" if row.is_springer else "No",
                partition_str(row.partition),
                row.orbit_dim if row.orbit_dim is not None else "-",
            ]
        )
    return buf.getvalue()


def springer_rows_to_latex(rows: list[SpringerRow]) -> str:
    lines = [
        r"\begin{tabular}{ccccc}",
        r"\hline",
        r"$G$ & generator & Springer? & partition & $\dim_{\mathbb C}$ \\",
        r"\hline",
    ]
    for row in rows:
        group = row.group.label().replace("*", r"^{*}")
        part = partition_str(row.partition)
        if part != "-":
            part = "$" + part.replace("[", r"\lbrack ").replace("]", r"\rbrack") + "$"
        dim = str(row.orbit_dim) if row.orbit_dim is not None else "-"
        lines.append(
            f"${group}$ & ${generator_text(row, latex=True)}$ & "
            f"{'Yes' if row.is_springer else 'No'} & {part} & {dim} \\\\"
        )
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


def dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False) + "\n"


def emit(obj: Any, fmt: str) -> str:
    """Serialize a recognized object to json, csv or latex text."""
    if fmt not in ("json", "csv", "latex"):
        raise UnsupportedFormat(f"unsupported format {fmt!r}")
    if isinstance(obj, MultiPoly):
        if fmt == "json":
            return dumps({"type": "polynomial", **poly_to_obj(obj)})
        raise UnsupportedFormat(f"polynomials only serialize to json, not {fmt}")
    if isinstance(obj, VirtualKModule):
        if fmt == "json":
            return dumps({"type": "virtual_module", **vkm_to_obj(obj)})
        raise UnsupportedFormat(f"virtual modules only serialize to json, not {fmt}")
    if isinstance(obj, IndexFamily):
        if fmt == "json":
            return dumps({"type": "index_family", **family_to_obj(obj)})
        raise UnsupportedFormat(f"index families only serialize to json, not {fmt}")
    if isinstance(obj, LimitReport):
        if fmt == "json":
            return dumps({"type": "limit_report", **limit_report_to_obj(obj)})
        raise UnsupportedFormat(f"limit reports only serialize to json, not {fmt}")
    if isinstance(obj, list) and all(isinstance(r, SpringerRow) for r in obj):
        if fmt == "json":
            return dumps(
                {"type": "springer_table", "rows": [springer_row_to_obj(r) for r in obj]}
            )
        if fmt == "csv":
            return springer_rows_to_csv(obj)
        return springer_rows_to_latex(obj)
    raise UnsupportedFormat(f"cannot emit object of type {type(obj).__name__}")
