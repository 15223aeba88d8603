"""Command-line interface.

Subcommands: ``chi2``, ``code``, ``corr``, ``model``, ``fix-ties``.
Input is CSV, either one record per line (``--format records``, header
row + two category columns) or a contingency table (``--format
contingency``, first row = column labels with a blank first cell, first
column = row labels).

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical error.
Warnings go to stderr and never change the exit code.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import warnings

from .coding import TIE_BREAK_POLICY, NominalCoder, break_ties, enumerate_assignments, identity_assignment, summarize_classes
from .contingency import ContingencyTable, chi_square_test, crosstab, expected_frequencies
from .correlation import sweep_correlation
from .exceptions import DataError, NumericalError
from .regression import invariance_experiment

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this CLI reserves 2 for data
    errors and uses 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# input loading

def load_records(path: str) -> list[tuple[str, str]]:
    """Read record-pair CSV: a header line, then one (v1, v2) pair per line."""
    pairs = []
    seen_header = False
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row:
                continue
            if len(row) != 2:
                raise DataError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            if not seen_header:
                seen_header = True  # first non-empty line is the header
                continue
            a, b = row[0].strip(), row[1].strip()
            if not a or not b:
                raise DataError(f"{path}:{lineno}: empty category label")
            pairs.append((a, b))
    if not pairs:
        raise DataError(f"{path}: no records after the header row")
    return pairs


def load_contingency(path: str) -> ContingencyTable:
    """Read contingency CSV: column labels in the first row (first cell
    blank), one labelled row of integer counts per line."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [(lineno, row) for lineno, row in enumerate(csv.reader(fh), start=1) if row]
    if not rows:
        raise DataError(f"{path}: empty file")
    header_line, header = rows[0]
    if len(header) < 2:
        raise DataError(f"{path}:{header_line}: expected column labels after the first cell")
    col_labels = [c.strip() for c in header[1:]]
    row_labels = []
    counts = []
    for lineno, row in rows[1:]:
        if len(row) != len(header):
            raise DataError(
                f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}"
            )
        row_labels.append(row[0].strip())
        values = []
        for j, cell in enumerate(row[1:], start=2):
            try:
                values.append(int(cell))
            except ValueError:
                raise DataError(
                    f"{path}:{lineno}: field {j} is not an integer: {cell!r}"
                ) from None
        counts.append(values)
    if not counts:
        raise DataError(f"{path}: no count rows")
    return ContingencyTable(tuple(row_labels), tuple(col_labels), counts)


def load_input(args) -> tuple[list[tuple[str, str]], ContingencyTable]:
    if args.format == "records":
        records = load_records(args.input)
        return records, crosstab(records)
    table = load_contingency(args.input)
    return table.to_pairs(), table


# ---------------------------------------------------------------------------
# formatting

def fmt_real(value: float, decimals: int) -> str:
    text = f"{value:.{decimals}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text


def fmt_complex(z: complex, decimals: int) -> str:
    z = complex(z)
    re = fmt_real(z.real, decimals)
    im = fmt_real(abs(z.imag), decimals)
    if im == "0":
        return re
    sign = "-" if z.imag < 0 else "+"
    return f"{re}{sign}{im}i"


def pair(z: complex) -> list[float]:
    """JSON encoding of a complex number: [real, imaginary]."""
    z = complex(z)
    return [z.real, z.imag]


def fmt_assignment(assignment) -> str:
    if len(assignment) == 0:
        return "(none)"
    return ",".join(f"{label}->{j}" for label, j in assignment.phases)


def _aligned(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)


def _emit(args, payload: dict, text: str, csv_rows: list[list[str]] | None = None) -> None:
    if args.out == "json":
        print(json.dumps(payload, indent=2))
    elif args.out == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerows(csv_rows or [])
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_chi2(args) -> None:
    _, table = load_input(args)
    expected = expected_frequencies(table)
    result = chi_square_test(table)
    reject = result.rejects(args.alpha)
    d = args.decimals

    payload = {
        "observed": {
            "row_labels": list(table.row_labels),
            "col_labels": list(table.col_labels),
            "counts": table.counts.tolist(),
        },
        "expected": expected.tolist(),
        "statistic": result.statistic,
        "df": result.df,
        "p_value": result.p_value,
        "v_cramer_squared": result.v_cramer_squared,
        "alpha": args.alpha,
        "reject_null": reject,
    }

    obs_rows = [[""] + list(table.col_labels) + ["total"]]
    for i, label in enumerate(table.row_labels):
        obs_rows.append(
            [label] + [str(int(c)) for c in table.counts[i]] + [str(int(table.row_totals[i]))]
        )
    obs_rows.append(["total"] + [str(int(c)) for c in table.col_totals] + [str(table.total)])
    exp_rows = [[""] + list(table.col_labels)]
    for i, label in enumerate(table.row_labels):
        exp_rows.append([label] + [fmt_real(v, d) for v in expected[i]])

    text = "\n".join(
        [
            "observed frequencies",
            _aligned(obs_rows),
            "",
            "expected frequencies",
            _aligned(exp_rows),
            "",
            f"chi2 = {fmt_real(result.statistic, d)}",
            f"df = {result.df}",
            f"p_value = {fmt_real(result.p_value, max(d, 4))}",
            f"v_cramer_squared = {fmt_real(result.v_cramer_squared, d)}",
            f"reject independence at alpha={args.alpha:g}: "
            + ("yes" if reject else "no"),
        ]
    )
    csv_rows = [
        ["metric", "value"],
        ["statistic", fmt_real(result.statistic, d)],
        ["df", str(result.df)],
        ["p_value", fmt_real(result.p_value, max(d, 4))],
        ["v_cramer_squared", fmt_real(result.v_cramer_squared, d)],
        ["alpha", f"{args.alpha:g}"],
        ["reject_null", "yes" if reject else "no"],
    ]
    _emit(args, payload, text, csv_rows)


def cmd_code(args) -> None:
    records, _ = load_input(args)
    v1 = [r[0] for r in records]
    v2 = [r[1] for r in records]

    v1_summaries = summarize_classes(v1)
    if args.all_permutations:
        assignments = enumerate_assignments(v1_summaries)
    else:
        assignments = [identity_assignment(v1_summaries)]

    columns = []
    for k, assignment in enumerate(assignments, start=1):
        name = "v1" if len(assignments) == 1 else f"v1_{k}"
        values = NominalCoder(coding=args.coding, assignment=assignment).fit_transform(v1)
        columns.append((name, assignment, values))
    v2_values = NominalCoder(coding=args.coding).fit_transform(v2)
    columns.append(("v2", identity_assignment(summarize_classes(v2)), v2_values))

    payload = {
        "coding": args.coding,
        "columns": [
            {"name": name, "assignment": assignment.as_dict(), "values": [pair(z) for z in values]}
            for name, assignment, values in columns
        ],
    }
    header = [name for name, _, _ in columns]
    body = [
        [fmt_complex(col[2][i], args.decimals) for col in columns]
        for i in range(len(records))
    ]
    text = _aligned([header] + body)
    _emit(args, payload, text, [header] + body)


def cmd_corr(args) -> None:
    records, _ = load_input(args)
    sweep = sweep_correlation(
        [r[0] for r in records], [r[1] for r in records], coding=args.coding
    )
    d = args.decimals

    payload = {
        "coding": args.coding,
        "count": len(sweep),
        "sweep": [
            {
                "assignment": assignment.as_dict(),
                "value": pair(value),
                "modulus": float(abs(value)),
            }
            for assignment, value in zip(sweep.assignments, sweep.coefficients)
        ],
        "center": pair(sweep.center),
    }

    rows = [["#", "assignment", "R", "|R|"]]
    for k, (assignment, value) in enumerate(
        zip(sweep.assignments, sweep.coefficients), start=1
    ):
        rows.append(
            [str(k), fmt_assignment(assignment), fmt_complex(value, d), fmt_real(abs(value), d)]
        )
    text = "\n".join(
        [
            f"phase assignments: {len(sweep)}",
            _aligned(rows),
            f"center = {fmt_complex(sweep.center, d)}",
        ]
    )
    csv_rows = [["assignment", "re", "im", "modulus"]] + [
        [
            fmt_assignment(a),
            fmt_real(v.real, d),
            fmt_real(v.imag, d),
            fmt_real(abs(v), d),
        ]
        for a, v in zip(sweep.assignments, sweep.coefficients)
    ]
    _emit(args, payload, text, csv_rows)

    if args.emit_plot:
        with open(args.emit_plot, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["assignment", "re", "im"])
            for k, value in enumerate(sweep.coefficients, start=1):
                writer.writerow([k, repr(float(value.real)), repr(float(value.imag))])
            writer.writerow(
                ["center", repr(float(sweep.center.real)), repr(float(sweep.center.imag))]
            )


def cmd_model(args) -> None:
    records, _ = load_input(args)
    report = invariance_experiment(
        [r[0] for r in records],
        [r[1] for r in records],
        degree=args.degree,
        coding=args.coding,
    )
    d = args.decimals

    payload = {
        "coding": args.coding,
        "degree": report.degree,
        "tolerance": report.tolerance,
        "entries": [
            {
                "assignment": assignment.as_dict(),
                "coefficients": [pair(c) for c in model.coef_],
                "q": model.q_,
                "model_correlation": pair(corr),
            }
            for assignment, model, corr in zip(
                report.assignments, report.models, report.correlations
            )
        ],
        "spread": report.spread,
        "invariant": report.invariant,
    }
    if report.invariant:
        payload["common_value"] = pair(report.correlations[0])

    lines = [f"degree = {report.degree}"]
    for k, (assignment, model, corr) in enumerate(
        zip(report.assignments, report.models, report.correlations), start=1
    ):
        coefs = ", ".join(fmt_complex(c, d) for c in model.coef_)
        lines.append(f"{k}  {fmt_assignment(assignment)}")
        lines.append(f"   coefficients: {coefs}")
        lines.append(f"   R(model) = {fmt_complex(corr, d)}")
    verdict = "yes" if report.invariant else "no"
    lines.append(
        f"invariant: {verdict} (spread {report.spread:.3e} vs tolerance {report.tolerance:.0e})"
    )
    if report.invariant:
        lines.append(f"common correlation = {fmt_complex(report.correlations[0], d)}")
    csv_rows = [["assignment", "coefficients", "model_correlation"]] + [
        [
            fmt_assignment(a),
            " ".join(fmt_complex(c, d) for c in m.coef_),
            fmt_complex(corr, d),
        ]
        for a, m, corr in zip(report.assignments, report.models, report.correlations)
    ]
    _emit(args, payload, "\n".join(lines), csv_rows)


def cmd_fix_ties(args) -> None:
    records, _ = load_input(args)
    variable = 0 if args.variable == "v1" else 1
    result = break_ties(records, variable=variable)

    if args.out == "json":
        payload = {
            "variable": args.variable,
            "n_input": len(records),
            "n_removed": result.n_removed,
            "removed": [
                {"index": i, "v1": rec[0], "v2": rec[1]} for i, rec in result.removed
            ],
            "records": [list(r) for r in result.records],
            "policy": TIE_BREAK_POLICY,
        }
        print(json.dumps(payload, indent=2))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["v1", "v2"])
        writer.writerows(result.records)
    print(
        f"removed {result.n_removed} of {len(records)} record(s) to break "
        f"equal-cardinality ties in {args.variable}",
        file=sys.stderr,
    )
    for i, rec in result.removed:
        print(f"  removed index {i}: ({rec[0]}, {rec[1]})", file=sys.stderr)
    print(f"correction policy: {TIE_BREAK_POLICY}", file=sys.stderr)


# ---------------------------------------------------------------------------
# wiring

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="input CSV path")
    common.add_argument(
        "--format",
        choices=("records", "contingency"),
        default="records",
        help="input layout (default: records)",
    )
    common.add_argument(
        "--out",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--decimals", type=int, default=3, help="display decimals for text/csv output"
    )

    coding_opt = argparse.ArgumentParser(add_help=False)
    coding_opt.add_argument(
        "--coding",
        choices=("rank", "cardinality"),
        default="rank",
        help="code modulus convention (default: rank)",
    )

    parser = _Parser(prog="catcorr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi2", parents=[common], help="chi-square independence test")
    p.add_argument("--alpha", type=float, default=0.1, help="significance level")
    p.set_defaults(func=cmd_chi2)

    p = sub.add_parser("code", parents=[common, coding_opt], help="code categories as numbers")
    p.add_argument(
        "--all-permutations",
        action="store_true",
        help="emit one v1 column per phase assignment",
    )
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("corr", parents=[common, coding_opt], help="correlation sweep")
    p.add_argument("--emit-plot", metavar="PATH", help="write (re, im) sweep points as CSV")
    p.set_defaults(func=cmd_corr)

    p = sub.add_parser("model", parents=[common, coding_opt], help="least-squares models per assignment")
    p.add_argument("--degree", type=int, default=None, help="polynomial degree (default: classes - 1)")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("fix-ties", parents=[common], help="remove records to break cardinality ties")
    p.add_argument("--variable", choices=("v1", "v2"), default="v1", help="variable to correct")
    p.set_defaults(func=cmd_fix_ties)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not 0 <= args.decimals <= 12:
        print(f"error: --decimals must be in 0..12, got {args.decimals}", file=sys.stderr)
        return EXIT_DATA
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            args.func(args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return EXIT_OK
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
