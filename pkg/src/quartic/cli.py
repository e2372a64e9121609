"""Command line entry point: ``quartic <command> ...``.

Exit codes: 0 success, 1 internal error or failed verification,
2 inadmissible instance, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from quartic import lucas, oracle, pell
from quartic.errors import NotAdmissible, PerfectSquareInput
from quartic.solver import EquationInstance, Form, SolveReport, solve, validate

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_USAGE = 64

WORKERS_ENV = "QUARTIC_WORKERS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def _csv_list(kind):
    def parse(text: str):
        try:
            return [kind(part) for part in text.split(",") if part]
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad list {text!r}") from None
    return parse


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


class _Output:
    """Collects JSON-lines or CSV rows and writes them once to stdout or --out."""

    def __init__(self, fmt: str, path: str | None):
        self.fmt = fmt
        self.path = path
        self.buf = io.StringIO()
        self._writer = None

    def json(self, obj) -> None:
        self.buf.write(json.dumps(obj, sort_keys=True) + "\n")

    def header(self, header: list[str]) -> None:
        if self._writer is None:
            self._writer = csv.writer(self.buf, lineterminator="\n")
            self._writer.writerow(header)

    def row(self, header: list[str], values: list) -> None:
        self.header(header)
        self._writer.writerow(values)

    def close(self) -> None:
        text = self.buf.getvalue()
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


SOLUTION_HEADER = ["form", "A", "B", "C", "x", "y", "n", "coprime", "completeness"]


def _emit_report(out: _Output, report: SolveReport) -> None:
    if out.fmt == "json":
        out.json(report.to_dict())
        return
    inst = report.instance
    for s in report.solutions:
        out.row(
            SOLUTION_HEADER,
            [inst.form.value, inst.A, inst.B, inst.C, s.x, s.y, s.n, s.coprime, report.completeness],
        )
    out.header(SOLUTION_HEADER)


def _instance(args) -> EquationInstance:
    return EquationInstance(Form(args.form), args.A, args.B, args.C)


def cmd_solve(args) -> int:
    report = solve(_instance(args), heuristic_n_max=args.n_max)
    out = _Output(args.format, args.out)
    _emit_report(out, report)
    out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _instance(args)
    report = solve(inst, heuristic_n_max=args.n_max)
    found = {(s.x, s.y) for s in oracle.brute_force(inst, args.bound)}
    mine = report.solution_set()
    # solver solutions beyond the brute-force window are not comparable
    limit = (lambda x, y: y <= args.bound) if inst.form is Form.X2Y4 else (lambda x, y: x <= args.bound)
    mine_in_window = {s for s in mine if limit(*s)}
    match = mine_in_window == found
    out = _Output("json", args.out)
    out.json({
        "instance": report.to_dict()["instance"],
        "bound": str(args.bound),
        "solver": [[str(x), str(y)] for x, y in sorted(mine)],
        "oracle": [[str(x), str(y)] for x, y in sorted(found)],
        "match": match,
    })
    out.close()
    return EXIT_OK if match else EXIT_INTERNAL


def cmd_pell(args) -> int:
    out = _Output("json", args.out)
    if args.D is not None:
        cf = pell.cf_expand_sqrt(args.D)
        unit = pell.pell_unit(args.D)
        out.json({
            "D": str(args.D),
            "a0": str(cf.a0),
            "period": [str(a) for a in cf.period],
            "t1": str(unit.t1),
            "u1": str(unit.u1),
        })
    else:
        if args.A is None or args.B is None or args.C is None:
            raise UsageError("pell needs either --D or all of -A, -B, -C")
        fund = pell.minimal_solution(args.A, args.B, args.C)
        out.json({
            "A": str(args.A),
            "B": str(args.B),
            "C": str(args.C),
            "fundamental": None
            if fund is None
            else {"a": str(fund.a), "b": str(fund.b), "trace": str(fund.trace)},
        })
    out.close()
    return EXIT_OK


def cmd_lucas(args) -> int:
    out = _Output("json", args.out)
    row = {"t": str(args.t)}
    if args.k is not None:
        pair = lucas.lucas_uv(args.t, args.k)
        row.update(k=str(pair.k), U=str(pair.U), V=str(pair.V))
    if args.n is not None:
        row.update(n=str(args.n), P=str(lucas.p_value(args.t, args.n)), Q=str(lucas.q_value(args.t, args.n)))
    if args.k is None and args.n is None:
        raise UsageError("lucas needs -k and/or -n")
    out.json(row)
    out.close()
    return EXIT_OK


def cmd_scan_lemmas(args) -> int:
    if args.t_max < args.t_min or args.t_min < 3:
        raise UsageError("need 3 <= --t-min <= --t-max")
    violations = oracle.lemma_scan(args.t_min, args.t_max, args.n_max, workers=args.workers)
    out = _Output("json", args.out)
    for v in violations:
        out.json({"section": "violation", "t": str(v.t), "n": str(v.n), "kind": v.kind, "value": str(v.value)})
    probe = []
    if args.probe_even:
        probe = oracle.q_even_trace_probe(max(args.t_max, 4), args.n_max, t_min=max(args.t_min, 4),
                                          workers=args.workers)
        for v in probe:
            out.json({"section": "even_trace_probe", "t": str(v.t), "n": str(v.n), "kind": v.kind,
                      "value": str(v.value)})
    out.json({
        "section": "summary",
        "t_min": str(args.t_min),
        "t_max": str(args.t_max),
        "n_max": str(args.n_max),
        "violations": str(len(violations)),
        "probe_hits": str(len(probe)) if args.probe_even else None,
    })
    out.close()
    return EXIT_INTERNAL if violations else EXIT_OK


@dataclass(frozen=True)
class BatchJob:
    a_range: tuple[int, int]
    b_range: tuple[int, int]
    c_values: tuple[int, ...]
    forms: tuple[Form, ...]
    y_bound: int
    n_max: int = 99
    drop_triple: bool = False

    def grid(self):
        for form in self.forms:
            for A in range(self.a_range[0], self.a_range[1] + 1):
                for B in range(self.b_range[0], self.b_range[1] + 1):
                    for C in self.c_values:
                        yield EquationInstance(form, A, B, C)


def _order(inst: EquationInstance):
    return (inst.form.value, inst.A, inst.B, inst.C)


def run_instance(job: BatchJob, inst: EquationInstance) -> dict:
    """Solve one grid point and optionally compare against brute force."""
    row = {"form": inst.form.value, "A": str(inst.A), "B": str(inst.B), "C": str(inst.C)}
    try:
        validate(inst)
    except NotAdmissible as exc:
        row.update(status="skipped", reason=type(exc).__name__)
        return row
    try:
        report = solve(inst, heuristic_n_max=job.n_max)
    except (ArithmeticError, AssertionError) as exc:
        row.update(status="error", reason=f"{type(exc).__name__}: {exc}")
        return row
    solutions = report.solutions
    if job.drop_triple and report.r is not None:
        # harness self-test: forget every solution beyond the n = r candidate
        solutions = tuple(s for s in solutions if s.n == report.r)
    mine = {(s.x, s.y) for s in solutions}
    row.update(
        status="solved",
        solutions=[[str(s.x), str(s.y), str(s.n)] for s in solutions],
        theorem_bound=str(report.theorem_bound),
        completeness=str(report.completeness),
    )
    if job.y_bound > 0:
        found = {(s.x, s.y) for s in oracle.brute_force(inst, job.y_bound)}
        if inst.form is Form.X2Y4:
            mine = {s for s in mine if s[1] <= job.y_bound}
        else:
            mine = {s for s in mine if s[0] <= job.y_bound}
        row["oracle"] = "match" if mine == found else "mismatch"
    return row


def _run_instance(packed):
    return run_instance(*packed)


def run_batch(job: BatchJob, workers: int = 1) -> tuple[list[dict], dict]:
    """Rows in (form, A, B, C) order plus a summary mapping of counts."""
    instances = sorted(job.grid(), key=_order)
    packed = [(job, inst) for inst in instances]
    if workers > 1 and len(packed) > 1:
        with ProcessPoolExecutor(workers) as pool:
            rows = list(pool.map(_run_instance, packed, chunksize=max(1, len(packed) // (8 * workers))))
    else:
        rows = [_run_instance(p) for p in packed]
    summary = {
        "instances": sum(r["status"] != "skipped" for r in rows),
        "solved": sum(r["status"] == "solved" for r in rows),
        "with_solutions": sum(bool(r.get("solutions")) for r in rows),
        "skipped": sum(r["status"] == "skipped" for r in rows),
        "errors": sum(r["status"] == "error" for r in rows),
        "mismatches": sum(r.get("oracle") == "mismatch" for r in rows),
    }
    return rows, summary


BATCH_HEADER = ["form", "A", "B", "C", "status", "reason", "solutions", "theorem_bound", "completeness", "oracle"]


def cmd_batch(args) -> int:
    bad = [f for f in args.forms if f not in {m.value for m in Form}]
    if bad:
        raise UsageError(f"unknown form(s): {', '.join(bad)}")
    job = BatchJob(
        a_range=args.A,
        b_range=args.B,
        c_values=tuple(args.C),
        forms=tuple(Form(f) for f in args.forms),
        y_bound=args.y_bound,
        n_max=args.n_max,
        drop_triple=args.inject_mismatch,
    )
    for c in job.c_values:
        if c not in (1, 2, 4):
            raise UsageError(f"C={c} not in 1,2,4")
    rows, summary = run_batch(job, workers=args.workers)
    out = _Output(args.format, args.out)
    for row in rows:
        if out.fmt == "json":
            out.json(row)
        else:
            sols = ";".join(f"{x}:{y}:{n}" for x, y, n in row.get("solutions", []))
            out.row(BATCH_HEADER, [row.get(k, "") if k != "solutions" else sols for k in BATCH_HEADER])
    if out.fmt == "json":
        out.json({"summary": {k: str(v) for k, v in summary.items()}})
    else:
        sys.stderr.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    out.close()
    return EXIT_INTERNAL if summary["mismatches"] or summary["errors"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quartic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def instance_flags(p):
        p.add_argument("--form", choices=[f.value for f in Form], default="x2y4")
        p.add_argument("-A", type=_positive, required=True)
        p.add_argument("-B", type=_positive, required=True)
        p.add_argument("-C", type=int, help="defaults to 4 for --form x4y2")
        p.add_argument("--n-max", type=int, default=99, help="odd-n scan limit for uncertified x4y2 cases")

    p = sub.add_parser("solve", help="solve one instance")
    instance_flags(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="solve one instance and compare with brute force")
    instance_flags(p)
    p.add_argument("--bound", type=_positive, default=10**4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="solve a grid of instances")
    p.add_argument("-A", type=_int_range, default=(1, 30), metavar="LO:HI")
    p.add_argument("-B", type=_int_range, default=(1, 30), metavar="LO:HI")
    p.add_argument("-C", type=_csv_list(int), default=[1, 2, 4], metavar="1,2,4")
    p.add_argument("--forms", type=_csv_list(str), default=["x2y4", "x4y2"], metavar="x2y4,x4y2")
    p.add_argument("--y-bound", type=int, default=0, help="brute-force cross-check bound, 0 skips")
    p.add_argument("--n-max", type=int, default=99)
    p.add_argument("--workers", type=_positive, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.add_argument("--inject-mismatch", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("pell", help="Pell data for D, or the minimal solution of A z1^2 - B z2^2 = C")
    p.add_argument("--D", type=int)
    p.add_argument("-A", type=_positive)
    p.add_argument("-B", type=_positive)
    p.add_argument("-C", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("lucas", help="U_k, V_k and/or P_n, Q_n for trace t")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-k", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lucas)

    p = sub.add_parser("scan-lemmas", help="look for square P_n and Q_n with n > 3")
    p.add_argument("--t-min", type=int, default=3)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--n-max", type=int, default=99)
    p.add_argument("--probe-even", action="store_true", help="also list square Q_n at even traces")
    p.add_argument("--workers", type=_positive, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan_lemmas)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "form", None) is not None and args.C is None:
        if args.form != "x4y2":
            parser.error("-C is required for --form x2y4")
        args.C = 4
    if hasattr(args, "workers") and args.workers is None:
        args.workers = default_workers()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"quartic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotAdmissible, PerfectSquareInput) as exc:
        print(f"quartic: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"quartic: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ArithmeticError, AssertionError) as exc:
        print(f"quartic: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
