"""Command line: ``hcalg tables | classify | verify``.

Exit status is 0 when everything requested passed, 1 when a check failed
and 2 for usage errors (bad flags, unsupported types, unknown suites).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import HcalgError, UnknownSuite, UnsupportedType
from .suites import SUITES, RunConfig, classify_report, run_suite, tables_report


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="family", help="root system family: A, B, C, D, F or G")
    common.add_argument("--rank", type=int)
    common.add_argument("--k", help='parameters per orbit "a,b", "generic" or "geometric[:m1,m2[,m2alpha]]"')
    common.add_argument("--max-degree", type=int)
    common.add_argument("--dim-cap", type=int)
    common.add_argument("--lambda", dest="lam", help="comma separated Dynkin labels")
    common.add_argument("--format", dest="fmt", choices=["table", "json", "csv"], default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="hcalg", description="Exact checks for Hecke and enveloping algebra computations.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("tables", parents=[common], help="Casimir scalars on W-irreducibles and on irreps")
    sub.add_parser("classify", parents=[common], help="small / quasi-small classification of an irrep sweep")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", required=True, help=", ".join(sorted(SUITES)))
    return p


def _rows(command: str, report: dict) -> tuple[list[str], list[list]]:
    if command == "verify":
        head = ["name", "expect", "observed", "ok"]
        return head, [[c[h] for h in head] for c in report["checks"]]
    if command == "classify":
        rows = report["rows"]
        head = [k for k in rows[0] if k not in ("zero_weight_constituents",)] if rows else []
        return head, [[r[h] for h in head] for r in rows]
    head = ["kind", "name", "value"]
    out = [["omega_W", r["name"], r["value"]] for r in report["omega_W"]]
    out += [["omega_g", ",".join(map(str, r["labels"])), r["value"]] for r in report["omega_g"]]
    return head, out


def _cell(x) -> str:
    if isinstance(x, (list, tuple, dict)):
        return json.dumps(x, sort_keys=True, ensure_ascii=False)
    return str(x)


def render(command: str, report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    head, rows = _rows(command, report)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        for r in rows:
            w.writerow([_cell(x) for x in r])
        return buf.getvalue()
    cells = [head] + [[_cell(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(head))]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    p = _parser()
    args = p.parse_args(argv)
    cfg = RunConfig(
        family=args.family,
        rank=args.rank,
        k=args.k,
        max_degree=args.max_degree,
        dim_cap=args.dim_cap,
        lam=args.lam,
        seed=args.seed,
        fmt=args.fmt,
        out=args.out,
    )
    try:
        if args.command == "tables":
            report, ok = tables_report(cfg), True
        elif args.command == "classify":
            report, ok = classify_report(cfg), True
        else:
            report = run_suite(args.suite, cfg)
            ok = report["pass"]
    except (UnknownSuite, UnsupportedType, ValueError) as e:
        print(f"hcalg: {e}", file=sys.stderr)
        return 2
    except HcalgError as e:
        print(f"hcalg: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    text = render(args.command, report, args.fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
