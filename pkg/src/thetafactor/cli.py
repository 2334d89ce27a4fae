"""Command-line interface: dimensions, label sets and identity suites.

Exit codes: 0 pass, 1 identity failure, 2 rounding failure, 3 unbounded
enumeration, 64 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import itertools
import json
import os
import sys

from . import factorization as fz
from . import verlinde as vl
from .gluing import IncompatibleDimensionsError, verify_gluing
from .indexsets import (
    BundleExponents,
    LabelPair,
    StratumIndex,
    UnboundedIndexSetError,
    enumerate_A_delta,
    enumerate_A_double_prime,
    enumerate_A_general,
    enumerate_A_pq,
    enumerate_A_prime,
    enumerate_SA_prime,
)

EXIT_OK, EXIT_FAIL, EXIT_ROUNDING, EXIT_UNBOUNDED, EXIT_USAGE = 0, 1, 2, 3, 64

REPORT_FIELDS = ["name", "params", "lhs", "rhs", "residual", "passed", "mode"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be > 0")
    return value


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--tolerance", type=_positive_float,
                        default=float(os.environ.get("THETAFACTOR_TOLERANCE", "1e-6")),
                        help="relative tolerance (env THETAFACTOR_TOLERANCE)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--mode", choices=["float", "exact"], default=None)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--n", type=int)
    common.add_argument("--kappa", type=int)
    common.add_argument("--genus", type=int)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="thetafactor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_dim = sub.add_parser("dim", parents=[common], help="dimension formulas")
    p_dim.add_argument("target", choices=["svb", "spb", "vb", "pb", "gvb"])
    p_dim.add_argument("--aprime", type=_int_list, help="a' for spb, e.g. 0,1")
    p_dim.add_argument("--a", type=_int_list, help="a for pb; b is kappa - reversed(a)")

    p_enum = sub.add_parser("enumerate", parents=[common], help="list label sets")
    p_enum.add_argument("set", choices=["aprime", "adoubleprime", "saprime", "adelta", "apq", "ageneral"])
    p_enum.add_argument("--I", type=int, nargs="*", default=[], dest="I")
    p_enum.add_argument("--J", type=int, nargs="*", default=[], dest="J")
    p_enum.add_argument("--p", type=int)
    p_enum.add_argument("--q", type=int)
    p_enum.add_argument("--primed", action="store_true")
    p_enum.add_argument("--m-exp", type=_int_list, dest="m_exp")
    p_enum.add_argument("--l-exp", type=_int_list, dest="l_exp")
    p_enum.add_argument("--e", type=int, default=0)
    p_enum.add_argument("--d", type=int)
    p_enum.add_argument("--count", action="store_true", help="print the cardinality only")

    p_ver = sub.add_parser("verify", parents=[common], help="identity suites")
    p_ver.add_argument("suite", choices=["degeneration", "zagier", "zagier-matrix", "unitarity",
                                         "beta-compat", "main", "gluing", "all"])
    p_ver.add_argument("--rhs", choices=["corrected", "printed"], default="corrected")
    p_ver.add_argument("--m", type=int)
    p_ver.add_argument("--B", type=_int_list, help="column set, e.g. 0,2")
    p_ver.add_argument("--dims", choices=["unit", "verlinde"], default="unit")
    p_ver.add_argument("--dims-genus", type=int, default=2, dest="dims_genus")
    return parser


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


# ---- output

def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, float):
        return value
    return str(value)


def _report_record(r: fz.IdentityReport) -> dict:
    rec = {
        "name": r.name,
        "params": _jsonable(r.parameters),
        "lhs": _jsonable(r.lhs),
        "rhs": _jsonable(r.rhs),
        "residual": r.max_residual,
        "passed": bool(r.passed),
        "mode": r.mode,
    }
    for side in ("lhs", "rhs"):
        if isinstance(r.__dict__[side], float):
            rec[f"{side}_int"] = round(r.__dict__[side])
    if r.details:
        rec["details"] = _jsonable(r.details)
    return rec


def _label_record(x: LabelPair) -> dict:
    return {"a": list(x.a), "b": list(x.b)}


def _render(kind: str, payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        if kind == "reports":
            writer.writerow(REPORT_FIELDS)
            for rec in payload["reports"]:
                writer.writerow([json.dumps(rec[f], sort_keys=True) if f in ("params", "lhs", "rhs") else rec[f]
                                 for f in REPORT_FIELDS])
        elif kind == "labels":
            if "count" in payload:
                writer.writerow(["count"])
                writer.writerow([payload["count"]])
            else:
                writer.writerow(["a", "b"])
                for rec in payload["labels"]:
                    writer.writerow([" ".join(map(str, rec["a"])), " ".join(map(str, rec["b"]))])
        else:
            writer.writerow(["target", "params", "value", "raw", "residual"])
            writer.writerow([payload["target"], json.dumps(payload["params"], sort_keys=True),
                             payload["value"], repr(payload["raw"]), repr(payload["residual"])])
        return buf.getvalue()
    if kind == "reports":
        for rec in payload["reports"]:
            status = "PASS" if rec["passed"] else "FAIL"
            params = " ".join(f"{k}={v}" for k, v in rec["params"].items())
            buf.write(f"{status} {rec['name']} [{params}] lhs={rec['lhs']} rhs={rec['rhs']} "
                      f"residual={rec['residual']:.3g} ({rec['mode']})\n")
        passed = sum(r["passed"] for r in payload["reports"])
        buf.write(f"{passed}/{len(payload['reports'])} passed\n")
    elif kind == "labels":
        if "count" in payload:
            buf.write(f"{payload['count']}\n")
        else:
            for rec in payload["labels"]:
                buf.write(f"a={tuple(rec['a'])} b={tuple(rec['b'])}\n")
    else:
        buf.write(f"{payload['value']}  (raw {payload['raw']!r}, residual {payload['residual']:.3g})\n")
    return buf.getvalue()


# ---- commands

def cmd_dim(args) -> tuple[int, str, dict]:
    _need(args, "n", "kappa", "genus")
    n, k, g, tol = args.n, args.kappa, args.genus, args.tolerance
    params = {"n": n, "kappa": k, "genus": g}
    if args.target == "svb":
        res = vl.dim_svb(n, k, g, tol)
    elif args.target == "vb":
        res = vl.dim_vb(n, k, g, tol)
    elif args.target == "gvb":
        res = vl.dim_gvb(n, k, g, tol)
    elif args.target == "spb":
        _need(args, "aprime")
        params["aprime"] = list(args.aprime)
        res = vl.dim_spb(n, k, g, args.aprime, tol)
    else:
        _need(args, "a")
        x = LabelPair.from_a(args.a, k)
        params["a"], params["b"] = list(x.a), list(x.b)
        res = vl.dim_pb(n, k, g, x, tol)
    payload = {"target": args.target, "params": params, "value": res.value, "raw": res.raw,
               "residual": res.residual}
    return EXIT_OK, "dim", payload


def _labels_for(args) -> list[LabelPair]:
    _need(args, "n")
    n = args.n
    if args.set == "ageneral":
        if args.m_exp is None and args.l_exp is None:
            _need(args, "kappa")
            L = BundleExponents.delta(n, args.kappa)
        else:
            _need(args, "m_exp", "l_exp")
            d = args.d if args.d is not None else 0
            L = BundleExponents(n, args.m_exp, args.l_exp, args.e, d)
        return sorted(enumerate_A_general(L, StratumIndex(n, args.I, args.J)))
    _need(args, "kappa")
    k = args.kappa
    if args.set == "aprime":
        return sorted(enumerate_A_prime(n, k))
    if args.set == "adoubleprime":
        return sorted(enumerate_A_double_prime(n, k))
    if args.set == "saprime":
        return sorted(enumerate_SA_prime(n, k))
    if args.set == "adelta":
        return sorted(enumerate_A_delta(n, k, StratumIndex(n, args.I, args.J)))
    _need(args, "p", "q")
    return sorted(enumerate_A_pq(n, k, args.p, args.q, args.primed))


def cmd_enumerate(args) -> tuple[int, str, dict]:
    labels = _labels_for(args)
    payload = {"set": args.set}
    if args.count:
        payload["count"] = len(labels)
    else:
        payload["labels"] = [_label_record(x) for x in labels]
    return EXIT_OK, "labels", payload


def _suite_reports(suite: str, args) -> list[fz.IdentityReport]:
    tol = args.tolerance
    mode = args.mode
    if suite == "degeneration":
        _need(args, "n", "kappa", "genus")
        return [fz.verify_degeneration(args.n, args.kappa, args.genus, tol)]
    if suite == "zagier":
        _need(args, "n", "kappa")
        return fz.verify_zagier(args.n, args.kappa, mode or "float", args.rhs, tol)
    if suite in ("zagier-matrix", "unitarity"):
        _need(args, "m", "n")
        if args.B is not None:
            columns = [args.B]
        else:
            columns = list(itertools.combinations(range(args.m), args.n))
        if suite == "zagier-matrix":
            return [fz.verify_zagier_matrix(args.m, args.n, B, mode or "exact", tol) for B in columns]
        return [fz.verify_unitarity(args.m, args.n, B, mode or "float") for B in columns]
    if suite == "beta-compat":
        _need(args, "n", "kappa", "genus")
        return fz.verify_beta_dim_compat(args.n, args.kappa, args.genus, tol)
    if suite == "main":
        _need(args, "n", "kappa", "genus")
        return [fz.verify_main_theorem_dims(args.n, args.kappa, args.genus, tol)]
    if suite == "gluing":
        _need(args, "n", "kappa")
        dims = "unit" if args.dims == "unit" else ("verlinde", args.dims_genus)
        return [verify_gluing(args.n, args.kappa, dims, args.seed)]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args) -> tuple[int, str, dict]:
    if args.suite == "all":
        _need(args, "n", "kappa", "genus")
        if args.m is None:
            args.m = args.n + args.kappa
        reports = []
        for suite in ("degeneration", "zagier", "zagier-matrix", "unitarity", "beta-compat", "main", "gluing"):
            reports.extend(_suite_reports(suite, args))
    else:
        reports = _suite_reports(args.suite, args)
    records = [_report_record(r) for r in reports]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    return code, "reports", {"suite": args.suite, "passed": code == EXIT_OK, "reports": records}


COMMANDS = {"dim": cmd_dim, "enumerate": cmd_enumerate, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        code, kind, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"thetafactor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except vl.RoundingError as exc:
        print(f"thetafactor: rounding failure: {exc}", file=sys.stderr)
        return EXIT_ROUNDING
    except UnboundedIndexSetError as exc:
        print(f"thetafactor: unbounded: {exc}", file=sys.stderr)
        return EXIT_UNBOUNDED
    except (ValueError, IncompatibleDimensionsError) as exc:
        print(f"thetafactor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(kind, payload, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        with contextlib.suppress(BrokenPipeError):
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
